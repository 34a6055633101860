#include "cli.hpp"

#include "siegel/diffops.hpp"
#include "siegel/json_io.hpp"
#include "siegel/padic.hpp"
#include "siegel/qexpansion.hpp"
#include "siegel/symplectic.hpp"
#include "siegel/theta.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <stdexcept>

namespace siegel::cli {

namespace {

struct Options {
    std::string out_path;
    unsigned threads = 1;

    std::string f_path, g_path, gram_path, special_path, value;
    std::vector<std::string> seq_paths;
    int degree = 0;
    long trace_bound = -1;
    long prime = 0;
    long m = 1;
    long m_dilate = 1;
    int r = 1;
    unsigned long exponent = 0;
    long factor = 1;
    int weight = 0;
    int rank = 0;
    std::string k_text = "0", l_text = "0";
    bool plain = false, normalized = false, count_only = false;
};

// Result of a subcommand: the JSON document and whether the requested check passed.
struct Outcome {
    Json doc;
    bool passed = true;
};

FourierExpansion load_expansion(const std::string& path) {
    return expansion_from_json(read_json_file(path));
}

void require_prime(long p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("--prime must be an odd prime");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact truncated Fourier expansions of Siegel modular forms and their p-adic congruences", "siegel"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--out", o.out_path, "Write JSON here instead of standard output");
    app.add_option("--threads", o.threads, "Cap on worker threads")->check(CLI::PositiveNumber);

    std::function<Outcome()> action;
    auto sub = [&](const char* name, const char* help, std::function<Outcome()> fn) {
        auto* s = app.add_subcommand(name, help);
        s->callback([&action, fn] { action = fn; });
        return s;
    };

    auto* theta = sub("theta", "Theta series of a Gram lattice", [&] {
        auto q = gram_from_json(read_json_file(o.gram_path));
        return Outcome{to_json(rep_numbers(q, o.degree, o.trace_bound, o.threads))};
    });
    theta->add_option("--gram", o.gram_path)->required();
    theta->add_option("--degree", o.degree)->required();
    theta->add_option("--trace-bound", o.trace_bound)->required();

    auto* mulc = sub("mul", "Product of two expansions", [&] {
        return Outcome{to_json(mul(load_expansion(o.f_path), load_expansion(o.g_path)))};
    });
    mulc->add_option("--f", o.f_path)->required();
    mulc->add_option("--g", o.g_path)->required();

    auto* powc = sub("pow", "Power of a scalar expansion", [&] {
        return Outcome{to_json(pow(load_expansion(o.f_path), o.exponent))};
    });
    powc->add_option("--f", o.f_path)->required();
    powc->add_option("--exponent", o.exponent)->required();

    auto* up = sub("up", "Hecke operator U(p)", [&] {
        require_prime(o.prime);
        return Outcome{to_json(u_p(load_expansion(o.f_path), o.prime))};
    });
    up->add_option("--f", o.f_path)->required();
    up->add_option("--prime", o.prime)->required();

    auto* dil = sub("dilate", "q^T -> q^{cT}", [&] {
        return Outcome{to_json(dilate(load_expansion(o.f_path), o.factor))};
    });
    dil->add_option("--f", o.f_path)->required();
    dil->add_option("--factor", o.factor)->required();

    auto* thop = sub("thetaop", "Compound theta operator of order r", [&] {
        return Outcome{to_json(theta_r(load_expansion(o.f_path), o.r))};
    });
    thop->add_option("--f", o.f_path)->required();
    thop->add_option("--r", o.r)->required();

    auto* br = sub("bracket", "Rankin-Cohen bracket D(f, g)", [&] {
        auto f = load_expansion(o.f_path);
        auto g = load_expansion(o.g_path);
        BracketParams params{f.degree(), o.r, parse_rational(o.k_text), parse_rational(o.l_text)};
        return Outcome{to_json(rc_bracket(f, g, params))};
    });
    br->add_option("--f", o.f_path)->required();
    br->add_option("--g", o.g_path)->required();
    br->add_option("--r", o.r)->required();
    br->add_option("--k", o.k_text, "Weight of f (rational)")->required();
    br->add_option("--l", o.l_text, "Weight of g (rational)")->required();

    auto* vpc = sub("vp", "p-adic valuation of a rational or an expansion", [&] {
        require_prime(o.prime);
        if (o.f_path.empty() == o.value.empty()) throw std::invalid_argument("give exactly one of --f or --value");
        const Valuation v =
            o.value.empty() ? vp_expansion(load_expansion(o.f_path), o.prime) : vp(parse_rational(o.value), o.prime);
        return Outcome{Json{{"p", o.prime}, {"valuation", to_json(v)}}};
    });
    vpc->add_option("--f", o.f_path);
    vpc->add_option("--value", o.value);
    vpc->add_option("--prime", o.prime)->required();

    auto* cong = sub("congruent", "Check F == G mod p^m", [&] {
        require_prime(o.prime);
        auto rep = congruent(load_expansion(o.f_path), load_expansion(o.g_path), o.prime, o.m, o.normalized);
        return Outcome{to_json(rep), rep.holds};
    });
    cong->add_option("--f", o.f_path)->required();
    cong->add_option("--g", o.g_path)->required();
    cong->add_option("--prime", o.prime)->required();
    cong->add_option("--m", o.m)->required();
    auto* plain_flag = cong->add_flag("--plain", o.plain, "Offset 0 (default)");
    cong->add_flag("--normalized", o.normalized, "Offset nu_p(F)")->excludes(plain_flag);

    auto* frob = sub("frobenius", "(G^p) | U(p)", [&] {
        require_prime(o.prime);
        return Outcome{to_json(frobenius_descent(load_expansion(o.g_path), o.prime))};
    });
    frob->add_option("--g", o.g_path)->required();
    frob->add_option("--prime", o.prime)->required();

    auto* lim = sub("limit", "Valuation profile of a sequence against a target", [&] {
        require_prime(o.prime);
        std::vector<FourierExpansion> seq;
        for (const auto& path : o.seq_paths) seq.push_back(load_expansion(path));
        Json profile = Json::array();
        for (const auto& v : limit_profile(seq, load_expansion(o.f_path), o.prime)) profile.push_back(to_json(v));
        return Outcome{Json{{"p", o.prime}, {"profile", profile}}};
    });
    lim->add_option("--seq", o.seq_paths)->required();
    lim->add_option("--f", o.f_path)->required();
    lim->add_option("--prime", o.prime)->required();

    auto* thm = sub("thm41", "Bracket against the theta operator mod p^m", [&] {
        require_prime(o.prime);
        auto f = load_expansion(o.f_path);
        const Rational k = parse_rational(o.k_text);
        auto res = o.special_path.empty()
                       ? theorem41_check(f, k, o.prime, o.m, o.r, o.m_dilate)
                       : theorem41_check(f, k, o.prime, o.m, o.r, o.m_dilate, load_expansion(o.special_path));
        Json doc = to_json(res.report);
        doc["nu"] = res.nu;
        doc["weight_l"] = to_string(res.weight_l);
        return Outcome{doc, res.report.holds};
    });
    thm->add_option("--f", o.f_path)->required();
    thm->add_option("--k", o.k_text, "Weight of f (rational)")->required();
    thm->add_option("--prime", o.prime)->required();
    thm->add_option("--m", o.m)->required();
    thm->add_option("--r", o.r)->required();
    thm->add_option("--m-dilate", o.m_dilate)->required();
    thm->add_option("--special", o.special_path, "Expansion to use as F_{p-1} (default: theta of A_{p-1}+A_{p-1})");

    auto* cos = sub("cosets", "Coset representatives of Gamma_0(p) in the full modular group, mod p", [&] {
        require_prime(o.prime);
        const auto reps = coset_reps(o.degree, o.prime);
        if (o.count_only) return Outcome{Json{{"count", reps.size()}}};
        Json list = Json::array();
        for (const auto& c : reps) list.push_back(to_json(c));
        return Outcome{list};
    });
    cos->add_option("--degree", o.degree)->required();
    cos->add_option("--prime", o.prime)->required();
    cos->add_flag("--count-only", o.count_only);

    auto* eis = sub("eisenstein", "Degree-1 Eisenstein series E_k", [&] {
        return Outcome{to_json(eisenstein1(o.weight, o.trace_bound))};
    });
    eis->add_option("--k", o.weight)->required();
    eis->add_option("--trace-bound", o.trace_bound)->required();

    auto* del = sub("delta", "Degree-1 Delta", [&] { return Outcome{to_json(delta1(o.trace_bound))}; });
    del->add_option("--trace-bound", o.trace_bound)->required();

    auto* ga = sub("gram-a", "Gram matrix of the root lattice A_m", [&] { return Outcome{to_json(gram_a(o.rank))}; });
    ga->add_option("--rank", o.rank)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    Outcome outcome;
    try {
        outcome = action();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    const std::string text = outcome.doc.dump(2) + "\n";
    if (o.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(o.out_path);
        if (!file) {
            err << "error: cannot write '" << o.out_path << "'\n";
            return kUsageError;
        }
        file << text;
    }
    return outcome.passed ? 0 : kCheckFailed;
}

} // namespace siegel::cli
