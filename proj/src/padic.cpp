#include "siegel/padic.hpp"

#include "siegel/diffops.hpp"
#include "siegel/theta.hpp"

#include <stdexcept>

namespace siegel {

long Valuation::value() const {
    if (infinite_) throw std::logic_error("valuation is infinite");
    return value_;
}

std::string Valuation::to_string() const {
    return infinite_ ? "inf" : std::to_string(value_);
}

namespace {

void require_odd_prime(long p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
}

long integer_valuation(const Integer& x, long p) {
    Integer q = x;
    long v = 0;
    while (mpz_divisible_ui_p(q.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(p));
        ++v;
    }
    return v;
}

Valuation block_valuation(const RationalMatrix& block, long p) {
    Valuation best = Valuation::infinity();
    for (const auto& x : block.data()) best = std::min(best, vp(x, p));
    return best;
}

Integer int_pow(long base, long e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return out;
}

} // namespace

Valuation vp(const Rational& x, long p) {
    require_odd_prime(p);
    if (x == 0) return Valuation::infinity();
    return Valuation(integer_valuation(x.get_num(), p) - integer_valuation(x.get_den(), p));
}

Valuation vp_expansion(const FourierExpansion& f, long p) {
    require_odd_prime(p);
    Valuation best = Valuation::infinity();
    for (const auto& [t, block] : f.coefficients()) best = std::min(best, block_valuation(block, p));
    return best;
}

CongruenceReport congruent(const FourierExpansion& f, const FourierExpansion& g, long p, long m, bool normalized) {
    require_odd_prime(p);
    if (f.degree() != g.degree()) throw std::invalid_argument("congruent: degree mismatch");
    if (!(f.shape() == g.shape())) throw std::invalid_argument("congruent: shape mismatch");

    CongruenceReport rep;
    rep.p = p;
    rep.m = m;
    rep.normalized = normalized;
    rep.bound = std::min(f.trace_bound(), g.trace_bound());

    const auto diff = subtract(truncate(f, rep.bound), truncate(g, rep.bound));
    for (const auto& [t, block] : diff.coefficients()) {
        const Valuation v = block_valuation(block, p);
        if (v < rep.min_valuation) {
            rep.min_valuation = v;
            rep.witness = t;
        }
    }
    rep.offset = normalized ? vp_expansion(truncate(f, rep.bound), p) : Valuation(0);
    const Valuation needed = rep.offset.is_infinite() ? Valuation::infinity() : Valuation(m + rep.offset.value());
    rep.holds = rep.min_valuation >= needed;
    return rep;
}

FourierExpansion frobenius_descent(const FourierExpansion& g, long p) {
    require_odd_prime(p);
    if (!g.shape().is_scalar()) throw std::invalid_argument("frobenius_descent: input must be scalar-shaped");
    if (vp_expansion(g, p) < Valuation(0))
        throw std::invalid_argument("frobenius_descent: coefficients must be p-integral");
    return u_p(pow(g, static_cast<unsigned long>(p)), p);
}

FourierExpansion script_e(int i, const FourierExpansion& f_base, long k, long p) {
    require_odd_prime(p);
    if (i < 1) throw std::invalid_argument("script_e: i must be >= 1");
    if (k < 1) throw std::invalid_argument("script_e: k must be >= 1");
    if (!f_base.shape().is_scalar()) throw std::invalid_argument("script_e: base form must be scalar-shaped");
    if (f_base.meta().weight && *f_base.meta().weight != Rational(p - 1))
        throw std::invalid_argument("script_e: base form must have weight p - 1");
    const auto one = FourierExpansion::constant(f_base.degree(), f_base.trace_bound());
    if (!congruent(f_base, one, p, 1, false).holds)
        throw std::invalid_argument("script_e: base form is not congruent to 1 mod p");

    // prod_{j<i} F^{k p^j} has total exponent k (p^i - 1) / (p - 1).
    const Integer exponent = Integer(k) * (int_pow(p, i) - 1) / (p - 1);
    if (!exponent.fits_ulong_p()) throw std::invalid_argument("script_e: exponent too large");
    auto e = pow(f_base, exponent.get_ui());
    e.meta().weight = Rational(Integer(k) * (int_pow(p, i) - 1));
    return e;
}

std::vector<Valuation> limit_profile(const std::vector<FourierExpansion>& seq, const FourierExpansion& f, long p) {
    if (seq.empty()) throw std::invalid_argument("limit_profile: empty sequence");
    std::vector<Valuation> out;
    out.reserve(seq.size());
    for (const auto& fm : seq) out.push_back(congruent(fm, f, p, 0, false).min_valuation);
    return out;
}

Theorem41Report theorem41_check(const FourierExpansion& f, const Rational& k, long p, long m, int r, long m_dilate,
                                const FourierExpansion& f_p_minus_1) {
    require_odd_prime(p);
    if (m < 1) throw std::invalid_argument("theorem41_check: m must be >= 1");
    if (m_dilate < 1) throw std::invalid_argument("theorem41_check: m_dilate must be >= 1");
    if (!f.shape().is_scalar() || !f_p_minus_1.shape().is_scalar())
        throw std::invalid_argument("theorem41_check: inputs must be scalar-shaped");
    if (f_p_minus_1.degree() != f.degree())
        throw std::invalid_argument("theorem41_check: F_{p-1} must have the degree of f");
    if (vp_expansion(f, p) < Valuation(0))
        throw std::invalid_argument("theorem41_check: f must have p-integral coefficients");

    const Integer dilation = int_pow(p, m_dilate - 1);
    const Integer power = int_pow(p, m - 1);
    if (!dilation.fits_slong_p() || !power.fits_ulong_p())
        throw std::invalid_argument("theorem41_check: parameters too large");
    const long c = dilation.get_si();

    // g after dilation must cover f's whole trace range.
    const long needed = (f.trace_bound() + c - 1) / c;
    if (f_p_minus_1.trace_bound() < needed)
        throw std::invalid_argument("theorem41_check: F_{p-1} trace bound too small for the comparison bound");
    const auto base = truncate(f_p_minus_1, needed);
    const auto one = FourierExpansion::constant(base.degree(), base.trace_bound());
    if (!congruent(base, one, p, 1, false).holds)
        throw std::invalid_argument("theorem41_check: F_{p-1} is not congruent to 1 mod p");

    const auto g = dilate(pow(base, power.get_ui()), c);
    const Rational l = Rational(Integer(p - 1) * power);
    const BracketParams params{f.degree(), r, k, l};
    params.validate();

    const Rational lead = c_poly(r, l - make_rational(r - 1, 2));
    if (lead == 0) throw std::domain_error("theorem41_check: leading bracket coefficient vanishes");
    const long nu = vp(lead, p).value();

    auto bracket = truncate(rc_bracket(f, g, params), f.trace_bound());
    auto reference = scale(bracket_weights(params)[r], theta_r(f, r));

    auto report = congruent(bracket, reference, p, m + nu, false);
    return Theorem41Report{report, nu, l, m, std::move(bracket), std::move(reference)};
}

Theorem41Report theorem41_check(const FourierExpansion& f, const Rational& k, long p, long m, int r, long m_dilate) {
    require_odd_prime(p);
    if (m_dilate < 1) throw std::invalid_argument("theorem41_check: m_dilate must be >= 1");
    const Integer dilation = int_pow(p, m_dilate - 1);
    const long needed = dilation.fits_slong_p() ? (f.trace_bound() + dilation.get_si() - 1) / dilation.get_si() : 1;
    return theorem41_check(f, k, p, m, r, m_dilate, special_theta(p, f.degree(), needed));
}

} // namespace siegel
