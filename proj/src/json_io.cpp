#include "siegel/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace siegel {

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw std::invalid_argument("malformed JSON: " + what);
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    malformed("expected a rational string \"num/den\"");
}

Json to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RationalMatrix rational_matrix_from_json(const Json& j) {
    if (!j.is_array()) malformed("expected a matrix of rationals");
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j[0].size() : 0;
    RationalMatrix m(rows, cols);
    for (std::size_t a = 0; a < rows; ++a) {
        if (!j[a].is_array() || j[a].size() != cols) malformed("ragged rational matrix");
        for (std::size_t b = 0; b < cols; ++b) m(a, b) = rational_from_json(j[a][b]);
    }
    return m;
}

} // namespace

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix int_matrix_from_json(const Json& j) {
    if (!j.is_array()) malformed("expected an integer matrix");
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? (j[0].is_array() ? j[0].size() : 0) : 0;
    IntMatrix m(rows, cols);
    for (std::size_t a = 0; a < rows; ++a) {
        if (!j[a].is_array() || j[a].size() != cols) malformed("ragged integer matrix");
        for (std::size_t b = 0; b < cols; ++b) {
            if (!j[a][b].is_number_integer()) malformed("non-integer matrix entry");
            m(a, b) = j[a][b].get<long>();
        }
    }
    return m;
}

Json to_json(const HalfIntegralMatrix& t) {
    return to_json(t.doubled());
}

HalfIntegralMatrix half_integral_from_json(const Json& j) {
    return HalfIntegralMatrix(int_matrix_from_json(j));
}

Json to_json(const FourierExpansion& f) {
    Json out;
    out["degree"] = f.degree();
    out["trace_bound"] = f.trace_bound();
    if (f.shape().is_scalar())
        out["shape"] = "scalar";
    else
        out["shape"] = Json{{"compound", f.shape().compound_order}};
    const auto& meta = f.meta();
    out["meta"] = Json{{"weight", meta.weight ? Json(to_string(*meta.weight)) : Json(nullptr)},
                       {"level", meta.level ? Json(*meta.level) : Json(nullptr)},
                       {"character", meta.character ? Json(*meta.character) : Json(nullptr)}};
    Json coeffs = Json::array();
    for (const auto& [t, block] : f.coefficients()) {
        Json entry;
        entry["t2"] = to_json(t);
        entry["value"] = f.shape().is_scalar() ? Json(to_string(block(0, 0))) : to_json(block);
        coeffs.push_back(std::move(entry));
    }
    out["coeffs"] = std::move(coeffs);
    return out;
}

FourierExpansion expansion_from_json(const Json& j) {
    try {
        if (!j.is_object()) malformed("expansion must be an object");
        const int degree = j.at("degree").get<int>();
        const long bound = j.at("trace_bound").get<long>();
        Shape shape;
        const Json& s = j.at("shape");
        if (s.is_string()) {
            if (s.get<std::string>() != "scalar") malformed("unknown shape '" + s.get<std::string>() + "'");
        } else if (s.is_object()) {
            shape = Shape::compound(s.at("compound").get<int>());
        } else {
            malformed("shape must be \"scalar\" or {\"compound\": r}");
        }
        FourierExpansion f(degree, bound, shape);
        if (j.contains("meta") && !j["meta"].is_null()) {
            const Json& meta = j["meta"];
            if (meta.contains("weight") && !meta["weight"].is_null())
                f.meta().weight = rational_from_json(meta["weight"]);
            if (meta.contains("level") && !meta["level"].is_null()) f.meta().level = meta["level"].get<long>();
            if (meta.contains("character") && !meta["character"].is_null())
                f.meta().character = meta["character"].get<std::string>();
        }
        for (const auto& entry : j.at("coeffs")) {
            const auto t = half_integral_from_json(entry.at("t2"));
            const Json& v = entry.at("value");
            if (shape.is_scalar()) {
                if (v.is_array()) malformed("matrix value in a scalar expansion");
                f.set(t, rational_from_json(v));
            } else {
                f.set(t, rational_matrix_from_json(v));
            }
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        malformed(e.what());
    }
}

Json to_json(const GramLattice& q) {
    return Json{{"rank", q.rank()}, {"gram", to_json(q.gram())}};
}

GramLattice gram_from_json(const Json& j) {
    try {
        GramLattice q(int_matrix_from_json(j.at("gram")));
        if (j.contains("rank") && j["rank"].get<int>() != q.rank()) malformed("rank does not match the Gram matrix");
        return q;
    } catch (const nlohmann::json::exception& e) {
        malformed(e.what());
    }
}

Json to_json(const Valuation& v) {
    return v.is_infinite() ? Json("inf") : Json(v.value());
}

Json to_json(const CongruenceReport& r) {
    return Json{{"p", r.p},
                {"m", r.m},
                {"holds", r.holds},
                {"min_valuation", to_json(r.min_valuation)},
                {"witness_t2", r.witness ? to_json(*r.witness) : Json(nullptr)},
                {"bound", r.bound},
                {"normalized", r.normalized}};
}

Json to_json(const CosetRep& c) {
    return Json{{"cell", c.cell}, {"b", to_json(c.b)}, {"a", to_json(c.a)}, {"mat", to_json(c.mat.mat())}};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("'" + path + "': " + e.what());
    }
}

} // namespace siegel
