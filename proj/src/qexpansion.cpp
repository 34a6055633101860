#include "siegel/qexpansion.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace siegel {

namespace {

std::size_t block_size_for(int degree, Shape shape) {
    if (shape.is_scalar()) return 1;
    if (shape.compound_order < 1 || shape.compound_order > degree)
        throw std::invalid_argument("compound order must satisfy 1 <= r <= degree");
    return binomial(degree, shape.compound_order).get_ui();
}

void check_compatible(const FourierExpansion& f, const FourierExpansion& g, const char* op) {
    if (f.degree() != g.degree()) throw std::invalid_argument(std::string(op) + ": degree mismatch");
    if (!(f.shape() == g.shape())) throw std::invalid_argument(std::string(op) + ": shape mismatch");
}

std::optional<Rational> sum_weights(const ExpansionMeta& a, const ExpansionMeta& b) {
    if (a.weight && b.weight) return *a.weight + *b.weight;
    return std::nullopt;
}

} // namespace

FourierExpansion::FourierExpansion(int degree, long trace_bound, Shape shape)
    : degree_(degree), bound_(trace_bound), shape_(shape), block_size_(0) {
    if (degree < 1) throw std::invalid_argument("expansion degree must be >= 1");
    if (trace_bound < 0) throw std::invalid_argument("expansion trace bound must be >= 0");
    block_size_ = block_size_for(degree, shape);
}

FourierExpansion FourierExpansion::constant(int degree, long trace_bound, const Rational& c) {
    FourierExpansion f(degree, trace_bound);
    f.set(HalfIntegralMatrix::zero(degree), c);
    return f;
}

FourierExpansion FourierExpansion::from_series(const std::vector<Rational>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("from_series: empty coefficient list");
    FourierExpansion f(1, static_cast<long>(coeffs.size()) - 1);
    for (std::size_t t = 0; t < coeffs.size(); ++t) f.set(index1(static_cast<long>(t)), coeffs[t]);
    return f;
}

RationalMatrix FourierExpansion::coefficient(const HalfIntegralMatrix& t) const {
    auto it = coeffs_.find(t);
    return it == coeffs_.end() ? RationalMatrix(block_size_, block_size_) : it->second;
}

Rational FourierExpansion::scalar(const HalfIntegralMatrix& t) const {
    if (!shape_.is_scalar()) throw std::logic_error("scalar(): expansion is not scalar-shaped");
    auto it = coeffs_.find(t);
    return it == coeffs_.end() ? Rational(0) : it->second(0, 0);
}

Rational FourierExpansion::scalar(long t) const {
    if (degree_ != 1) throw std::logic_error("scalar(long): expansion is not of degree 1");
    return scalar(index1(t));
}

void FourierExpansion::check_index(const HalfIntegralMatrix& t) const {
    if (t.degree() != degree_) throw std::invalid_argument("index degree does not match expansion degree");
    if (t.trace() > bound_) throw std::invalid_argument("index trace exceeds trace bound");
}

void FourierExpansion::check_block(const RationalMatrix& block) const {
    if (block.rows() != block_size_ || block.cols() != block_size_)
        throw std::invalid_argument("coefficient block has the wrong dimensions");
}

void FourierExpansion::set(const HalfIntegralMatrix& t, RationalMatrix block) {
    check_index(t);
    if (!is_psd(t)) throw std::invalid_argument("index is not positive semidefinite");
    check_block(block);
    if (block.is_zero())
        coeffs_.erase(t);
    else
        coeffs_.insert_or_assign(t, std::move(block));
}

void FourierExpansion::set(const HalfIntegralMatrix& t, const Rational& value) {
    if (!shape_.is_scalar()) throw std::invalid_argument("scalar value given for a compound-shaped expansion");
    set(t, RationalMatrix(1, 1, value));
}

void FourierExpansion::accumulate(const HalfIntegralMatrix& t, const RationalMatrix& block) {
    check_index(t);
    check_block(block);
    if (block.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(t, block);
    if (inserted) return;
    it->second += block;
    if (it->second.is_zero()) coeffs_.erase(it);
}

HalfIntegralMatrix index1(long t) {
    return HalfIntegralMatrix(IntMatrix{{2 * t}});
}

FourierExpansion truncate(const FourierExpansion& f, long bound) {
    if (bound > f.trace_bound()) throw std::invalid_argument("truncate: bound exceeds the expansion's bound");
    FourierExpansion out(f.degree(), bound, f.shape());
    out.meta() = f.meta();
    for (const auto& [t, block] : f.coefficients()) {
        if (t.trace() > bound) break;
        out.accumulate(t, block);
    }
    return out;
}

FourierExpansion add(const FourierExpansion& f, const FourierExpansion& g) {
    check_compatible(f, g, "add");
    const long bound = std::min(f.trace_bound(), g.trace_bound());
    FourierExpansion out = truncate(f, bound);
    if (f.meta().weight != g.meta().weight) out.meta().weight.reset();
    for (const auto& [t, block] : g.coefficients()) {
        if (t.trace() > bound) break;
        out.accumulate(t, block);
    }
    return out;
}

FourierExpansion subtract(const FourierExpansion& f, const FourierExpansion& g) {
    return add(f, scale(-1, g));
}

FourierExpansion scale(const Rational& c, const FourierExpansion& f) {
    FourierExpansion out(f.degree(), f.trace_bound(), f.shape());
    out.meta() = f.meta();
    if (c == 0) return out;
    for (const auto& [t, block] : f.coefficients()) out.accumulate(t, block * c);
    return out;
}

FourierExpansion mul(const FourierExpansion& f, const FourierExpansion& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("mul: degree mismatch");
    if (!f.shape().is_scalar() && !g.shape().is_scalar())
        throw std::invalid_argument("mul: at least one operand must be scalar-shaped");
    const bool f_scalar = f.shape().is_scalar();
    const Shape shape = f_scalar ? g.shape() : f.shape();
    const long bound = std::min(f.trace_bound(), g.trace_bound());

    FourierExpansion out(f.degree(), bound, shape);
    out.meta().weight = sum_weights(f.meta(), g.meta());

    // Maps are ordered by trace first, so the inner loop can stop early.
    for (const auto& [t1, a] : f.coefficients()) {
        if (t1.trace() > bound) break;
        for (const auto& [t2, b] : g.coefficients()) {
            if (t1.trace() + t2.trace() > bound) break;
            out.accumulate(t1 + t2, f_scalar ? b * a(0, 0) : a * b(0, 0));
        }
    }
    return out;
}

FourierExpansion pow(const FourierExpansion& f, unsigned long e) {
    if (!f.shape().is_scalar()) throw std::invalid_argument("pow: expansion must be scalar-shaped");
    FourierExpansion result = FourierExpansion::constant(f.degree(), f.trace_bound());
    result.meta().weight = Rational(0);
    FourierExpansion base = f;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    result.meta().level = f.meta().level;
    result.meta().character = f.meta().character;
    if (!f.meta().weight) result.meta().weight.reset();
    return result;
}

FourierExpansion u_p(const FourierExpansion& f, long p) {
    if (p < 2) throw std::invalid_argument("u_p: p must be >= 2");
    FourierExpansion out(f.degree(), f.trace_bound() / p, f.shape());
    out.meta() = f.meta();
    for (const auto& [t, block] : f.coefficients())
        if (t.divisible_by(p)) out.accumulate(t.divided(p), block);
    return out;
}

FourierExpansion dilate(const FourierExpansion& f, long c) {
    if (c < 1) throw std::invalid_argument("dilate: factor must be >= 1");
    FourierExpansion out(f.degree(), f.trace_bound() * c, f.shape());
    out.meta() = f.meta();
    if (out.meta().level) *out.meta().level *= c;
    for (const auto& [t, block] : f.coefficients()) out.accumulate(t.scaled(c), block);
    return out;
}

Rational bernoulli(int k) {
    if (k < 0) throw std::invalid_argument("bernoulli: negative index");
    std::vector<Rational> b(k + 1);
    b[0] = 1;
    for (int m = 1; m <= k; ++m) {
        Rational s = 0;
        for (int j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * b[j];
        b[m] = -s / (m + 1);
    }
    return b[k];
}

FourierExpansion eisenstein1(int k, long bound) {
    if (k < 4 || k % 2 != 0) throw std::invalid_argument("eisenstein1: weight must be even and >= 4");
    if (bound < 0) throw std::invalid_argument("eisenstein1: negative bound");
    const Rational factor = Rational(-2 * k) / bernoulli(k);
    FourierExpansion e(1, bound);
    e.meta().weight = Rational(k);
    e.meta().level = 1;
    e.set(index1(0), Rational(1));
    for (long m = 1; m <= bound; ++m) {
        Integer sigma = 0;
        for (long d = 1; d <= m; ++d) {
            if (m % d != 0) continue;
            Integer term;
            mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k - 1));
            sigma += term;
        }
        e.set(index1(m), factor * Rational(sigma));
    }
    return e;
}

FourierExpansion delta1(long bound) {
    const auto e4 = eisenstein1(4, bound);
    const auto e6 = eisenstein1(6, bound);
    auto d = scale(Rational(1, 1728), subtract(pow(e4, 3), pow(e6, 2)));
    d.meta().weight = Rational(12);
    d.meta().level = 1;
    return d;
}

} // namespace siegel
