#include "siegel/diffops.hpp"

#include "siegel/halfint.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace siegel {

void BracketParams::validate() const {
    if (n < 1) throw std::invalid_argument("bracket degree must be >= 1");
    if (r < 1 || r > n) throw std::invalid_argument("bracket minor order must satisfy 1 <= r <= n");
}

FourierExpansion theta_r(const FourierExpansion& f, int r) {
    if (!f.shape().is_scalar()) throw std::invalid_argument("theta_r: input must be scalar-shaped");
    if (r < 1 || r > f.degree()) throw std::invalid_argument("theta_r: need 1 <= r <= degree");
    FourierExpansion out(f.degree(), f.trace_bound(), Shape::compound(r));
    out.meta() = f.meta();
    for (const auto& [t, a] : f.coefficients()) out.accumulate(t, compound(t.as_rational(), r) * a(0, 0));
    return out;
}

Rational c_poly(int h, const Rational& s) {
    if (h < 0) throw std::invalid_argument("c_poly: negative order");
    Rational out = 1;
    for (int i = 0; i < h; ++i) out *= s + make_rational(i, 2);
    return out;
}

namespace {

using Poly = std::vector<Rational>; // coefficients in increasing powers of lambda

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

// det(R_IJ + lambda S_IJ) by the Leibniz expansion; r <= 4 keeps this to 24 terms.
Poly pencil_minor(const RationalMatrix& rm, const RationalMatrix& sm, const std::vector<int>& rows,
                  const std::vector<int>& cols) {
    const std::size_t r = rows.size();
    Poly det(r + 1, Rational(0));
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j < r; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Poly term{Rational(1)};
        for (std::size_t i = 0; i < r; ++i) {
            const int a = rows[i], b = cols[perm[i]];
            term = poly_mul(term, Poly{rm(a, b), sm(a, b)});
        }
        const Rational sign = inversions % 2 ? -1 : 1;
        for (std::size_t d = 0; d < term.size(); ++d) det[d] += sign * term[d];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

void check_bracket_inputs(const FourierExpansion& f, const FourierExpansion& g, const BracketParams& params) {
    params.validate();
    if (!f.shape().is_scalar() || !g.shape().is_scalar())
        throw std::invalid_argument("bracket inputs must be scalar-shaped");
    if (f.degree() != g.degree() || f.degree() != params.n)
        throw std::invalid_argument("bracket inputs must share the degree given in the parameters");
}

} // namespace

std::vector<RationalMatrix> lambda_compound_coeffs(const RationalMatrix& r_mat, const RationalMatrix& s_mat, int r) {
    if (!r_mat.is_square() || !(s_mat.rows() == r_mat.rows() && s_mat.cols() == r_mat.cols()))
        throw std::invalid_argument("lambda_compound_coeffs: R and S must be square of the same size");
    const int n = static_cast<int>(r_mat.rows());
    if (r < 1 || r > n) throw std::invalid_argument("lambda_compound_coeffs: need 1 <= r <= n");
    const auto subsets = subset_order(n, r);
    const std::size_t dim = subsets.size();
    std::vector<RationalMatrix> out(r + 1, RationalMatrix(dim, dim));
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            const Poly p = pencil_minor(r_mat, s_mat, subsets[a], subsets[b]);
            for (int i = 0; i <= r; ++i) out[i](a, b) = p[i];
        }
    return out;
}

std::vector<Rational> bracket_weights(const BracketParams& params) {
    params.validate();
    const Rational shift = make_rational(params.r - 1, 2);
    std::vector<Rational> w(params.r + 1);
    for (int alpha = 0; alpha <= params.r; ++alpha) {
        w[alpha] = c_poly(alpha, params.l - shift) * c_poly(params.r - alpha, params.k - shift);
        if (alpha % 2) w[alpha] = -w[alpha];
    }
    return w;
}

FourierExpansion rc_bracket(const FourierExpansion& f, const FourierExpansion& g, const BracketParams& params) {
    check_bracket_inputs(f, g, params);
    const int r = params.r;
    const auto weights = bracket_weights(params);
    const long bound = std::min(f.trace_bound(), g.trace_bound());

    FourierExpansion out(f.degree(), bound, Shape::compound(r));
    if (f.meta().weight && g.meta().weight) out.meta().weight = *f.meta().weight + *g.meta().weight;

    for (const auto& [t1, a] : f.coefficients()) {
        if (t1.trace() > bound) break;
        const RationalMatrix r1 = t1.as_rational();
        for (const auto& [t2, b] : g.coefficients()) {
            if (t1.trace() + t2.trace() > bound) break;
            const auto pencil = lambda_compound_coeffs(r1, t2.as_rational(), r);
            RationalMatrix block(pencil[0].rows(), pencil[0].cols());
            for (int alpha = 0; alpha <= r; ++alpha)
                if (weights[alpha] != 0) block += pencil[r - alpha] * weights[alpha];
            block *= a(0, 0) * b(0, 0);
            out.accumulate(t1 + t2, block);
        }
    }
    return out;
}

FourierExpansion p0_part(const FourierExpansion& f, const FourierExpansion& g, const BracketParams& params) {
    check_bracket_inputs(f, g, params);
    const Rational lead = bracket_weights(params)[params.r];
    auto out = scale(lead, mul(theta_r(f, params.r), g));
    return out;
}

} // namespace siegel
