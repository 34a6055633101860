#pragma once

#include "siegel/matrix.hpp"
#include "siegel/qexpansion.hpp"
#include "siegel/rational.hpp"

#include <vector>

namespace siegel {

/// Parameters of the bracket D(f, g): degree n, minor order r, weights k (of f) and l (of g).
struct BracketParams {
    int n = 1;
    int r = 1;
    Rational k = 0;
    Rational l = 0;

    /// Throws std::invalid_argument unless 1 <= r <= n.
    void validate() const;
};

/// Coefficientwise T -> T^[r] a(T), with the (2 pi i)^{-r} normalization absorbed.
FourierExpansion theta_r(const FourierExpansion& f, int r);

/// C_h(s) = s (s + 1/2) ... (s + (h-1)/2); C_0 = 1.
Rational c_poly(int h, const Rational& s);

/// Coefficients of lambda^0 .. lambda^r in (R + lambda S)^[r].
std::vector<RationalMatrix> lambda_compound_coeffs(const RationalMatrix& r_mat, const RationalMatrix& s_mat, int r);

/// The scalar weights (-1)^a C_a(l - (r-1)/2) C_{r-a}(k - (r-1)/2), a = 0..r.
std::vector<Rational> bracket_weights(const BracketParams& params);

/// D(f, g) = sum_a (-1)^a C_a(l-(r-1)/2) C_{r-a}(k-(r-1)/2) P_a, where P_a(T1, T2)
/// is the coefficient of lambda^{r-a} in (T1 + lambda T2)^[r] (degree a in T1).
FourierExpansion rc_bracket(const FourierExpansion& f, const FourierExpansion& g, const BracketParams& params);

/// The derivative-free-in-g part: (-1)^r C_r(l-(r-1)/2) theta_r(f) g.
FourierExpansion p0_part(const FourierExpansion& f, const FourierExpansion& g, const BracketParams& params);

} // namespace siegel
