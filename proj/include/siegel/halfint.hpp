#pragma once

#include "siegel/matrix.hpp"
#include "siegel/rational.hpp"

#include <compare>
#include <vector>

namespace siegel {

/// A half-integral symmetric matrix T, stored as the doubled integer matrix
/// D = 2T (symmetric, even diagonal). Ordered by trace(T), then by the
/// row-major entries of D.
class HalfIntegralMatrix {
public:
    /// Throws std::invalid_argument unless D is square, symmetric, with even diagonal.
    explicit HalfIntegralMatrix(IntMatrix doubled);

    static HalfIntegralMatrix zero(int degree);

    int degree() const { return static_cast<int>(doubled_.rows()); }
    const IntMatrix& doubled() const { return doubled_; }
    long doubled(int i, int j) const { return doubled_(i, j); }

    /// trace(T) = trace(D) / 2, always an integer.
    long trace() const { return trace_; }

    RationalMatrix as_rational() const;

    bool is_zero() const { return doubled_.is_zero(); }

    HalfIntegralMatrix operator+(const HalfIntegralMatrix& o) const;
    HalfIntegralMatrix scaled(long c) const;

    /// True when every entry of D is divisible by c.
    bool divisible_by(long c) const;
    /// D / c; caller guarantees divisible_by(c).
    HalfIntegralMatrix divided(long c) const;

    friend bool operator==(const HalfIntegralMatrix& a, const HalfIntegralMatrix& b) {
        return a.doubled_ == b.doubled_;
    }
    friend std::strong_ordering operator<=>(const HalfIntegralMatrix& a, const HalfIntegralMatrix& b);

private:
    IntMatrix doubled_;
    long trace_ = 0;
};

inline HalfIntegralMatrix make_half_integral(IntMatrix doubled) {
    return HalfIntegralMatrix(std::move(doubled));
}

/// Exact positive-semidefiniteness via all principal minors of D.
bool is_psd(const HalfIntegralMatrix& t);

constexpr int kMaxEnumerationDegree = 4;

/// All T in Lambda_n with T >= 0 and trace(T) <= bound, sorted by the
/// HalfIntegralMatrix order. Supports 1 <= n <= 4.
std::vector<HalfIntegralMatrix> enumerate_lambda(int n, long bound);

/// The r-element subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<int>> subset_order(int n, int r);

/// Matrix of all r x r minors, rows and columns indexed by subset_order(n, r).
/// r = 0 gives the 1 x 1 identity.
RationalMatrix compound(const RationalMatrix& m, int r);

} // namespace siegel
