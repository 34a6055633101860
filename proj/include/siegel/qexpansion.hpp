#pragma once

#include "siegel/halfint.hpp"
#include "siegel/matrix.hpp"
#include "siegel/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace siegel {

/// Coefficient shape: scalar (compound_order == 0) or binomial(n, r)-square
/// matrix blocks (compound_order == r >= 1).
struct Shape {
    int compound_order = 0;

    static Shape scalar() { return {}; }
    static Shape compound(int r) { return {r}; }
    bool is_scalar() const { return compound_order == 0; }
    friend bool operator==(const Shape&, const Shape&) = default;
};

/// Informational tags; never consulted by arithmetic.
struct ExpansionMeta {
    std::optional<Rational> weight;
    std::optional<long> level;
    std::optional<std::string> character;
    friend bool operator==(const ExpansionMeta&, const ExpansionMeta&) = default;
};

/// Truncated Fourier expansion sum_T a(T) q^T over T in Lambda_n, T >= 0,
/// trace(T) <= trace_bound. Absent keys are zero coefficients; zero blocks
/// are never stored.
class FourierExpansion {
public:
    using CoefficientMap = std::map<HalfIntegralMatrix, RationalMatrix>;

    FourierExpansion(int degree, long trace_bound, Shape shape = Shape::scalar());

    static FourierExpansion constant(int degree, long trace_bound, const Rational& c = 1);

    /// Degree-1 expansion sum_t coeffs[t] q^t with bound coeffs.size() - 1.
    static FourierExpansion from_series(const std::vector<Rational>& coeffs);

    int degree() const { return degree_; }
    long trace_bound() const { return bound_; }
    Shape shape() const { return shape_; }
    std::size_t block_size() const { return block_size_; }

    const ExpansionMeta& meta() const { return meta_; }
    ExpansionMeta& meta() { return meta_; }

    const CoefficientMap& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Zero block when T is absent.
    RationalMatrix coefficient(const HalfIntegralMatrix& t) const;
    /// Scalar-shape shortcut.
    Rational scalar(const HalfIntegralMatrix& t) const;
    /// Degree-1 scalar shortcut: coefficient of q^t.
    Rational scalar(long t) const;

    /// Overwrites a(T). Validates degree, psd, trace bound and block size.
    void set(const HalfIntegralMatrix& t, RationalMatrix block);
    void set(const HalfIntegralMatrix& t, const Rational& value);

    /// a(T) += block. Trusts that T is psd (sums of psd indices are); checks the rest.
    void accumulate(const HalfIntegralMatrix& t, const RationalMatrix& block);

    friend bool operator==(const FourierExpansion& a, const FourierExpansion& b) {
        return a.degree_ == b.degree_ && a.bound_ == b.bound_ && a.shape_ == b.shape_ && a.coeffs_ == b.coeffs_;
    }

private:
    void check_index(const HalfIntegralMatrix& t) const;
    void check_block(const RationalMatrix& block) const;

    int degree_;
    long bound_;
    Shape shape_;
    std::size_t block_size_;
    ExpansionMeta meta_;
    CoefficientMap coeffs_;
};

/// Degree-1 index q^t.
HalfIntegralMatrix index1(long t);

/// Restriction to trace(T) <= bound (bound must not exceed the current one).
FourierExpansion truncate(const FourierExpansion& f, long bound);

FourierExpansion add(const FourierExpansion& f, const FourierExpansion& g);
FourierExpansion subtract(const FourierExpansion& f, const FourierExpansion& g);
FourierExpansion scale(const Rational& c, const FourierExpansion& f);

/// Cauchy product over T1 + T2 = T; at least one operand must be scalar.
FourierExpansion mul(const FourierExpansion& f, const FourierExpansion& g);
FourierExpansion pow(const FourierExpansion& f, unsigned long e);

/// a(T) -> a(pT); bound floor(N / p).
FourierExpansion u_p(const FourierExpansion& f, long p);
/// q^T -> q^{cT}; bound c * N.
FourierExpansion dilate(const FourierExpansion& f, long c);

/// Bernoulli number B_k (B_1 = -1/2).
Rational bernoulli(int k);
/// Normalized degree-1 Eisenstein series of even weight k >= 4.
FourierExpansion eisenstein1(int k, long bound);
/// Delta = (E4^3 - E6^2) / 1728.
FourierExpansion delta1(long bound);

} // namespace siegel
