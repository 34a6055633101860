#pragma once

#include "siegel/halfint.hpp"
#include "siegel/qexpansion.hpp"
#include "siegel/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace siegel {

/// An integer or +infinity.
class Valuation {
public:
    constexpr Valuation(long v = 0) : value_(v), infinite_(false) {}
    static constexpr Valuation infinity() {
        Valuation v;
        v.infinite_ = true;
        return v;
    }

    constexpr bool is_infinite() const { return infinite_; }
    /// Finite value; throws std::logic_error on infinity.
    long value() const;

    friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }
    /// Integer shift; infinity absorbs.
    friend constexpr Valuation operator+(Valuation a, long d) {
        if (!a.infinite_) a.value_ += d;
        return a;
    }

    std::string to_string() const;

private:
    long value_;
    bool infinite_;
};

/// nu_p(x); +infinity for x = 0. Throws std::invalid_argument unless p is an odd prime.
Valuation vp(const Rational& x, long p);

/// Minimum of nu_p over every entry of every stored coefficient (the valuation
/// of the truncation only).
Valuation vp_expansion(const FourierExpansion& f, long p);

/// Verdict of F == G mod p^m on the common trace bound.
struct CongruenceReport {
    long p = 0;
    long m = 0;
    bool holds = false;
    Valuation min_valuation = Valuation::infinity();
    std::optional<HalfIntegralMatrix> witness;
    long bound = 0;
    bool normalized = false;
    /// nu_p(F) when normalized, otherwise 0.
    Valuation offset = 0;
};

/// Plain mode requires nu_p(a_F(T) - a_G(T)) >= m; normalized mode >= m + nu_p(F).
CongruenceReport congruent(const FourierExpansion& f, const FourierExpansion& g, long p, long m, bool normalized);

/// (G^p) | U(p); rejects G with negative nu_p.
FourierExpansion frobenius_descent(const FourierExpansion& g, long p);

/// prod_{j<i} F_base^{k p^j} = F_base^{k (p^i - 1)/(p - 1)}, of weight k (p^i - 1).
/// F_base must satisfy F_base == 1 mod p.
FourierExpansion script_e(int i, const FourierExpansion& f_base, long k, long p);

/// Entry m: min_T nu_p(a_{F_m}(T) - a_F(T)) on each pair's common bound.
std::vector<Valuation> limit_profile(const std::vector<FourierExpansion>& seq, const FourierExpansion& f, long p);

/// The congruence between the bracket D(f, g) with g = F_{p-1}^{p^{m-1}} | V
/// and (-1)^r C_r(l - (r-1)/2) theta_r(f).
struct Theorem41Report {
    CongruenceReport report; ///< report.m already includes the offset nu
    long nu = 0;             ///< nu_p(C_r(l - (r-1)/2))
    Rational weight_l = 0;
    long requested_m = 0;
    FourierExpansion bracket;
    FourierExpansion reference;

    /// min_valuation - nu (infinite when the two sides agree exactly).
    Valuation margin() const { return report.min_valuation + (-nu); }
};

/// Uses the supplied F_{p-1} (scalar, degree of f, == 1 mod p). Throws when
/// the dilated F_{p-1} does not reach f's trace bound.
Theorem41Report theorem41_check(const FourierExpansion& f, const Rational& k, long p, long m, int r, long m_dilate,
                                const FourierExpansion& f_p_minus_1);

/// Builds F_{p-1} as the theta series of A_{p-1} + A_{p-1} to the needed bound.
Theorem41Report theorem41_check(const FourierExpansion& f, const Rational& k, long p, long m, int r, long m_dilate);

} // namespace siegel
