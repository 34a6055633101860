#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace siegel {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical "num/den" form, lowest terms, positive denominator ("6/1", "-1/2").
std::string to_string(const Rational& x);

/// Accepts "num/den" or a bare integer; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

bool is_odd_prime(long p);

} // namespace siegel
