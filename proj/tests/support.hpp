#pragma once

#include "siegel/halfint.hpp"
#include "siegel/qexpansion.hpp"

#include <random>

namespace siegel::testing {

/// Expansion with random integer coefficients in [lo, hi] on a random subset of
/// the indices of trace <= bound.
inline FourierExpansion random_expansion(std::mt19937& rng, int degree, long bound, long lo, long hi,
                                         double density = 0.7) {
    std::uniform_int_distribution<long> value(lo, hi);
    std::bernoulli_distribution keep(density);
    FourierExpansion f(degree, bound);
    for (const auto& t : enumerate_lambda(degree, bound))
        if (keep(rng)) f.set(t, Rational(value(rng)));
    return f;
}

/// 2T for a degree-2 index.
inline HalfIntegralMatrix t2(long a, long b, long c) {
    return HalfIntegralMatrix(IntMatrix{{a, b}, {b, c}});
}

} // namespace siegel::testing
