#pragma once

#include "siegel/matrix.hpp"
#include "siegel/qexpansion.hpp"
#include "siegel/rational.hpp"

#include <vector>

namespace siegel {

/// Even positive-definite lattice given by its Gram matrix.
class GramLattice {
public:
    /// Throws std::invalid_argument unless gram is symmetric, even on the
    /// diagonal and positive definite.
    explicit GramLattice(IntMatrix gram);

    int rank() const { return static_cast<int>(gram_.rows()); }
    const IntMatrix& gram() const { return gram_; }
    Integer determinant() const;
    /// Smallest l with l * Q^{-1} integral with even diagonal.
    long level() const;

    friend bool operator==(const GramLattice&, const GramLattice&) = default;

private:
    IntMatrix gram_;
};

/// A lattice vector in coordinates together with its norm x^t Q x.
struct LatticeVector {
    std::vector<long> coords;
    long norm = 0;
};

/// All x with x^t Q x <= max_norm, sorted by norm (then coordinates).
/// Exact rational Cholesky bounds; includes the zero vector.
std::vector<LatticeVector> short_vectors(const GramLattice& q, long max_norm);

constexpr int kMaxThetaDegree = 3;

/// Degree-n theta series: a(T) = #{X in Z^{m x n} : X^t Q X = 2T}, trace(T) <= bound.
/// Work is split over first-column candidates across `threads` workers.
FourierExpansion rep_numbers(const GramLattice& q, int n, long bound, unsigned threads = 1);

/// Root lattice A_m: 2 on the diagonal, -1 on the adjacent off-diagonals.
GramLattice gram_a(int m);

GramLattice direct_sum(const GramLattice& a, const GramLattice& b);

/// Order-(m+1) automorphism of A_m induced by cycling the coordinates of
/// {x in Z^{m+1} : sum x = 0}, written in the basis e_i - e_{i+1}.
IntMatrix a_cycle(int m);

/// Block-diagonal sum of two square integer matrices.
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

/// sigma^t Q sigma = Q, sigma^p = 1, sigma != 1, and sigma has no nonzero fixed vector.
bool is_p_special_witness(const GramLattice& q, const IntMatrix& sigma, long p);

/// F_{p-1}: theta series of A_{p-1} + A_{p-1} (rank 2p-2, determinant p^2), weight p-1.
FourierExpansion special_theta(long p, int n, long bound, unsigned threads = 1);

/// p^n times special_theta. Only the expansion at infinity is produced; the
/// conditions at the other cusps are not checked here.
FourierExpansion kappa_form(long p, int n, long bound, unsigned threads = 1);

} // namespace siegel
