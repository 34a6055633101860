#pragma once

#include "siegel/matrix.hpp"

#include <vector>

namespace siegel {

/// Integer matrix with entries reduced into {0, ..., p-1}.
IntMatrix reduce_mod(IntMatrix m, long p);
long rank_mod(IntMatrix m, long p);
/// Throws std::domain_error when m is singular mod p.
IntMatrix inverse_mod(const IntMatrix& m, long p);

/// An element of Sp_n(F_p): M^t J M = J with J = [[0, 1_n], [-1_n, 0]].
class SymplecticModP {
public:
    /// Reduces entries mod p; throws std::invalid_argument if not symplectic.
    SymplecticModP(int n, long p, IntMatrix mat);

    static SymplecticModP identity(int n, long p);

    int degree() const { return n_; }
    long prime() const { return p_; }
    const IntMatrix& mat() const { return mat_; }

    /// Lower-left n x n block.
    IntMatrix lower_left() const;
    SymplecticModP inverse() const;

    friend SymplecticModP operator*(const SymplecticModP& a, const SymplecticModP& b);
    friend bool operator==(const SymplecticModP& a, const SymplecticModP& b) {
        return a.n_ == b.n_ && a.p_ == b.p_ && a.mat_ == b.mat_;
    }

private:
    struct Trusted {};
    SymplecticModP(int n, long p, IntMatrix mat, Trusted);

    int n_;
    long p_;
    IntMatrix mat_;
};

/// Partial involution: identity on the first n - j symplectic pairs,
/// (0 -1; 1 0) on the last j.
SymplecticModP omega(int n, int j, long p);
/// m(A) = diag(A, (A^{-1})^t).
SymplecticModP levi(const IntMatrix& a, long p);
/// n(B) = [[1, B], [0, 1]] for symmetric B.
SymplecticModP unipotent(const IntMatrix& b, long p);

/// All symmetric j x j matrices over F_p, lexicographic in the upper triangle.
std::vector<IntMatrix> symmetric_matrices_mod(int j, long p);

/// Right coset representatives of P_{n,j} \ GL_n(F_p): one per j-dimensional
/// subspace W (reduced echelon basis as the bottom j rows, unit vectors of the
/// non-pivot columns on top). Requires 1 <= n <= 3, p in {3, 5, 7}.
std::vector<IntMatrix> gl_parabolic_reps(int n, int j, long p);

struct CosetRep {
    int cell = 0;
    IntMatrix b; ///< j x j symmetric
    IntMatrix a; ///< n x n invertible
    SymplecticModP mat;
};

/// omega_j n(B_j) m(A) for all cells j, B_j in Sym_j(F_p), A from gl_parabolic_reps.
std::vector<CosetRep> coset_reps(int n, long p);

/// Number of representatives: sum_j p^{j(j+1)/2} [n choose j]_p.
long coset_count(int n, long p);
/// prod_{i=1}^n (p^i + 1).
long coset_index(int n, long p);
/// Gaussian binomial [n choose j]_p.
long gaussian_binomial(int n, int j, long p);

/// True iff M1 M2^{-1} has vanishing lower-left block mod p.
bool same_coset(const SymplecticModP& m1, const SymplecticModP& m2);

} // namespace siegel
