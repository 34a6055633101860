#include "siegel/symplectic.hpp"

#include "siegel/halfint.hpp"
#include "siegel/rational.hpp"

#include <stdexcept>
#include <string>

namespace siegel {

namespace {

long mod(long x, long p) {
    long r = x % p;
    return r < 0 ? r + p : r;
}

long inv_mod(long x, long p) {
    // Fermat; p prime.
    long result = 1, base = mod(x, p), e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

IntMatrix mul_mod(const IntMatrix& a, const IntMatrix& b, long p) {
    return reduce_mod(a * b, p);
}

IntMatrix standard_j(int n) {
    IntMatrix j(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        j(i, n + i) = 1;
        j(n + i, i) = -1;
    }
    return j;
}

void require_prime(long p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
}

void require_supported(int n, long p) {
    if (n < 1 || n > 3) throw std::invalid_argument("coset enumeration supports degree 1..3");
    if (p != 3 && p != 5 && p != 7) throw std::invalid_argument("coset enumeration supports p in {3, 5, 7}");
}

long ipow(long b, long e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

IntMatrix reduce_mod(IntMatrix m, long p) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = mod(m(i, j), p);
    return m;
}

long rank_mod(IntMatrix m, long p) {
    m = reduce_mod(std::move(m), p);
    long rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < static_cast<long>(m.rows()); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
        const long inv = inv_mod(m(rank, col), p);
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            const long f = m(i, col) * inv % p;
            if (f == 0) continue;
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = mod(m(i, j) - f * m(rank, j), p);
        }
        ++rank;
    }
    return rank;
}

IntMatrix inverse_mod(const IntMatrix& m_in, long p) {
    if (!m_in.is_square()) throw std::invalid_argument("inverse_mod: matrix must be square");
    const std::size_t n = m_in.rows();
    IntMatrix m = reduce_mod(m_in, p);
    IntMatrix inv = IntMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == 0) ++pivot;
        if (pivot == n) throw std::domain_error("matrix is singular mod p");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(m(pivot, j), m(col, j));
            std::swap(inv(pivot, j), inv(col, j));
        }
        const long s = inv_mod(m(col, col), p);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) = m(col, j) * s % p;
            inv(col, j) = inv(col, j) * s % p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m(i, col) == 0) continue;
            const long f = m(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = mod(m(i, j) - f * m(col, j), p);
                inv(i, j) = mod(inv(i, j) - f * inv(col, j), p);
            }
        }
    }
    return inv;
}

SymplecticModP::SymplecticModP(int n, long p, IntMatrix mat, Trusted) : n_(n), p_(p), mat_(std::move(mat)) {}

SymplecticModP::SymplecticModP(int n, long p, IntMatrix mat) : n_(n), p_(p), mat_(std::move(mat)) {
    require_prime(p);
    if (n < 1) throw std::invalid_argument("symplectic degree must be >= 1");
    if (mat_.rows() != static_cast<std::size_t>(2 * n) || mat_.cols() != static_cast<std::size_t>(2 * n))
        throw std::invalid_argument("symplectic matrix must be 2n x 2n");
    mat_ = reduce_mod(std::move(mat_), p);
    const IntMatrix j = standard_j(n);
    if (!(mul_mod(mul_mod(mat_.transpose(), j, p), mat_, p) == reduce_mod(j, p)))
        throw std::invalid_argument("matrix is not symplectic mod p");
}

SymplecticModP SymplecticModP::identity(int n, long p) {
    return SymplecticModP(n, p, IntMatrix::identity(2 * n));
}

IntMatrix SymplecticModP::lower_left() const {
    IntMatrix c(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) c(i, j) = mat_(n_ + i, j);
    return c;
}

SymplecticModP SymplecticModP::inverse() const {
    // M^{-1} = J^{-1} M^t J = -J M^t J.
    const IntMatrix j = standard_j(n_);
    IntMatrix inv = mul_mod(mul_mod(j, mat_.transpose(), p_), j, p_) * -1L;
    return SymplecticModP(n_, p_, reduce_mod(std::move(inv), p_), Trusted{});
}

SymplecticModP operator*(const SymplecticModP& a, const SymplecticModP& b) {
    if (a.n_ != b.n_ || a.p_ != b.p_) throw std::invalid_argument("symplectic product: degree or prime mismatch");
    return SymplecticModP(a.n_, a.p_, mul_mod(a.mat_, b.mat_, a.p_), SymplecticModP::Trusted{});
}

SymplecticModP omega(int n, int j, long p) {
    if (j < 0 || j > n) throw std::invalid_argument("omega: need 0 <= j <= n");
    IntMatrix w(2 * n, 2 * n);
    for (int i = 0; i < n - j; ++i) {
        w(i, i) = 1;
        w(n + i, n + i) = 1;
    }
    for (int i = n - j; i < n; ++i) {
        w(i, n + i) = -1;
        w(n + i, i) = 1;
    }
    return SymplecticModP(n, p, std::move(w));
}

SymplecticModP levi(const IntMatrix& a, long p) {
    require_prime(p);
    if (!a.is_square()) throw std::invalid_argument("levi: A must be square");
    const int n = static_cast<int>(a.rows());
    const IntMatrix dual = inverse_mod(a, p).transpose();
    IntMatrix m(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m(i, j) = a(i, j);
            m(n + i, n + j) = dual(i, j);
        }
    return SymplecticModP(n, p, std::move(m));
}

SymplecticModP unipotent(const IntMatrix& b, long p) {
    require_prime(p);
    if (!reduce_mod(b, p).is_symmetric()) throw std::invalid_argument("unipotent: B must be symmetric mod p");
    const int n = static_cast<int>(b.rows());
    IntMatrix m = IntMatrix::identity(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, n + j) = b(i, j);
    return SymplecticModP(n, p, std::move(m));
}

std::vector<IntMatrix> symmetric_matrices_mod(int j, long p) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < j; ++a)
        for (int b = a; b < j; ++b) slots.emplace_back(a, b);
    std::vector<IntMatrix> out;
    std::vector<long> digits(slots.size(), 0);
    while (true) {
        IntMatrix m(j, j);
        for (std::size_t s = 0; s < slots.size(); ++s) {
            auto [a, b] = slots[s];
            m(a, b) = m(b, a) = digits[s];
        }
        out.push_back(std::move(m));
        // odometer, last slot fastest
        std::size_t k = slots.size();
        while (k > 0 && ++digits[k - 1] == p) digits[--k] = 0;
        if (k == 0) break;
    }
    return out;
}

std::vector<IntMatrix> gl_parabolic_reps(int n, int j, long p) {
    require_supported(n, p);
    if (j < 0 || j > n) throw std::invalid_argument("gl_parabolic_reps: need 0 <= j <= n");
    std::vector<IntMatrix> out;
    for (const auto& pivots : subset_order(n, j)) {
        std::vector<bool> is_pivot(n, false);
        for (int c : pivots) is_pivot[c] = true;
        // Free entries of the reduced echelon form: row i, columns after its pivot that are not pivots.
        std::vector<std::pair<int, int>> free;
        for (int i = 0; i < j; ++i)
            for (int c = pivots[i] + 1; c < n; ++c)
                if (!is_pivot[c]) free.emplace_back(i, c);
        std::vector<long> digits(free.size(), 0);
        while (true) {
            IntMatrix a(n, n);
            int top = 0;
            for (int c = 0; c < n; ++c)
                if (!is_pivot[c]) a(top++, c) = 1;
            for (int i = 0; i < j; ++i) a(n - j + i, pivots[i]) = 1;
            for (std::size_t s = 0; s < free.size(); ++s) a(n - j + free[s].first, free[s].second) = digits[s];
            out.push_back(std::move(a));
            std::size_t k = free.size();
            while (k > 0 && ++digits[k - 1] == p) digits[--k] = 0;
            if (k == 0) break;
        }
    }
    return out;
}

std::vector<CosetRep> coset_reps(int n, long p) {
    require_supported(n, p);
    std::vector<CosetRep> out;
    for (int j = 0; j <= n; ++j) {
        const auto w = omega(n, j, p);
        const auto a_reps = gl_parabolic_reps(n, j, p);
        for (const auto& bj : symmetric_matrices_mod(j, p)) {
            IntMatrix embedded(n, n);
            for (int a = 0; a < j; ++a)
                for (int b = 0; b < j; ++b) embedded(n - j + a, n - j + b) = bj(a, b);
            const auto wn = w * unipotent(embedded, p);
            for (const auto& a : a_reps) out.push_back(CosetRep{j, bj, a, wn * levi(a, p)});
        }
    }
    return out;
}

long gaussian_binomial(int n, int j, long p) {
    if (j < 0 || j > n) return 0;
    long num = 1, den = 1;
    for (int i = 0; i < j; ++i) {
        num *= ipow(p, n - i) - 1;
        den *= ipow(p, i + 1) - 1;
    }
    return num / den;
}

long coset_count(int n, long p) {
    long total = 0;
    for (int j = 0; j <= n; ++j) total += ipow(p, j * (j + 1) / 2) * gaussian_binomial(n, j, p);
    return total;
}

long coset_index(int n, long p) {
    long total = 1;
    for (int i = 1; i <= n; ++i) total *= ipow(p, i) + 1;
    return total;
}

bool same_coset(const SymplecticModP& m1, const SymplecticModP& m2) {
    if (m1.degree() != m2.degree() || m1.prime() != m2.prime())
        throw std::invalid_argument("same_coset: degree or prime mismatch");
    return (m1 * m2.inverse()).lower_left().is_zero();
}

} // namespace siegel
