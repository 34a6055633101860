#include "siegel/theta.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace siegel {

GramLattice::GramLattice(IntMatrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_square() || gram_.rows() == 0) throw std::invalid_argument("Gram matrix must be square and non-empty");
    if (!gram_.is_symmetric()) throw std::invalid_argument("Gram matrix must be symmetric");
    for (std::size_t i = 0; i < gram_.rows(); ++i)
        if (gram_(i, i) % 2 != 0) throw std::invalid_argument("Gram matrix must have even diagonal");
    const RationalMatrix q = to_rational(gram_);
    for (std::size_t k = 1; k <= gram_.rows(); ++k) {
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        if (siegel::determinant(submatrix(q, idx, idx)) <= 0)
            throw std::invalid_argument("Gram matrix must be positive definite");
    }
}

Integer GramLattice::determinant() const {
    return siegel::determinant(to_rational(gram_)).get_num();
}

long GramLattice::level() const {
    const RationalMatrix inv = inverse(to_rational(gram_));
    Integer l = 1;
    for (const auto& x : inv.data()) l = lcm(l, x.get_den());
    for (std::size_t i = 0; i < inv.rows(); ++i) {
        Rational d = inv(i, i) * l;
        if (d.get_num() % 2 != 0) {
            l *= 2;
            break;
        }
    }
    return l.get_si();
}

namespace {

// Fincke-Pohst quadratic form decomposition: x^t Q x = sum_i c_ii (x_i + sum_{j>i} c_ij x_j)^2.
RationalMatrix quadratic_completion(const IntMatrix& gram) {
    const std::size_t m = gram.rows();
    RationalMatrix c = to_rational(gram);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            c(j, i) = c(i, j);
            c(i, j) /= c(i, i);
        }
        for (std::size_t k = i + 1; k < m; ++k)
            for (std::size_t l = k; l < m; ++l) c(k, l) -= c(k, i) * c(i, l);
    }
    return c;
}

long norm_of(const IntMatrix& gram, const std::vector<long>& x) {
    long s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) s += x[i] * gram(i, j) * x[j];
    return s;
}

} // namespace

std::vector<LatticeVector> short_vectors(const GramLattice& q, long max_norm) {
    if (max_norm < 0) return {};
    const int m = q.rank();
    const RationalMatrix c = quadratic_completion(q.gram());
    std::vector<long> x(m, 0);
    std::vector<LatticeVector> out;

    std::function<void(int, const Rational&)> descend = [&](int i, const Rational& remaining) {
        if (i < 0) {
            out.push_back({x, norm_of(q.gram(), x)});
            return;
        }
        Rational center = 0;
        for (int j = i + 1; j < m; ++j) center -= c(i, j) * x[j];
        const double radius = std::sqrt(Rational(remaining / c(i, i)).get_d());
        const long lo = static_cast<long>(std::floor(center.get_d() - radius)) - 1;
        const long hi = static_cast<long>(std::ceil(center.get_d() + radius)) + 1;
        for (long v = lo; v <= hi; ++v) {
            Rational diff = Rational(v) - center;
            Rational used = c(i, i) * diff * diff;
            if (used > remaining) continue;
            x[i] = v;
            descend(i - 1, remaining - used);
        }
        x[i] = 0;
    };
    descend(m - 1, Rational(max_norm));

    std::sort(out.begin(), out.end(), [](const LatticeVector& a, const LatticeVector& b) {
        return a.norm != b.norm ? a.norm < b.norm : a.coords < b.coords;
    });
    return out;
}

FourierExpansion rep_numbers(const GramLattice& q, int n, long bound, unsigned threads) {
    if (n < 1 || n > kMaxThetaDegree) throw std::invalid_argument("rep_numbers: degree must lie in [1, 3]");
    if (bound < 0) throw std::invalid_argument("rep_numbers: negative trace bound");

    const auto vectors = short_vectors(q, 2 * bound);
    // Q x for each candidate, so cross terms x_i^t Q x_j are plain dot products.
    std::vector<std::vector<long>> images;
    images.reserve(vectors.size());
    for (const auto& v : vectors) {
        std::vector<long> qx(q.rank(), 0);
        for (int i = 0; i < q.rank(); ++i)
            for (int j = 0; j < q.rank(); ++j) qx[i] += q.gram()(i, j) * v.coords[j];
        images.push_back(std::move(qx));
    }
    auto dot = [&](std::size_t a, std::size_t b) {
        long s = 0;
        for (int i = 0; i < q.rank(); ++i) s += vectors[a].coords[i] * images[b][i];
        return s;
    };

    using Counts = std::map<std::vector<long>, unsigned long long>;
    auto count_from = [&](std::size_t first_begin, std::size_t stride) {
        Counts counts;
        std::vector<std::size_t> cols(n);
        std::vector<long> d(n * n, 0);
        std::function<void(int, long)> extend = [&](int j, long remaining_norm) {
            if (j == n) {
                ++counts[d];
                return;
            }
            const std::size_t start = j == 0 ? first_begin : 0;
            const std::size_t step = j == 0 ? stride : 1;
            for (std::size_t a = start; a < vectors.size(); a += step) {
                if (vectors[a].norm > remaining_norm) break;
                cols[j] = a;
                d[j * n + j] = vectors[a].norm;
                for (int i = 0; i < j; ++i) d[i * n + j] = d[j * n + i] = dot(cols[i], a);
                extend(j + 1, remaining_norm - vectors[a].norm);
            }
        };
        extend(0, 2 * bound);
        return counts;
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(vectors.size())));
    std::vector<Counts> partial(workers);
    if (workers == 1) {
        partial[0] = count_from(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] { partial[w] = count_from(w, workers); });
        for (auto& t : pool) t.join();
    }

    Counts total;
    for (const auto& part : partial)
        for (const auto& [key, cnt] : part) total[key] += cnt;

    FourierExpansion theta(n, bound);
    theta.meta().weight = Rational(q.rank(), 2);
    theta.meta().weight->canonicalize();
    theta.meta().level = q.level();
    for (const auto& [key, cnt] : total) {
        IntMatrix d(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d(i, j) = key[i * n + j];
        Integer c;
        mpz_set_ui(c.get_mpz_t(), static_cast<unsigned long>(cnt));
        theta.accumulate(HalfIntegralMatrix(std::move(d)), RationalMatrix(1, 1, Rational(c)));
    }
    return theta;
}

GramLattice gram_a(int m) {
    if (m < 1) throw std::invalid_argument("gram_a: rank must be >= 1");
    IntMatrix g(m, m);
    for (int i = 0; i < m; ++i) {
        g(i, i) = 2;
        if (i + 1 < m) g(i, i + 1) = g(i + 1, i) = -1;
    }
    return GramLattice(std::move(g));
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.rows(), m = b.rows();
    IntMatrix out(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out(n + i, n + j) = b(i, j);
    return out;
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
    return GramLattice(block_diagonal(a.gram(), b.gram()));
}

IntMatrix a_cycle(int m) {
    if (m < 1) throw std::invalid_argument("a_cycle: rank must be >= 1");
    IntMatrix s(m, m);
    for (int i = 0; i + 1 < m; ++i) s(i + 1, i) = 1;
    for (int i = 0; i < m; ++i) s(i, m - 1) = -1;
    return s;
}

bool is_p_special_witness(const GramLattice& q, const IntMatrix& sigma, long p) {
    const std::size_t m = static_cast<std::size_t>(q.rank());
    if (sigma.rows() != m || sigma.cols() != m)
        throw std::invalid_argument("is_p_special_witness: sigma must match the lattice rank");
    if (p < 2) return false;
    if (!(sigma.transpose() * q.gram() * sigma == q.gram())) return false;
    const IntMatrix id = IntMatrix::identity(m);
    if (sigma == id) return false;
    IntMatrix power = id;
    for (long i = 0; i < p; ++i) power = power * sigma;
    if (!(power == id)) return false;
    return siegel::determinant(to_rational(sigma - id)) != 0;
}

FourierExpansion special_theta(long p, int n, long bound, unsigned threads) {
    if (!is_odd_prime(p)) throw std::invalid_argument("special_theta: p must be an odd prime");
    const auto a = gram_a(static_cast<int>(p - 1));
    return rep_numbers(direct_sum(a, a), n, bound, threads);
}

FourierExpansion kappa_form(long p, int n, long bound, unsigned threads) {
    Integer pn;
    mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
    auto k = scale(Rational(pn), special_theta(p, n, bound, threads));
    k.meta().level = p;
    return k;
}

} // namespace siegel
