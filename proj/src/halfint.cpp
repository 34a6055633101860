#include "siegel/halfint.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace siegel {

HalfIntegralMatrix::HalfIntegralMatrix(IntMatrix doubled) : doubled_(std::move(doubled)) {
    if (!doubled_.is_square() || doubled_.rows() == 0)
        throw std::invalid_argument("half-integral matrix must be square and non-empty");
    if (!doubled_.is_symmetric()) throw std::invalid_argument("half-integral matrix must be symmetric");
    long tr = 0;
    for (std::size_t i = 0; i < doubled_.rows(); ++i) {
        if (doubled_(i, i) % 2 != 0)
            throw std::invalid_argument("doubled matrix has odd diagonal entry at " + std::to_string(i));
        tr += doubled_(i, i);
    }
    trace_ = tr / 2;
}

HalfIntegralMatrix HalfIntegralMatrix::zero(int degree) {
    return HalfIntegralMatrix(IntMatrix(degree, degree));
}

RationalMatrix HalfIntegralMatrix::as_rational() const {
    RationalMatrix t = to_rational(doubled_);
    t *= Rational(1, 2);
    return t;
}

HalfIntegralMatrix HalfIntegralMatrix::operator+(const HalfIntegralMatrix& o) const {
    return HalfIntegralMatrix(doubled_ + o.doubled_);
}

HalfIntegralMatrix HalfIntegralMatrix::scaled(long c) const {
    return HalfIntegralMatrix(doubled_ * c);
}

bool HalfIntegralMatrix::divisible_by(long c) const {
    return std::all_of(doubled_.data().begin(), doubled_.data().end(), [c](long x) { return x % c == 0; });
}

HalfIntegralMatrix HalfIntegralMatrix::divided(long c) const {
    IntMatrix d = doubled_;
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) d(i, j) /= c;
    return HalfIntegralMatrix(std::move(d));
}

std::strong_ordering operator<=>(const HalfIntegralMatrix& a, const HalfIntegralMatrix& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.trace_ <=> b.trace_; c != 0) return c;
    const auto& x = a.doubled_.data();
    const auto& y = b.doubled_.data();
    return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

bool is_psd(const HalfIntegralMatrix& t) {
    const int n = t.degree();
    RationalMatrix d = to_rational(t.doubled());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        if (determinant(submatrix(d, idx, idx)) < 0) return false;
    }
    return true;
}

std::vector<HalfIntegralMatrix> enumerate_lambda(int n, long bound) {
    if (n < 1 || n > kMaxEnumerationDegree)
        throw std::invalid_argument("enumerate_lambda: degree must lie in [1, 4]");
    if (bound < 0) throw std::invalid_argument("enumerate_lambda: negative trace bound");

    std::vector<HalfIntegralMatrix> out;
    IntMatrix d(n, n);

    // Off-diagonal entries filled after the diagonal, pruned by D_ij^2 <= D_ii D_jj.
    std::vector<std::pair<int, int>> offdiag;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) offdiag.emplace_back(i, j);

    std::function<void(std::size_t)> fill_offdiag = [&](std::size_t k) {
        if (k == offdiag.size()) {
            HalfIntegralMatrix t(d);
            if (is_psd(t)) out.push_back(std::move(t));
            return;
        }
        auto [i, j] = offdiag[k];
        long limit = 0;
        while ((limit + 1) * (limit + 1) <= d(i, i) * d(j, j)) ++limit;
        for (long v = -limit; v <= limit; ++v) {
            d(i, j) = d(j, i) = v;
            fill_offdiag(k + 1);
        }
        d(i, j) = d(j, i) = 0;
    };

    std::function<void(int, long)> fill_diag = [&](int i, long remaining) {
        if (i == n) {
            fill_offdiag(0);
            return;
        }
        for (long t = 0; t <= remaining; ++t) {
            d(i, i) = 2 * t;
            fill_diag(i + 1, remaining - t);
        }
        d(i, i) = 0;
    };

    fill_diag(0, bound);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> subset_order(int n, int r) {
    if (r < 0 || r > n) throw std::invalid_argument("subset_order: need 0 <= r <= n");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(r);
    for (int i = 0; i < r; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[i] == n - r + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

RationalMatrix compound(const RationalMatrix& m, int r) {
    if (!m.is_square()) throw std::invalid_argument("compound: matrix must be square");
    const int n = static_cast<int>(m.rows());
    const auto subsets = subset_order(n, r);
    RationalMatrix out(subsets.size(), subsets.size());
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = 0; b < subsets.size(); ++b)
            out(a, b) = r == 0 ? Rational(1) : determinant(submatrix(m, subsets[a], subsets[b]));
    return out;
}

} // namespace siegel
