#include "siegel/matrix.hpp"
#include "siegel/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace siegel {

std::string to_string(const Rational& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    auto num = text.substr(0, slash);
    auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    Integer d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational q(parse_integer(num), d);
    q.canonicalize();
    return q;
}

bool is_odd_prime(long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

RationalMatrix to_rational(const IntMatrix& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

Rational determinant(RationalMatrix m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            Rational factor = m(i, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
        }
    }
    return det;
}

RationalMatrix inverse(RationalMatrix m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == 0) ++pivot;
        if (pivot == n) throw std::domain_error("matrix is singular");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(pivot, j), m(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        Rational scale = 1 / m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m(i, col) == 0) continue;
            Rational factor = m(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= factor * m(col, j);
                inv(i, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

} // namespace siegel
