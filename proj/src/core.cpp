#include "km3/core.hpp"
#include "km3/matrix.hpp"

#include <cmath>

namespace km3 {

Int gcd(Int a, Int b) {
    a = iabs(a);
    b = iabs(b);
    while (b) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int ext_gcd(Int a, Int b, Int& x, Int& y) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
        t = y0 - q * y1; y0 = y1; y1 = t;
    }
    if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
    x = x0;
    y = y0;
    return a;
}

Int isqrt(Int n) {
    if (n < 0) throw DomainError("isqrt of negative number");
    Int r = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

RatMatrix inverse(const RatMatrix& m) {
    if (!m.square()) throw DomainError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = m, inv = RatMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == Rational(0)) ++p;
        if (p == n) throw DomainError("singular matrix");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        Rational piv = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == Rational(0)) continue;
            Rational f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

IntMatrix to_integer(const RatMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).denominator() != 1) throw DomainError("matrix entry is not integral");
            out(i, j) = m(i, j).numerator();
        }
    return out;
}

Rational trace(const RatMatrix& m) {
    Rational t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

Int trace(const IntMatrix& m) {
    Int t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

Int dot(const IntMatrix& gram, const std::vector<Int>& x, const std::vector<Int>& y) {
    Int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * gram(i, j) * y[j];
    return s;
}

Signature signature(const IntMatrix& gram) {
    RatMatrix a = to_rational(gram);
    std::size_t n = a.rows();
    Signature sig;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        // pick a remaining index with nonzero diagonal
        std::size_t k = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && a(i, i) != Rational(0)) { k = i; break; }
        if (k == n) {
            // all remaining diagonals vanish; fix one by adding a row/col with nonzero coupling
            bool fixed = false;
            for (std::size_t i = 0; i < n && !fixed; ++i) {
                if (done[i]) continue;
                for (std::size_t j = 0; j < n && !fixed; ++j) {
                    if (done[j] || j == i || a(i, j) == Rational(0)) continue;
                    // e_i <- e_i + e_j gives diagonal 2 a_ij (a_jj = 0 here)
                    for (std::size_t t = 0; t < n; ++t) a(i, t) += a(j, t);
                    for (std::size_t t = 0; t < n; ++t) a(t, i) += a(t, j);
                    fixed = true;
                }
            }
            if (!fixed) {
                for (std::size_t i = 0; i < n; ++i)
                    if (!done[i]) ++sig.zero;
                return sig;
            }
            --step;
            continue;
        }
        Rational d = a(k, k);
        if (d > 0) ++sig.pos; else ++sig.neg;
        done[k] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || a(i, k) == Rational(0)) continue;
            Rational f = a(i, k) / d;
            for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(k, j);
        }
        for (std::size_t j = 0; j < n; ++j)
            if (!done[j]) { a(k, j) = 0; a(j, k) = 0; }
    }
    return sig;
}

bool is_positive_definite(const IntMatrix& gram) {
    return signature(gram).pos == static_cast<int>(gram.rows());
}

} // namespace km3
