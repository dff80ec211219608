#include "km3/arith.hpp"

#include <algorithm>
#include <string>

namespace km3 {

Int Factorization::value() const {
    Int v = sign;
    for (auto [p, e] : factors)
        for (int i = 0; i < e; ++i) v *= p;
    return v;
}

Factorization factorize(Int n, Int bound) {
    if (n == 0) throw DomainError("factorize: zero has no factorization");
    if (n == INT64_MIN || iabs(n) > bound)
        throw DomainError("factorize: |n| exceeds trial-division bound " + std::to_string(bound));
    Factorization f;
    f.sign = n < 0 ? -1 : 1;
    Int m = iabs(n);
    for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) f.factors.emplace_back(p, e);
    }
    if (m > 1) f.factors.emplace_back(m, 1);
    return f;
}

bool is_prime(Int n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<Int> prime_divisors(Int n) {
    std::vector<Int> out;
    for (auto [p, e] : factorize(n).factors) out.push_back(p);
    return out;
}

Int valuation(Int n, Int p) {
    if (n == 0) throw DomainError("valuation of zero");
    Int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

Int powmod(Int b, Int e, Int m) {
    __int128 r = 1, x = floor_mod(b, m);
    while (e > 0) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<Int>(r % m);
}

Int squarefree_part(Int n) {
    if (n == 0) throw DomainError("square-free part of zero");
    Factorization f = factorize(n);
    Int s = f.sign;
    for (auto [p, e] : f.factors)
        if (e % 2) s *= p;
    return s;
}

Int square_class(const Rational& q) {
    if (q == Rational(0)) throw DomainError("square class of zero");
    return squarefree_part(q.numerator() * q.denominator());
}

int kronecker_symbol(Int d, Int p) {
    if (!is_prime(p)) throw DomainError("kronecker_symbol: p = " + std::to_string(p) + " is not prime");
    if (p == 2) {
        if (d % 2 == 0) return 0;
        Int r = floor_mod(d, 8);
        return (r == 1 || r == 7) ? 1 : -1;
    }
    Int r = floor_mod(d, p);
    if (r == 0) return 0;
    return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

namespace {

// a = p^alpha * u with u a p-adic unit (as an integer)
void split_valuation(Int a, Int p, Int& alpha, Int& u) {
    alpha = 0;
    while (a % p == 0) {
        a /= p;
        ++alpha;
    }
    u = a;
}

int sign_pow(Int e) { return (e % 2) ? -1 : 1; }

} // namespace

int hilbert_symbol(const Rational& a, const Rational& b, Place p) {
    if (a == Rational(0) || b == Rational(0)) throw DomainError("hilbert_symbol: zero argument");
    if (p == kRealPlace) return (a < 0 && b < 0) ? -1 : 1;
    if (!is_prime(p)) throw DomainError("hilbert_symbol: not a place: " + std::to_string(p));
    // a*den(a)^2 and a share a square class; use num*den to stay integral
    Int ai = a.numerator() * a.denominator();
    Int bi = b.numerator() * b.denominator();
    Int alpha, beta, u, v;
    split_valuation(ai, p, alpha, u);
    split_valuation(bi, p, beta, v);
    if (p != 2) {
        Int eps = ((p - 1) / 2) % 2;
        int s = sign_pow(alpha * beta * eps);
        if (beta % 2) s *= kronecker_symbol(u, p);
        if (alpha % 2) s *= kronecker_symbol(v, p);
        return s;
    }
    Int u8 = floor_mod(u, 8), v8 = floor_mod(v, 8);
    auto e = [](Int x) { return ((x - 1) / 2) % 2; };
    auto w = [](Int x) { return ((x * x - 1) / 8) % 2; };
    return sign_pow(e(u8) * e(v8) + alpha * w(v8) + beta * w(u8));
}

bool is_local_square(Int d, Place p) {
    if (d == 0) throw DomainError("is_local_square: zero");
    if (p == kRealPlace) return d > 0;
    Int alpha, u;
    split_valuation(d, p, alpha, u);
    if (alpha % 2) return false;
    if (p == 2) return floor_mod(u, 8) == 1;
    return kronecker_symbol(u, p) == 1;
}

Int rad2(Int c) {
    if (c == 0) throw DomainError("rad2: zero");
    Int r = 1;
    for (auto [p, e] : factorize(c).factors)
        if (e % 2 && p % 3 == 2) r *= p;
    return r;
}

SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    IntMatrix D = m, U = IntMatrix::identity(R), V = IntMatrix::identity(C);
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        for (std::size_t t = 0; t < C; ++t) std::swap(D(i, t), D(j, t));
        for (std::size_t t = 0; t < R; ++t) std::swap(U(i, t), U(j, t));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t t = 0; t < R; ++t) std::swap(D(t, i), D(t, j));
        for (std::size_t t = 0; t < C; ++t) std::swap(V(t, i), V(t, j));
    };
    // row_i -= q * row_k
    auto row_op = [&](std::size_t i, std::size_t k, Int q) {
        for (std::size_t t = 0; t < C; ++t) D(i, t) -= q * D(k, t);
        for (std::size_t t = 0; t < R; ++t) U(i, t) -= q * U(k, t);
    };
    auto col_op = [&](std::size_t i, std::size_t k, Int q) {
        for (std::size_t t = 0; t < R; ++t) D(t, i) -= q * D(t, k);
        for (std::size_t t = 0; t < C; ++t) V(t, i) -= q * V(t, k);
    };

    const std::size_t n = std::min(R, C);
    for (std::size_t k = 0; k < n; ++k) {
        for (;;) {
            // smallest nonzero entry of the trailing block
            std::size_t pi = R, pj = C;
            for (std::size_t i = k; i < R; ++i)
                for (std::size_t j = k; j < C; ++j)
                    if (D(i, j) != 0 && (pi == R || iabs(D(i, j)) < iabs(D(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == R) break;
            if (pi != k) swap_rows(pi, k);
            if (pj != k) swap_cols(pj, k);
            bool clean = true;
            for (std::size_t i = k + 1; i < R; ++i) {
                row_op(i, k, floor_div(D(i, k), D(k, k)));
                if (D(i, k) != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < C; ++j) {
                col_op(j, k, floor_div(D(k, j), D(k, k)));
                if (D(k, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility of the rest by the pivot
            std::size_t bad = R;
            for (std::size_t i = k + 1; i < R && bad == R; ++i)
                for (std::size_t j = k + 1; j < C; ++j)
                    if (D(i, j) % D(k, k) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == R) break;
            row_op(k, bad, -1);
        }
        if (D(k, k) < 0) {
            for (std::size_t t = 0; t < C; ++t) D(k, t) = -D(k, t);
            for (std::size_t t = 0; t < R; ++t) U(k, t) = -U(k, t);
        }
    }
    return {U, D, V};
}

LocalInvariants local_invariants(const std::vector<Rational>& diag, Place p) {
    LocalInvariants li;
    Rational prod = 1;
    for (auto& a : diag) {
        if (a == Rational(0)) throw DomainError("local_invariants: zero coefficient");
        prod *= a;
    }
    li.d = square_class(prod);
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) li.eps *= hilbert_symbol(diag[i], diag[j], p);
    return li;
}

bool rank4_represents_zero(const std::vector<Rational>& diag, Place p) {
    if (diag.size() != 4) throw DomainError("rank4_represents_zero: need 4 coefficients");
    LocalInvariants li = local_invariants(diag, p);
    if (!is_local_square(li.d, p)) return true;
    return li.eps == hilbert_symbol(-1, -1, p);
}

} // namespace km3
