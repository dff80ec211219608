#include "km3/eisenstein.hpp"

#include <algorithm>
#include <set>

#include "km3/arith.hpp"

namespace km3 {

std::string EisensteinInt::str() const {
    if (y == 0) return std::to_string(x);
    std::string s;
    if (x != 0) s = std::to_string(x) + (y > 0 ? "+" : "-");
    else if (y < 0) s = "-";
    Int ay = iabs(y);
    if (ay != 1) s += std::to_string(ay);
    return s + "j";
}

EisensteinInt pow(EisensteinInt a, int e) {
    EisensteinInt r{1, 0};
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

bool divides(EisensteinInt b, EisensteinInt a) {
    if (b.is_zero()) return a.is_zero();
    EisensteinInt n = a * b.conj();
    Int d = b.norm();
    return n.x % d == 0 && n.y % d == 0;
}

EisensteinInt exact_div(EisensteinInt a, EisensteinInt b) {
    if (!divides(b, a)) throw DomainError("exact_div: " + b.str() + " does not divide " + a.str());
    EisensteinInt n = a * b.conj();
    Int d = b.norm();
    return {n.x / d, n.y / d};
}

const std::vector<EisensteinInt>& eisenstein_units() {
    static const std::vector<EisensteinInt> u = {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};
    return u;
}

EisensteinInt canonical_associate(EisensteinInt a) {
    if (a.is_zero()) return a;
    const EisensteinInt* best = nullptr;
    EisensteinInt cand[6];
    int k = 0;
    for (auto& u : eisenstein_units()) cand[k++] = a * u;
    for (auto& c : cand)
        if (c.x > 0 && c.y >= 0 && c.y < c.x) return c;
    for (auto& c : cand)
        if (c.x >= 0 && (!best || c < *best)) best = &c;
    return *best;
}

bool associates(EisensteinInt a, EisensteinInt b) { return canonical_associate(a) == canonical_associate(b); }

Splitting splitting_type(Int p) {
    if (!is_prime(p)) throw DomainError("splitting_type: " + std::to_string(p) + " is not prime");
    if (p == 3) return Splitting::ramified;
    return p % 3 == 1 ? Splitting::split : Splitting::inert;
}

const char* to_string(Splitting s) {
    switch (s) {
    case Splitting::split: return "split";
    case Splitting::inert: return "inert";
    case Splitting::ramified: return "ramified";
    }
    return "?";
}

std::vector<EisensteinInt> norm_solutions_up_to_units(Int n) {
    if (n <= 0) throw DomainError("solve_norm_equation: n must be positive");
    // 4n = (2x - y)^2 + 3y^2
    std::set<EisensteinInt> out;
    Int ymax = isqrt(4 * n / 3);
    for (Int y = -ymax; y <= ymax; ++y) {
        Int s = 4 * n - 3 * y * y;
        Int t = isqrt(s);
        if (t * t != s) continue;
        for (Int tt : {t, -t}) {
            if ((tt + y) % 2) continue;
            out.insert(canonical_associate({(tt + y) / 2, y}));
        }
    }
    return {out.begin(), out.end()};
}

std::vector<EisensteinInt> solve_norm_equation(Int n) {
    std::set<EisensteinInt> out;
    for (auto& m : norm_solutions_up_to_units(n)) out.insert(std::min(m, canonical_associate(m.conj())));
    return {out.begin(), out.end()};
}

EisensteinInt split_prime(Int p) {
    if (splitting_type(p) != Splitting::split) throw DomainError("split_prime: p is not split");
    return solve_norm_equation(p).front();
}

EisensteinInt EisensteinFactorization::value() const {
    EisensteinInt v = unit * pow(EisensteinInt::r(), ramified);
    for (auto& s : split) v = v * pow(s.prime, s.a) * pow(s.prime.conj(), s.b);
    for (auto [q, e] : inert) v = v * pow(EisensteinInt(q), e);
    return v;
}

EisensteinFactorization eisenstein_factorize(EisensteinInt mu) {
    if (mu.is_zero()) throw DomainError("eisenstein_factorize: zero");
    EisensteinFactorization f;
    EisensteinInt rest = mu;
    for (auto [p, e] : factorize(mu.norm()).factors) {
        switch (splitting_type(p)) {
        case Splitting::ramified:
            for (int i = 0; i < e; ++i) rest = exact_div(rest, EisensteinInt::r());
            f.ramified = e;
            break;
        case Splitting::inert:
            for (int i = 0; i < e / 2; ++i) rest = exact_div(rest, EisensteinInt(p));
            f.inert.emplace_back(p, e / 2);
            break;
        case Splitting::split: {
            SplitPart s{p, split_prime(p)};
            while (divides(s.prime, rest)) {
                rest = exact_div(rest, s.prime);
                ++s.a;
            }
            while (divides(s.prime.conj(), rest)) {
                rest = exact_div(rest, s.prime.conj());
                ++s.b;
            }
            f.split.push_back(s);
            break;
        }
        }
    }
    if (!rest.is_unit()) throw VerificationError("eisenstein_factorize: leftover non-unit " + rest.str());
    f.unit = rest;
    return f;
}

NormalizedSplit normalize_split(EisensteinInt mu) {
    EisensteinFactorization f = eisenstein_factorize(mu);
    NormalizedSplit ns{pow(EisensteinInt::r(), f.ramified), {1, 0}};
    for (auto& s : f.split) {
        ns.mu2 = ns.mu2 * pow(s.prime, s.a + s.b);
        ns.delta = ns.delta * pow(s.prime, s.b);
    }
    for (auto [q, e] : f.inert) ns.mu2 = ns.mu2 * pow(EisensteinInt(q), e);
    return ns;
}

} // namespace km3
