#include "km3/vinberg.hpp"

#include <algorithm>
#include <set>

#include "km3/arith.hpp"
#include "km3/genus.hpp"

namespace km3 {

Int cone_dot(const ConeVector& x, const ConeVector& y) {
    return x[0] * y[1] + x[1] * y[0] + 2 * x[2] * y[2] + x[2] * y[3] + x[3] * y[2] + 2 * x[3] * y[3];
}

ConeVector apply(const IntMatrix& g, const ConeVector& x) {
    ConeVector y{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) y[i] += g(i, j) * x[j];
    return y;
}

Int content(const ConeVector& x) { return gcd(gcd(x[0], x[1]), gcd(x[2], x[3])); }

const std::array<ConeVector, 5>& vinberg_roots() {
    static const std::array<ConeVector, 5> c{
        {{0, 1, -1, 1}, {-1, -1, 0, 0}, {1, 0, 0, -1}, {1, 0, 1, 0}, {0, 0, 1, 1}}};
    return c;
}

const ConeVector& orientation_vector() {
    static const ConeVector p{5, -4, 3, -3};
    return p;
}

const std::array<ConeVector, 5>& hilbert_basis() {
    static const std::array<ConeVector, 5> w{
        {{1, -1, 1, -1}, {2, -1, 1, -1}, {2, -2, 1, -1}, {3, -3, 2, -1}, {3, -3, 1, -2}}};
    return w;
}

IsometryWord reflection(const ConeVector& c) {
    Int c2 = cone_square(c);
    if (c2 != 2 && c2 != 6) throw DomainError("reflection: root square must be 2 or 6");
    IntMatrix m(4, 4);
    for (int j = 0; j < 4; ++j) {
        ConeVector e{};
        e[j] = 1;
        Int num = 2 * cone_dot(c, e);
        if (num % c2) throw DomainError("reflection: image is not integral");
        for (int i = 0; i < 4; ++i) m(i, j) = e[i] - (num / c2) * c[i];
    }
    return {m, {}};
}

const std::array<IsometryWord, 5>& simple_reflections() {
    static const std::array<IsometryWord, 5> r = [] {
        std::array<IsometryWord, 5> out;
        for (int i = 0; i < 5; ++i) {
            out[i] = reflection(vinberg_roots()[i]);
            out[i].word = {"r" + std::to_string(i + 1)};
        }
        return out;
    }();
    return r;
}

const std::array<IsometryWord, 4>& tau_generators() {
    static const std::array<IsometryWord, 4> t{{
        {IntMatrix{{1, 0, 0, 0}, {-1, 1, 2, 1}, {-1, 0, 1, 0}, {0, 0, 0, 1}}, {"t1"}},
        {IntMatrix{{1, 0, 0, 0}, {-1, 1, -1, -2}, {0, 0, 1, 0}, {1, 0, 0, 1}}, {"t2"}},
        {IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, -1, 0}}, {"t3"}},
        {IntMatrix{{0, -1, 0, 0}, {-1, 0, 0, 0}, {0, 0, -1, -1}, {0, 0, 0, 1}}, {"t4"}},
    }};
    return t;
}

bool preserves_gram(const IntMatrix& g) { return g.transpose() * gamma_gram() * g == gamma_gram(); }

GeneratorSet default_generators() {
    GeneratorSet g;
    for (int k = 0; k < 5; ++k) g.r[k] = simple_reflections()[k].matrix;
    for (int k = 0; k < 4; ++k) g.t[k] = tau_generators()[k].matrix;
    return g;
}

IntMatrix evaluate_word(const std::vector<std::string>& word, const GeneratorSet& gens) {
    IntMatrix m = IntMatrix::identity(4);
    for (const auto& w : word) {
        if (w.size() != 2 || (w[0] != 'r' && w[0] != 't')) throw DomainError("unknown generator " + w);
        int k = w[1] - '1';
        if (w[0] == 'r' && k >= 0 && k < 5) m = m * gens.r[k];
        else if (w[0] == 't' && k >= 0 && k < 4) m = m * gens.t[k];
        else throw DomainError("unknown generator " + w);
    }
    return m;
}

IntMatrix evaluate_word(const std::vector<std::string>& word) {
    static const GeneratorSet gens = default_generators();
    return evaluate_word(word, gens);
}

const std::vector<WordIdentity>& word_identities() {
    static const std::vector<WordIdentity> ids{
        {"t1 = (r1 r3 r2)^2 r4 r2", {"t1"}, {"r1", "r3", "r2", "r1", "r3", "r2", "r4", "r2"}},
        {"t2 = r1 r2 r4 r2 r1 r3 r2 r3", {"t2"}, {"r1", "r2", "r4", "r2", "r1", "r3", "r2", "r3"}},
        {"t3 = r3 r1 r2 r5 r1 r4", {"t3"}, {"r3", "r1", "r2", "r5", "r1", "r4"}},
        {"t4 = r1 r3 r2 r3 r1 r2", {"t4"}, {"r1", "r3", "r2", "r3", "r1", "r2"}},
        {"r1 r2 = t3^2 t2 t4", {"r1", "r2"}, {"t3", "t3", "t2", "t4"}},
        {"r1 r3 = t1 t3^2 t2 t4 t2", {"r1", "r3"}, {"t1", "t3", "t3", "t2", "t4", "t2"}},
        {"r1 r4 = t3^2 t2 t1 t4 t1", {"r1", "r4"}, {"t3", "t3", "t2", "t1", "t4", "t1"}},
        {"r1 r5 = t3^2 t2 t3", {"r1", "r5"}, {"t3", "t3", "t2", "t3"}},
        {"r2 r3 = t4 t3 t4 t1 t4 t3", {"r2", "r3"}, {"t4", "t3", "t4", "t1", "t4", "t3"}},
        {"r2 r4 = t3 t4 t3 t1 t4 t1", {"r2", "r4"}, {"t3", "t4", "t3", "t1", "t4", "t1"}},
        {"r2 r5 = t3 t4 t3^2", {"r2", "r5"}, {"t3", "t4", "t3", "t3"}},
        {"r3 r4 = t4 t3^2 t2 t3 t2 t4 t3", {"r3", "r4"}, {"t4", "t3", "t3", "t2", "t3", "t2", "t4", "t3"}},
        {"r3 r5 = t4 t3 (t4 t1)^2", {"r3", "r5"}, {"t4", "t3", "t4", "t1", "t4", "t1"}},
        {"r4 r5 = t3 t3 t4 t2 t3 t4", {"r4", "r5"}, {"t3", "t3", "t4", "t2", "t3", "t4"}},
    };
    return ids;
}

bool identity_holds(const WordIdentity& w) { return evaluate_word(w.lhs) == evaluate_word(w.rhs); }

bool identity_holds(const WordIdentity& w, const GeneratorSet& gens) {
    return evaluate_word(w.lhs, gens) == evaluate_word(w.rhs, gens);
}

bool in_negative_cone(const ConeVector& x) {
    return cone_square(x) <= 0 && cone_dot(orientation_vector(), x) <= 0;
}

bool in_fundamental_cone(const ConeVector& x) {
    if (!in_negative_cone(x)) return false;
    for (int j = 0; j < 4; ++j)
        if (cone_dot(vinberg_roots()[j], x) > 0) return false;
    return true;
}

bool in_reflection_chamber(const ConeVector& x) {
    return in_fundamental_cone(x) && cone_dot(vinberg_roots()[4], x) <= 0;
}

Reduction reduce_to_domain(const ConeVector& x, int max_steps) {
    if (x == ConeVector{}) throw DomainError("reduce_to_domain: zero vector");
    if (cone_square(x) > 0) throw DomainError("reduce_to_domain: vector has positive square");
    Reduction red;
    red.g = {IntMatrix::identity(4), {}};
    red.x0 = x;
    if (cone_dot(orientation_vector(), x) > 0) {
        red.negated = true;
        for (auto& v : red.x0) v = -v;
    }
    const auto& r = simple_reflections();
    for (int step = 0; step < max_steps; ++step) {
        int j = 0;
        while (j < 5 && cone_dot(vinberg_roots()[j], red.x0) <= 0) ++j;
        if (j == 5) return red;
        red.x0 = km3::apply(r[j].matrix, red.x0);
        red.g.matrix = r[j].matrix * red.g.matrix;
        red.g.word.insert(red.g.word.begin(), r[j].word[0]);
    }
    throw VerificationError("reduce_to_domain: no termination after " + std::to_string(max_steps) + " steps");
}

Int la_square_for(Int ell) {
    require_valid_ell(ell);
    return floor_mod(ell, 6) == 0 ? ell / 3 : 3 * ell;
}

namespace {

bool case_filter(Int ell, const ConeVector& x) {
    if (content(x) != 1) return false;
    if (floor_mod(ell, 6) == 0)
        return !(floor_mod(x[0], 3) == 0 && floor_mod(x[1], 3) == 0 && floor_mod(x[2] - x[3], 3) == 0);
    return floor_mod(x[0], 3) == 0 && floor_mod(x[1], 3) == 0 && floor_mod(x[2] - x[3], 3) == 0 &&
           floor_mod(x[3], 3) != 0;
}

} // namespace

std::vector<ConeVector> cone_points(Int ell) {
    require_valid_ell(ell);
    if (ell > 0) throw DomainError("cone_points: ell must be <= 0");
    const Int s = la_square_for(ell);
    const auto& w = hilbert_basis();
    if (s == 0) return {w[0]};

    // x = y + a1 w1 with y = a2 w2 + ... + a5 w5; every pairing of basis vectors is <= 0,
    // so y^2 only decreases in each a_i, and a1 is then forced by x^2 = y^2 + 2 a1 (w1.y).
    std::set<ConeVector> pts;
    ConeVector y{};
    auto add = [](ConeVector a, const ConeVector& b, Int k) {
        for (int i = 0; i < 4; ++i) a[i] += k * b[i];
        return a;
    };
    for (Int a5 = 0;; ++a5) {
        ConeVector y5 = add(ConeVector{}, w[4], a5);
        if (cone_square(y5) < s) break;
        for (Int a4 = 0;; ++a4) {
            ConeVector y4 = add(y5, w[3], a4);
            if (cone_square(y4) < s) break;
            for (Int a3 = 0;; ++a3) {
                ConeVector y3 = add(y4, w[2], a3);
                if (cone_square(y3) < s) break;
                for (Int a2 = 0;; ++a2) {
                    y = add(y3, w[1], a2);
                    Int y2 = cone_square(y);
                    if (y2 < s) break;
                    Int wy = cone_dot(w[0], y);
                    if (wy == 0) continue; // only y = 0, handled by s == 0
                    Int num = s - y2;      // <= 0, wy < 0
                    if (num % (2 * wy)) continue;
                    Int a1 = num / (2 * wy);
                    ConeVector x = add(y, w[0], a1);
                    if (cone_square(x) != s || !in_fundamental_cone(x)) throw VerificationError("cone enumeration");
                    if (case_filter(ell, x)) pts.insert(x);
                }
            }
        }
    }
    return {pts.begin(), pts.end()};
}

std::vector<ConeVector> enumerate_components(Int ell) {
    std::vector<ConeVector> out;
    const auto& c = vinberg_roots();
    for (const auto& x : cone_points(ell)) {
        // drop the c4-wall points off the c3-wall
        if (cone_dot(c[3], x) == 0 && cone_dot(c[2], x) != 0) continue;
        out.push_back(x);
    }
    return out;
}

namespace {

struct OrbitKey {
    ConeVector z;
    int parity; // -1 when the stabilizer contains a reflection
    auto operator<=>(const OrbitKey&) const = default;
};

OrbitKey orbit_key(const ConeVector& x) {
    Reduction r = reduce_to_domain(x);
    if (r.negated) throw DomainError("orbit_key: vector outside the chosen negative cone");
    OrbitKey k{r.x0, static_cast<int>(r.g.word.size() % 2)};
    for (const auto& c : vinberg_roots())
        if (cone_dot(c, r.x0) == 0) k.parity = -1;
    return k;
}

} // namespace

bool gamma_equivalent(const ConeVector& x, const ConeVector& y) { return orbit_key(x) == orbit_key(y); }

Int gamma_orbit_count(Int ell) {
    std::set<OrbitKey> keys;
    for (const auto& x : cone_points(ell)) keys.insert(orbit_key(x));
    return static_cast<Int>(keys.size());
}

IntLattice orthogonal_complement(const ConeVector& L) {
    if (content(L) != 1) throw DomainError("orthogonal_complement: L must be primitive");
    if (cone_square(L) >= 0) throw DomainError("orthogonal_complement: L must have negative square");
    IntMatrix row(1, 4);
    for (int j = 0; j < 4; ++j) {
        ConeVector e{};
        e[j] = 1;
        row(0, j) = cone_dot(L, e);
    }
    SmithForm s = smith_normal_form(row);
    IntMatrix K(4, 3);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j) K(i, j) = s.V(i, j + 1);
    IntMatrix g = K.transpose() * gamma_gram() * K;
    return IntLattice(canonical_form(g));
}

} // namespace km3
