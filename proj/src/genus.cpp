#include "km3/genus.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace km3 {

namespace {

void require_definite(const IntMatrix& g, const char* who) {
    if (!g.square() || !is_positive_definite(g)) throw DomainError(std::string(who) + ": lattice must be positive definite");
}

Int vnorm(const IntMatrix& g, const std::vector<Int>& v) { return dot(g, v, v); }

Int det3(const std::vector<Int>& a, const std::vector<Int>& b, const std::vector<Int>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

} // namespace

std::vector<std::vector<Int>> short_vectors(const IntMatrix& gram, Int bound) {
    require_definite(gram, "short_vectors");
    const std::size_t n = gram.rows();
    RatMatrix gi = inverse(to_rational(gram));
    std::vector<Int> box(n);
    for (std::size_t i = 0; i < n; ++i)
        box[i] = static_cast<Int>(std::floor(std::sqrt(boost::rational_cast<double>(gi(i, i) * bound)) + 1e-9)) + 1;
    std::vector<std::vector<Int>> out;
    std::vector<Int> v(n, 0);
    // odometer over the box
    for (std::size_t i = 0; i < n; ++i) v[i] = -box[i];
    for (;;) {
        bool zero = std::all_of(v.begin(), v.end(), [](Int t) { return t == 0; });
        if (!zero && vnorm(gram, v) <= bound) out.push_back(v);
        std::size_t k = 0;
        while (k < n && v[k] == box[k]) {
            v[k] = -box[k];
            ++k;
        }
        if (k == n) break;
        ++v[k];
    }
    return out;
}

Int lattice_minimum(const IntMatrix& gram) {
    IntMatrix r = reduce_gram(gram);
    Int b = r(0, 0);
    for (std::size_t i = 1; i < r.rows(); ++i) b = std::min(b, r(i, i));
    Int m = b;
    for (auto& v : short_vectors(r, b)) m = std::min(m, vnorm(r, v));
    return m;
}

IntMatrix reduce_gram(const IntMatrix& gram) {
    require_definite(gram, "reduce_gram");
    const std::size_t n = gram.rows();
    IntMatrix B = IntMatrix::identity(n); // columns are basis vectors
    auto G = [&]() { return B.transpose() * gram * B; };
    for (bool changed = true; changed;) {
        changed = false;
        IntMatrix g = G();
        // sort by norm
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return g(a, a) < g(b, b); });
        IntMatrix P(n, n);
        for (std::size_t i = 0; i < n; ++i) P(idx[i], i) = 1;
        if (P != IntMatrix::identity(n)) {
            B = B * P;
            g = G();
        }
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) {
                if (i == j || g(i, i) == 0) continue;
                // b_j -= q b_i with q the nearest integer to g_ij / g_ii
                Int q = floor_div(2 * g(i, j) + g(i, i), 2 * g(i, i));
                if (q == 0) continue;
                IntMatrix T = IntMatrix::identity(n);
                T(i, j) = -q;
                IntMatrix B2 = B * T;
                IntMatrix g2 = B2.transpose() * gram * B2;
                if (g2(j, j) < g(j, j)) {
                    B = B2;
                    g = g2;
                    changed = true;
                }
            }
        if (n == 3 && !changed) {
            // b3 +- b1 +- b2
            for (Int s1 : {-1, 1})
                for (Int s2 : {-1, 1}) {
                    IntMatrix T = IntMatrix::identity(3);
                    T(0, 2) = s1;
                    T(1, 2) = s2;
                    IntMatrix B2 = B * T;
                    IntMatrix g2 = B2.transpose() * gram * B2;
                    if (g2(2, 2) < g(2, 2)) {
                        B = B2;
                        g = g2;
                        changed = true;
                    }
                }
        }
    }
    return G();
}

IntMatrix canonical_form(const IntMatrix& gram) {
    if (gram.rows() != 3) throw DomainError("canonical_form: ternary lattices only");
    IntMatrix r = reduce_gram(gram);
    Int bound = std::max({r(0, 0), r(1, 1), r(2, 2)});
    auto sv = short_vectors(r, bound);
    std::sort(sv.begin(), sv.end(), [&](auto& a, auto& b) { return vnorm(r, a) < vnorm(r, b); });

    // successive minima by rank growth
    Int lam[3] = {0, 0, 0};
    {
        std::vector<std::vector<Int>> span;
        auto rank_with = [&](const std::vector<Int>& v) {
            std::vector<std::vector<Int>> m = span;
            m.push_back(v);
            IntMatrix M(m.size(), 3);
            for (std::size_t i = 0; i < m.size(); ++i)
                for (int j = 0; j < 3; ++j) M(i, j) = m[i][j];
            SmithForm s = smith_normal_form(M);
            std::size_t rk = 0;
            for (std::size_t i = 0; i < std::min<std::size_t>(m.size(), 3); ++i)
                if (s.D(i, i) != 0) ++rk;
            return rk;
        };
        for (auto& v : sv) {
            if (span.size() == 3) break;
            if (rank_with(v) > span.size()) {
                lam[span.size()] = vnorm(r, v);
                span.push_back(v);
            }
        }
        if (span.size() != 3) throw VerificationError("canonical_form: short vectors do not span");
    }
    std::vector<std::vector<Int>> V[3];
    for (auto& v : sv)
        for (int k = 0; k < 3; ++k)
            if (vnorm(r, v) == lam[k]) V[k].push_back(v);

    bool found = false;
    std::array<Int, 3> best{};
    for (auto& a : V[0])
        for (auto& b : V[1]) {
            if (&a == &b) continue;
            Int ab = dot(r, a, b);
            if (found && ab > best[0]) continue;
            for (auto& c : V[2]) {
                Int d = det3(a, b, c);
                if (d != 1 && d != -1) continue;
                std::array<Int, 3> key{ab, dot(r, a, c), dot(r, b, c)};
                if (!found || key < best) {
                    best = key;
                    found = true;
                }
            }
        }
    if (!found) throw VerificationError("canonical_form: no basis realizes the successive minima");
    return IntMatrix{{lam[0], best[0], best[1]}, {best[0], lam[1], best[2]}, {best[1], best[2], lam[2]}};
}

std::vector<TernaryClass> enumerate_classes(Int det, Int bound) {
    if (det <= 0) throw DomainError("enumerate_classes: determinant must be positive");
    if (det > bound) throw DomainError("enumerate_classes: determinant exceeds bound " + std::to_string(bound));
    const Int cap = 4 * det;
    std::set<std::vector<Int>> seen;
    std::vector<TernaryClass> out;
    for (Int a = 2; a * a * a <= cap; a += 2)
        for (Int b = a; a * b * b <= cap; b += 2)
            for (Int c = b; a * b * c <= cap; c += 2)
                for (Int f = -a / 2; f <= a / 2; ++f)     // g12
                    for (Int e = -a / 2; e <= a / 2; ++e) // g13
                        for (Int d = -b / 2; d <= b / 2; ++d) { // g23
                            IntMatrix g{{a, f, e}, {f, b, d}, {e, d, c}};
                            if (determinant(g) != det || !is_positive_definite(g)) continue;
                            IntMatrix cf = canonical_form(g);
                            if (seen.insert(cf.data()).second) out.push_back({cf, cf(0, 0)});
                        }
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.gram.data() < y.gram.data(); });
    return out;
}

bool is_isometric(const IntLattice& a, const IntLattice& b) {
    if (a.rank() != b.rank()) throw DomainError("is_isometric: rank mismatch");
    if (a.rank() != 3) throw DomainError("is_isometric: ternary lattices only");
    require_definite(a.gram, "is_isometric");
    require_definite(b.gram, "is_isometric");
    if (a.det() != b.det()) return false;
    IntMatrix ga = reduce_gram(a.gram), gb = reduce_gram(b.gram);
    Int bound = std::max({ga(0, 0), ga(1, 1), ga(2, 2)});
    auto sv = short_vectors(gb, bound);
    std::vector<std::vector<Int>> V[3];
    for (auto& v : sv)
        for (int k = 0; k < 3; ++k)
            if (vnorm(gb, v) == ga(k, k)) V[k].push_back(v);
    for (auto& x : V[0])
        for (auto& y : V[1]) {
            if (dot(gb, x, y) != ga(0, 1)) continue;
            for (auto& z : V[2]) {
                if (dot(gb, x, z) != ga(0, 2) || dot(gb, y, z) != ga(1, 2)) continue;
                Int d = det3(x, y, z);
                if (d == 1 || d == -1) return true;
            }
        }
    return false;
}

namespace {

struct FiniteGroup {
    std::vector<Int> mod;
    std::vector<std::vector<Int>> elems;

    explicit FiniteGroup(const std::vector<Int>& m) : mod(m) {
        std::vector<Int> v(m.size(), 0);
        for (;;) {
            elems.push_back(v);
            std::size_t k = 0;
            while (k < m.size() && v[k] == m[k] - 1) {
                v[k] = 0;
                ++k;
            }
            if (k == m.size()) break;
            ++v[k];
        }
    }

    Int order_of(const std::vector<Int>& x) const {
        Int o = 1;
        for (std::size_t i = 0; i < mod.size(); ++i) {
            Int oi = mod[i] / gcd(x[i], mod[i]);
            o = o / gcd(o, oi) * oi;
        }
        return o;
    }

    std::vector<Int> combine(const std::vector<std::vector<Int>>& imgs, const std::vector<Int>& coeff) const {
        std::vector<Int> y(mod.size(), 0);
        for (std::size_t g = 0; g < imgs.size(); ++g)
            for (std::size_t i = 0; i < mod.size(); ++i) y[i] = floor_mod(y[i] + coeff[g] * imgs[g][i], mod[i]);
        return y;
    }
};

} // namespace

bool fqf_isomorphic(const FiniteQuadForm& a, const FiniteQuadForm& b, Int bound) {
    if (a.order() > bound || b.order() > bound)
        throw DomainError("fqf_isomorphic: group order exceeds bound " + std::to_string(bound));
    if (a.invariant_factors != b.invariant_factors) return false; // invariant factors classify the group
    const std::size_t r = a.invariant_factors.size();
    FiniteGroup G(a.invariant_factors);
    std::vector<std::vector<Int>> gens(r);
    for (std::size_t i = 0; i < r; ++i) {
        gens[i] = std::vector<Int>(r, 0);
        gens[i][i] = 1;
    }
    // candidate images per generator: same order, same q
    std::vector<std::vector<const std::vector<Int>*>> cand(r);
    for (auto& y : G.elems)
        for (std::size_t i = 0; i < r; ++i)
            if (G.order_of(y) == a.invariant_factors[i] && b.q(y) == a.q(gens[i])) cand[i].push_back(&y);

    std::vector<std::vector<Int>> img(r);
    auto injective = [&]() {
        std::set<std::vector<Int>> seen;
        for (auto& x : G.elems)
            if (!seen.insert(G.combine(img, x)).second) return false;
        return true;
    };
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == r) return injective();
        for (auto* y : cand[i]) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                if (b.b(*y, img[j]) != a.b(gens[i], gens[j])) ok = false;
            if (!ok) continue;
            img[i] = *y;
            if (self(self, i + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

bool same_genus(const IntLattice& a, const IntLattice& b) {
    if (!a.is_even() || !b.is_even()) throw DomainError("same_genus: lattices must be even");
    if (a.rank() != b.rank()) return false;
    if (!(a.signature() == b.signature())) return false;
    return fqf_isomorphic(discriminant_form(a), discriminant_form(b));
}

Int genus_count(Int ell) {
    require_valid_ell(ell);
    if (ell >= 0) throw DomainError("genus_count: ell must be negative");
    IntLattice target = ns_lattice(ell).scaled(-1);
    Int n = 0;
    for (auto& c : enumerate_classes(-ell))
        if (same_genus(IntLattice(c.gram), target)) ++n;
    return n;
}

} // namespace km3
