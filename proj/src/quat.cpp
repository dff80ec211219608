#include "km3/quat.hpp"

#include <algorithm>
#include <cmath>

namespace km3 {

QuatElement QuatElement::operator+(const QuatElement& o) const {
    QuatElement r = *this;
    for (int i = 0; i < 4; ++i) r.c[i] += o.c[i];
    return r;
}

QuatElement QuatElement::operator-(const QuatElement& o) const {
    QuatElement r = *this;
    for (int i = 0; i < 4; ++i) r.c[i] -= o.c[i];
    return r;
}

QuatElement QuatElement::operator*(const QuatElement& o) const {
    const Rational &a = alg.a, &b = alg.b;
    const auto& [x1, y1, z1, t1] = c;
    const auto& [x2, y2, z2, t2] = o.c;
    QuatElement r{alg, {}};
    r.c[0] = x1 * x2 + a * y1 * y2 + b * z1 * z2 - a * b * t1 * t2;
    r.c[1] = x1 * y2 + y1 * x2 - b * z1 * t2 + b * t1 * z2;
    r.c[2] = x1 * z2 + z1 * x2 + a * y1 * t2 - a * t1 * y2;
    r.c[3] = x1 * t2 + t1 * x2 + y1 * z2 - z1 * y2;
    return r;
}

QuatElement QuatElement::operator*(const Rational& s) const {
    QuatElement r = *this;
    for (auto& v : r.c) v *= s;
    return r;
}

QuatElement QuatElement::conj() const { return {alg, {c[0], -c[1], -c[2], -c[3]}}; }

Rational QuatElement::reduced_norm() const {
    return c[0] * c[0] - alg.a * c[1] * c[1] - alg.b * c[2] * c[2] + alg.a * alg.b * c[3] * c[3];
}

std::string QuatElement::str() const {
    return "(" + to_string(c[0]) + ", " + to_string(c[1]) + ", " + to_string(c[2]) + ", " + to_string(c[3]) + ")";
}

namespace {

RatMatrix coordinate_matrix(const std::array<QuatElement, 4>& basis) {
    RatMatrix m(4, 4);
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) m(i, j) = basis[j].c[i];
    return m;
}

bool integral(const Rational& q) { return q.denominator() == 1; }

} // namespace

std::array<Rational, 4> QuatOrder::coordinates(const QuatElement& x) const {
    RatMatrix inv = inverse(coordinate_matrix(basis));
    std::vector<Rational> v(x.c.begin(), x.c.end());
    auto w = inv * v;
    return {w[0], w[1], w[2], w[3]};
}

bool QuatOrder::contains(const QuatElement& x) const {
    for (auto& q : coordinates(x))
        if (!integral(q)) return false;
    return true;
}

QuatOrder make_order(const QuatAlgebra& h, const std::array<QuatElement, 4>& basis) {
    QuatOrder o{h, basis, IntMatrix(4, 4), 0};
    if (determinant(coordinate_matrix(basis)) == Rational(0)) throw VerificationError("order basis is degenerate");
    if (!o.contains(QuatElement::scalar(h, 1))) throw VerificationError("order does not contain 1");
    for (int i = 0; i < 4; ++i) {
        if (!integral(basis[i].reduced_trace()) || !integral(basis[i].reduced_norm()))
            throw VerificationError("basis element " + basis[i].str() + " is not integral");
        for (int j = 0; j < 4; ++j) {
            QuatElement p = basis[i] * basis[j];
            if (!o.contains(p)) throw VerificationError("order not closed: product " + p.str());
            Rational t = p.reduced_trace();
            if (!integral(t)) throw VerificationError("non-integral trace form");
            o.trace_gram(i, j) = t.numerator();
        }
    }
    Int det = determinant(o.trace_gram);
    Int d = isqrt(iabs(det));
    if (det >= 0 || d * d != -det) throw VerificationError("trace Gram determinant is not minus a square");
    o.reduced_disc = d;
    return o;
}

bool same_lattice(const QuatOrder& o1, const QuatOrder& o2) {
    for (auto& b : o1.basis)
        if (!o2.contains(b)) return false;
    for (auto& b : o2.basis)
        if (!o1.contains(b)) return false;
    return true;
}

std::set<Place> ramified_places(const QuatAlgebra& h) {
    std::set<Place> candidates{kRealPlace, 2};
    for (const Rational& q : {h.a, h.b})
        for (Int n : {q.numerator(), q.denominator()})
            if (iabs(n) > 1)
                for (Int p : prime_divisors(n)) candidates.insert(p);
    std::set<Place> out;
    for (Place p : candidates)
        if (hilbert_symbol(h.a, h.b, p) == -1) out.insert(p);
    if (out.size() % 2) throw VerificationError("odd number of ramified places");
    return out;
}

Int discriminant_from_places(const QuatAlgebra& h) {
    Int d = 1;
    for (Place p : ramified_places(h))
        if (p != kRealPlace) d *= p;
    return d;
}

Int normalize_minus3(Int d) {
    if (d == 0) throw DomainError("normalize_minus3: zero");
    Int s = squarefree_part(d);
    if (s % 3 == 0) s /= 3;
    Int out = s < 0 ? -1 : 1;
    for (Int p : prime_divisors(s))
        if (p % 3 == 2) out *= p;
    return out;
}

bool is_admissible_dh(Int d_H) {
    if (d_H == 0) return false;
    Factorization f = factorize(d_H);
    for (auto [p, e] : f.factors)
        if (e != 1 || p % 3 != 2) return false;
    return true;
}

AlgebraDiscriminant algebra_discriminant(Int d_H) {
    if (!is_admissible_dh(d_H))
        throw DomainError("algebra_discriminant: d_H = " + std::to_string(d_H) +
                          " must be square-free with all prime factors = 2 mod 3");
    Factorization f = factorize(d_H);
    std::size_t m = f.factors.size() + (d_H < 0 ? 1 : 0);
    AlgebraDiscriminant ad;
    ad.finite = (m % 2 == 0) ? iabs(d_H) : 3 * iabs(d_H);
    ad.ramified_at_infinity = d_H < 0;
    return ad;
}

QuatAlgebra minus3_algebra(Int d) { return {Rational(-3), Rational(d)}; }

QuatElement embed(const QuatAlgebra& h, EisensteinInt z) {
    // j = (-1 + alpha)/2
    return {h, {Rational(2 * z.x - z.y, 2), Rational(z.y, 2), 0, 0}};
}

namespace {

QuatElement theta(const QuatAlgebra& h, bool three_divides) {
    if (three_divides) return {h, {0, 0, 1, 0}};
    return {h, {0, Rational(-1, 3), 0, Rational(1, 3)}};
}

QuatOrder build(Int d, bool three_divides, EisensteinInt mu) {
    QuatAlgebra h = minus3_algebra(d);
    QuatElement one = QuatElement::scalar(h, 1);
    QuatElement j = embed(h, EisensteinInt::j());
    QuatElement mt = embed(h, mu) * theta(h, three_divides);
    return make_order(h, {one, j, mt, j * mt});
}

Int checked_dh(Int d_H) {
    if (!is_admissible_dh(d_H))
        throw DomainError("d_H = " + std::to_string(d_H) + " is not admissible (square-free, primes = 2 mod 3)");
    return d_H;
}

} // namespace

QuatOrder formal_order(Int d) {
    if (floor_mod(d, 3) != 1) throw DomainError("formal_order: need d = 1 mod 3");
    return build(d, false, {1, 0});
}

QuatOrder maximal_order(Int d_H) { return order_mu(d_H, {1, 0}); }

QuatOrder order_mu(Int d_H, EisensteinInt mu) {
    if (mu.is_zero()) throw DomainError("order_mu: mu = 0");
    Int D = algebra_discriminant(checked_dh(d_H)).finite;
    return build(d_H, D % 3 == 0, mu);
}

bool is_eichler_certified(const QuatOrder& o) {
    Int D_H = discriminant_from_places(o.alg);
    if (o.reduced_disc % D_H) return false;
    Int N = o.reduced_disc / D_H;
    if (gcd(N, D_H) != 1) return false;
    for (auto [p, e] : factorize(N).factors)
        if (e > 1) return false;
    return true;
}

Int e3(Int D_H, Int N) {
    if (D_H <= 0 || N <= 0) throw DomainError("e3: D_H and N must be positive");
    if (gcd(N, D_H) != 1)
        throw Unsupported("e3: level not coprime to D_H; general orders are outside the certified formula");
    if (N % 9 == 0) return 0;
    for (auto [p, e] : factorize(N).factors)
        if (e > 1) throw Unsupported("e3: level " + std::to_string(N) + " is not square-free; not certified");
    Int v = 1;
    for (auto [p, e] : factorize(D_H).factors) v *= 1 - kronecker_symbol(-3, p);
    for (auto [p, e] : factorize(N).factors) v *= 1 + kronecker_symbol(-3, p);
    return v;
}

namespace {

void check_ell(Int ell) {
    if (ell <= 0 || (floor_mod(ell, 6) != 0 && floor_mod(ell, 6) != 2))
        throw DomainError("ell = " + std::to_string(ell) + " must be positive and = 0 or 2 mod 6");
}

} // namespace

bool has_norm_minus_one_unit(Int ell) {
    check_ell(ell);
    return ell % 3 == 2 || (ell % 3 == 0 && ell % 9 != 0);
}

KummerCount kummer_structure_count(Int ell) {
    check_ell(ell);
    KummerCount k;
    k.ell = ell;
    k.d_H = rad2(ell / 2);
    k.D_H = algebra_discriminant(k.d_H).finite;
    if ((ell / 2) % k.D_H != 0) {
        k.reason = "D_H does not divide ell/2";
        return k;
    }
    k.mu_norm = ell / (2 * k.D_H);
    auto sols = solve_norm_equation(k.mu_norm);
    if (sols.empty()) {
        k.reason = "ell/(2 D_H) is not a norm from Z[j]";
        return k;
    }
    k.mu = sols.front();
    if (k.D_H == 1) {
        k.reason = "D_H = 1: only the lower bound n_ks >= e3/2 is known";
        return k;
    }
    QuatOrder o = order_mu(k.d_H, *k.mu);
    if (o.reduced_disc != k.mu_norm * k.D_H) throw VerificationError("order discriminant mismatch");
    if (!is_eichler_certified(o)) {
        k.reason = "order is not a certified Eichler order; e3 deferred to general-order theory";
        return k;
    }
    try {
        k.e3 = e3(k.D_H, k.mu_norm);
    } catch (const Unsupported& u) {
        k.reason = u.what();
        return k;
    }
    if (ell % 9 == 0) {
        k.n_ks = 2 * *k.e3;
    } else {
        if (*k.e3 % 2) throw VerificationError("odd e3 with a norm -1 unit");
        k.n_ks = *k.e3 / 2;
    }
    k.exact = true;

    // mu_norm a product of distinct primes = 1 mod 3
    bool hyp = true;
    for (auto [p, e] : factorize(k.mu_norm).factors)
        if (e > 1 || p % 3 != 1) hyp = false;
    k.closed_form_applies = hyp;
    if (hyp) {
        if (ell % 9 == 0) throw VerificationError("closed-form hypotheses with 9 | ell");
        int m = static_cast<int>(factorize(ell / 2).factors.size());
        int eps = (k.D_H % 3 == 0) ? -2 : -1;
        k.closed_form = Int(1) << (m + eps);
        if (*k.closed_form != *k.n_ks)
            throw VerificationError("Kummer structure count disagrees with the closed form");
    }
    return k;
}

namespace {

QuatElement inverse_el(const QuatElement& x) {
    Rational n = x.reduced_norm();
    if (n == Rational(0)) throw DomainError("element is not invertible");
    return x.conj() * (Rational(1) / n);
}

bool conj_maps_onto(const QuatOrder& src, const QuatOrder& dst, const QuatElement& delta) {
    QuatElement di = inverse_el(delta);
    std::array<QuatElement, 4> img;
    for (int i = 0; i < 4; ++i) img[i] = delta * src.basis[i] * di;
    for (auto& b : img)
        if (!dst.contains(b)) return false;
    // containment plus equal covolume
    RatMatrix a(4, 4), b(4, 4);
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) {
            a(i, j) = img[j].c[i];
            b(i, j) = dst.basis[j].c[i];
        }
    Rational da = determinant(a), db = determinant(b);
    return da == db || da == -db;
}

} // namespace

bool conjugation_iso_check(Int d_H, EisensteinInt mu, EisensteinInt mu_prime) {
    if (mu.norm() != mu_prime.norm()) throw DomainError("conjugation_iso_check: norms differ");
    NormalizedSplit a = normalize_split(mu), b = normalize_split(mu_prime);
    if (!associates(a.mu2, b.mu2)) return false;
    QuatOrder oa = order_mu(d_H, mu), ob = order_mu(d_H, mu_prime), o2 = order_mu(d_H, a.mu2);
    QuatAlgebra h = oa.alg;
    return conj_maps_onto(oa, o2, embed(h, a.delta)) && conj_maps_onto(ob, o2, embed(h, b.delta));
}

std::vector<QuatElement> cube_roots_of_unity(const QuatOrder& o) {
    // Nrd(sum x_i b_i) = x^T G x / 2 with G_ij = Trd(b_i conj(b_j))
    IntMatrix G(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) G(i, j) = (o.basis[i] * o.basis[j].conj()).reduced_trace().numerator();
    if (!is_positive_definite(G)) throw DomainError("cube_roots_of_unity: algebra must be definite");
    RatMatrix Gi = inverse(to_rational(G));
    std::array<Int, 4> bound;
    for (int i = 0; i < 4; ++i) {
        Rational v = 2 * Gi(i, i); // x^T G x <= 2
        bound[i] = static_cast<Int>(std::floor(std::sqrt(boost::rational_cast<double>(v)))) + 1;
    }
    std::vector<QuatElement> out;
    std::array<Int, 4> x;
    for (x[0] = -bound[0]; x[0] <= bound[0]; ++x[0])
        for (x[1] = -bound[1]; x[1] <= bound[1]; ++x[1])
            for (x[2] = -bound[2]; x[2] <= bound[2]; ++x[2])
                for (x[3] = -bound[3]; x[3] <= bound[3]; ++x[3]) {
                    QuatElement w = QuatElement::scalar(o.alg, 0);
                    for (int i = 0; i < 4; ++i) w = w + o.basis[i] * Rational(x[i]);
                    if (w.reduced_trace() == Rational(-1) && w.reduced_norm() == Rational(1)) out.push_back(w);
                }
    return out;
}

} // namespace km3
