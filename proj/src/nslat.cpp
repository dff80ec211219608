#include "km3/nslat.hpp"

#include <algorithm>
#include <numeric>

namespace km3 {

IntLattice::IntLattice(IntMatrix g) : gram(std::move(g)) {
    if (!gram.square()) throw DomainError("Gram matrix must be square");
    for (std::size_t i = 0; i < gram.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (gram(i, j) != gram(j, i)) throw DomainError("Gram matrix must be symmetric");
}

bool IntLattice::is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
        if (gram(i, i) % 2) return false;
    return true;
}

Rational mod2(const Rational& v) {
    Int n = v.numerator(), d = v.denominator();
    return Rational(floor_mod(n, 2 * d), d);
}

Rational mod1(const Rational& v) {
    Int n = v.numerator(), d = v.denominator();
    return Rational(floor_mod(n, d), d);
}

Int FiniteQuadForm::order() const {
    Int o = 1;
    for (Int d : invariant_factors) o *= d;
    return o;
}

Rational FiniteQuadForm::q(const std::vector<Int>& x) const {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += Rational(x[i] * x[i]) * gram_q(i, i);
        for (std::size_t j = i + 1; j < x.size(); ++j) s += Rational(2 * x[i] * x[j]) * gram_q(i, j);
    }
    return mod2(s);
}

Rational FiniteQuadForm::b(const std::vector<Int>& x, const std::vector<Int>& y) const {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) s += Rational(x[i] * y[j]) * gram_q(i, j);
    return mod1(s);
}

bool valid_ell(Int ell) {
    Int r = floor_mod(ell, 6);
    return r == 0 || r == 2;
}

void require_valid_ell(Int ell) {
    if (!valid_ell(ell))
        throw DomainError("ell = " + std::to_string(ell) + " violates the constraint ell = 0 or 2 (mod 6)");
}

IntLattice ns_lattice(Int ell) {
    require_valid_ell(ell);
    if (ell == 0) throw DomainError("ns_lattice: ell must be nonzero");
    if (floor_mod(ell, 6) == 2) {
        Int k = (ell - 2) / 6;
        return IntLattice(IntMatrix{{2 * k, 1, 0}, {1, -2, 1}, {0, 1, -2}});
    }
    Int k = ell / 6;
    return IntLattice(IntMatrix{{2 * k, 0, 0}, {0, -2, 1}, {0, 1, -2}});
}

FiniteQuadForm discriminant_form(const IntLattice& L) {
    if (!L.is_even()) throw DomainError("discriminant_form: lattice must be even");
    if (L.det() == 0) throw DomainError("discriminant_form: degenerate lattice");
    SmithForm s = smith_normal_form(L.gram);
    RatMatrix Ui = inverse(to_rational(s.U));
    RatMatrix Gi = inverse(to_rational(L.gram));
    std::vector<std::vector<Rational>> gens;
    FiniteQuadForm f;
    for (std::size_t i = 0; i < L.rank(); ++i) {
        if (s.D(i, i) == 1) continue;
        f.invariant_factors.push_back(s.D(i, i));
        gens.push_back(Ui.col(i));
    }
    std::size_t n = gens.size();
    f.gram_q = RatMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational v = 0;
            auto Gu = Gi * gens[j];
            for (std::size_t t = 0; t < gens[i].size(); ++t) v += gens[i][t] * Gu[t];
            f.gram_q(i, j) = (i == j) ? mod2(v) : mod1(v);
        }
    return f;
}

namespace {

void require_positive_ell(Int ell) {
    require_valid_ell(ell);
    if (ell <= 0) throw DomainError("ell must be positive here");
}

// Q(v)/2 = 1 mod 3 has a solution with the NS Gram
bool represents_one_mod3(Int ell) {
    IntMatrix g = ns_lattice(ell).gram;
    for (Int x = 0; x < 3; ++x)
        for (Int y = 0; y < 3; ++y)
            for (Int z = 0; z < 3; ++z) {
                Int v = dot(g, {x, y, z}, {x, y, z}) / 2;
                if (floor_mod(v, 3) == 1) return true;
            }
    return false;
}

} // namespace

bool has_principal_polarization(Int ell) {
    require_positive_ell(ell);
    return floor_mod(ell, 6) == 2 || (ell % 3 == 0 && ell % 9 != 0);
}

std::vector<LocalVerdict> pp_local_report(Int ell) {
    require_positive_ell(ell);
    std::vector<LocalVerdict> out;
    if (ell % 9 == 0) {
        out.push_back({3, represents_one_mod3(ell)});
        return out;
    }
    // completions of squares: w^2 + (z + y/2)^2 + 3/4 (y - 2x/3)^2 - (k + 1/3) x^2, resp. - k x^2
    std::vector<Rational> diag;
    if (floor_mod(ell, 6) == 2) {
        Int k = (ell - 2) / 6;
        diag = {1, 1, Rational(3, 4), -(Rational(k) + Rational(1, 3))};
    } else {
        Int k = ell / 6;
        diag = {1, 1, Rational(3, 4), Rational(-k)};
    }
    std::vector<Place> places{kRealPlace};
    for (Int p : prime_divisors(6 * ell)) places.push_back(p);
    for (Place p : places) out.push_back({p, rank4_represents_zero(diag, p)});
    return out;
}

bool pp_local_oracle(Int ell) {
    auto rep = pp_local_report(ell);
    return std::all_of(rep.begin(), rep.end(), [](const LocalVerdict& v) { return v.solvable; });
}

bool fm_partners_distinct(Int ell) {
    require_positive_ell(ell);
    return ell % 9 == 0;
}

const char* to_string(PolCase c) { return c == PolCase::i ? "i" : "ii"; }

const IntMatrix& gamma_gram() {
    static const IntMatrix g{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 2, 1}, {0, 0, 1, 2}};
    return g;
}

namespace {

Int gcd4(const std::array<Int, 4>& n) { return gcd(gcd(n[0], n[1]), gcd(n[2], n[3])); }

Int gamma_square(const std::array<Int, 4>& g) {
    std::vector<Int> v(g.begin(), g.end());
    return dot(gamma_gram(), v, v);
}

} // namespace

PolarizationClass polarization_class(PolCase c, const std::array<Int, 4>& n) {
    PolarizationClass pc;
    pc.case_tag = c;
    pc.n = n;
    auto [n1, n2, n3, n4] = n;
    if (gcd4(n) != 1) throw DomainError("polarization_class: gcd(n1..n4) must be 1");
    if (c == PolCase::i) {
        if (floor_mod(n4, 3) == 0) throw DomainError("polarization_class (case i): n4 must be nonzero mod 3");
        pc.gamma_coords = {3 * n1, 3 * n2, 3 * n3 + n4, n4};
        pc.lx_sq = 6 * (n1 * n2 + n3 * n3 + n3 * n4) + 2 * n4 * n4;
        pc.la_sq = 3 * pc.lx_sq;
    } else {
        if (gcd(gcd(gcd(n1, n2), n3), 3) != 1)
            throw DomainError("polarization_class (case ii): gcd(n1, n2, n3, 3) must be 1");
        pc.gamma_coords = {n1, n2, n3 + n4, n4};
        pc.lx_sq = 6 * (n1 * n2 + n3 * n3 + 3 * n3 * n4 + 3 * n4 * n4);
        if (pc.lx_sq % 3) throw VerificationError("case ii lx_sq not divisible by 3");
        pc.la_sq = pc.lx_sq / 3;
    }
    if (gamma_square(pc.gamma_coords) != pc.la_sq)
        throw VerificationError("polarization_class: Gram square disagrees with the closed formula");
    return pc;
}

PolarizationClass polarization_from_gamma(PolCase c, const std::array<Int, 4>& g) {
    if (c == PolCase::ii) return polarization_class(c, {g[0], g[1], g[2] - g[3], g[3]});
    if (g[0] % 3 || g[1] % 3 || (g[2] - g[3]) % 3)
        throw DomainError("polarization_from_gamma: not of the case i shape (3n1, 3n2, 3n3+n4, n4)");
    return polarization_class(c, {g[0] / 3, g[1] / 3, (g[2] - g[3]) / 3, g[3]});
}

namespace wedge {
const Wedge delta1{1, 0, 0, 0, 0, -1};
const Wedge delta2{0, 0, 1, -1, 0, 1};
const Wedge gamma1{0, -1, 0, 0, 0, 0};
const Wedge gamma2{0, 0, 0, 0, 1, 0};
const Wedge gamma3{0, 0, 1, 1, 0, 0};
const Wedge gamma4{1, 0, 1, 0, 0, 1};
} // namespace wedge

namespace {

// generators a1=0, b1=1, a2=2, b2=3 in matrix index order
constexpr int kA1 = 0, kB1 = 1, kA2 = 2, kB2 = 3;
constexpr std::array<std::pair<int, int>, 6> kWedgeBasis{
    {{kA1, kA2}, {kA1, kB1}, {kA1, kB2}, {kA2, kB1}, {kA2, kB2}, {kB1, kB2}}};

// position of a generator in the volume form a1^a2^b1^b2
int volume_pos(int g) {
    switch (g) {
    case kA1: return 0;
    case kA2: return 1;
    case kB1: return 2;
    default: return 3;
    }
}

int wedge4_sign(int a, int b, int c, int d) {
    int p[4] = {volume_pos(a), volume_pos(b), volume_pos(c), volume_pos(d)};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] == p[j]) return 0;
    int inv = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

} // namespace

IntMatrix wedge_to_alternating(const Wedge& w) {
    IntMatrix m(4, 4);
    for (int k = 0; k < 6; ++k) {
        auto [a, b] = kWedgeBasis[k];
        m(a, b) += w[k];
        m(b, a) -= w[k];
    }
    return m;
}

Int wedge_pairing(const Wedge& u, const Wedge& v) {
    Int s = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            if (!u[i] || !v[j]) continue;
            auto [a, b] = kWedgeBasis[i];
            auto [c, d] = kWedgeBasis[j];
            s += u[i] * v[j] * wedge4_sign(a, b, c, d);
        }
    return s;
}

Wedge gamma_to_wedge(const std::array<Int, 4>& g) {
    Wedge w{};
    const Wedge* basis[4] = {&wedge::gamma1, &wedge::gamma2, &wedge::gamma3, &wedge::gamma4};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 6; ++k) w[k] += g[i] * (*basis[i])[k];
    return w;
}

namespace {

RatMatrix closed_phi_i(const std::array<Int, 4>& n) {
    auto [n1, n2, n3, n4] = n;
    return to_rational(IntMatrix{{2 * n3 + n4, n3 + n4, 2 * n2, n2},
                                 {-n3, -2 * n3 - n4, -n2, -2 * n2},
                                 {2 * n1, n1, -2 * n3 - n4, -n3},
                                 {-n1, -2 * n1, n3 + n4, 2 * n3 + n4}});
}

RatMatrix closed_psi_i(const std::array<Int, 4>& n) {
    auto [n1, n2, n3, n4] = n;
    IntMatrix m{{n4 - 1, -3 * n3 - n4 - 2, 0, -3 * n2},
                {-3 * n3 - 2 * n4 + 2, -n4 + 1, -3 * n2, 0},
                {0, -3 * n1, n4 - 1, 3 * n3 + 2 * n4 - 2},
                {-3 * n1, 0, 3 * n3 + n4 + 2, -n4 + 1}};
    return to_rational(m) * Rational(1, 3);
}

RatMatrix closed_phi_ii(const std::array<Int, 4>& n) {
    auto [n1, n2, n3, n4] = n;
    return to_rational(IntMatrix{{n4, -n3 - n4, 0, -n2},
                                 {-n3 - 2 * n4, -n4, -n2, 0},
                                 {0, -n1, n4, n3 + 2 * n4},
                                 {-n1, 0, n3 + n4, -n4}});
}

bool is_integral(const RatMatrix& m) {
    for (auto& v : m.data())
        if (v.denominator() != 1) return false;
    return true;
}

} // namespace

EndoData endo_matrices(const PolarizationClass& pc) {
    EndoData e;
    const RatMatrix I = RatMatrix::identity(4);
    RatMatrix L = to_rational(wedge_to_alternating(gamma_to_wedge(pc.gamma_coords)));
    RatMatrix d1 = to_rational(wedge_to_alternating(wedge::delta1));
    RatMatrix d2 = to_rational(wedge_to_alternating(wedge::delta2));
    bool case_i = pc.case_tag == PolCase::i;
    if (case_i && floor_mod(pc.n[3], 3) == 2) {
        std::swap(d1, d2);
        e.deltas_swapped = true;
    }
    RatMatrix d1i = inverse(d1);
    e.J = d1i * d2;
    e.r = I + e.J * Rational(2);
    auto fail = [&](const std::string& what) { e.failures.push_back(what); };

    if (case_i) {
        RatMatrix phi_w = inverse(e.r) * d1i * L;
        RatMatrix psi_w = d1i * (L - d1 - d2 * Rational(2)) * Rational(1, 3);
        if (!e.deltas_swapped) {
            e.phi = closed_phi_i(pc.n);
            e.psi = closed_psi_i(pc.n);
            e.closed_formulas = true;
            if (e.phi != phi_w) fail("closed-form phi != r^-1 delta1^-1 L_A");
            if (*e.psi != psi_w) fail("closed-form psi != delta1^-1 (L_A - delta1 - 2 delta2) / 3");
        } else {
            e.phi = phi_w;
            e.psi = psi_w;
        }
    } else {
        e.phi = closed_phi_ii(pc.n);
        e.closed_formulas = true;
        if (e.phi != d1i * L) fail("closed-form phi != delta1^-1 L_A");
    }

    // relation suite
    if (e.J * e.J + e.J + I != RatMatrix(4, 4)) fail("J^2 + J + 1 = 0");
    if (e.J * e.J * e.J != I) fail("J^3 = 1");
    if (e.r * e.r != I * Rational(-3)) fail("r^2 = -3");
    if (e.r * e.phi != -(e.phi * e.r)) fail("r phi = -phi r");
    if (trace(e.phi) != Rational(0)) fail("trace phi = 0");
    if (!is_integral(e.J)) fail("J integral");
    if (case_i) {
        if (e.phi * e.phi != I * Rational(pc.lx_sq, 2)) fail("phi^2 = lx/2");
        const RatMatrix& psi = *e.psi;
        if (psi != e.r * (e.phi - I) * Rational(1, 3)) fail("psi = (r/3)(phi - 1)");
        if (psi * psi != I * Rational(pc.lx_sq - 2, 6)) fail("psi^2 = (lx-2)/6");
        if (trace(psi) != Rational(0)) fail("trace psi = 0");
        if (!is_integral(psi)) fail("psi integral");
    } else {
        if (e.phi * e.phi != I * Rational(pc.lx_sq, 6)) fail("phi^2 = lx/6");
        if (!is_integral(e.phi)) fail("phi integral");
    }
    e.relations_verified = e.failures.empty();
    return e;
}

IntMatrix endo_trace_gram(const EndoData& e) {
    const RatMatrix& g = e.psi ? *e.psi : e.phi;
    std::array<RatMatrix, 4> b{RatMatrix::identity(4), e.J, g, e.J * g};
    IntMatrix t(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            // reduced trace is half the trace of the 4x4 rational representation
            Rational v = trace(b[i] * b[j]) / 2;
            if (v.denominator() != 1) throw VerificationError("non-integral reduced trace");
            t(i, j) = v.numerator();
        }
    return t;
}

} // namespace km3
