#include <doctest.h>

#include <random>

#include "km3/nslat.hpp"
#include "oracles.hpp"

using namespace km3;

TEST_CASE("ns lattice shapes") {
    IntLattice a = ns_lattice(14);
    CHECK(a.gram == IntMatrix{{4, 1, 0}, {1, -2, 1}, {0, 1, -2}});
    CHECK(ns_lattice(18).gram == IntMatrix{{6, 0, 0}, {0, -2, 1}, {0, 1, -2}});
    for (Int ell = -120; ell <= 120; ++ell) {
        if (ell == 0 || !valid_ell(ell)) continue;
        IntLattice L = ns_lattice(ell);
        CHECK(L.is_even());
        CHECK(iabs(L.det()) == iabs(ell));
        Signature s = L.signature();
        CHECK(s.neg == (ell > 0 ? 2 : 3));
    }
    CHECK_THROWS_AS(ns_lattice(15), DomainError);
}

TEST_CASE("discriminant groups") {
    for (Int ell = -120; ell <= 120; ++ell) {
        if (ell == 0 || !valid_ell(ell)) continue;
        FiniteQuadForm q = discriminant_form(ns_lattice(ell));
        CHECK(q.order() == iabs(ell));
        if (floor_mod(ell, 6) == 2) CHECK(q.is_cyclic());
        if (ell > 0 && ell % 9 == 0) CHECK(q.invariant_factors == std::vector<Int>{3, ell / 3});
    }
    FiniteQuadForm q = discriminant_form(ns_lattice(18));
    CHECK(q.invariant_factors == std::vector<Int>{3, 6});
}

TEST_CASE("discriminant form values are well defined") {
    FiniteQuadForm q = discriminant_form(ns_lattice(-84));
    std::vector<Int> x(q.invariant_factors.size(), 0);
    x.back() = q.invariant_factors.back();
    CHECK(q.q(x) == Rational(0));
    CHECK(mod2(Rational(7, 3)) == Rational(1, 3));
    CHECK(mod1(Rational(-1, 4)) == Rational(3, 4));
}

TEST_CASE("principal polarization: closed form, local oracle and vector search") {
    for (Int ell = 1; ell <= 120; ++ell) {
        if (!valid_ell(ell)) continue;
        CHECK_MESSAGE(has_principal_polarization(ell) == pp_local_oracle(ell), ell);
        if (ell <= 60) CHECK_MESSAGE(has_principal_polarization(ell) == oracle::represents_two(ns_lattice(ell).gram, 30), ell);
    }
    CHECK_FALSE(has_principal_polarization(18));
    CHECK(has_principal_polarization(14));
    CHECK(fm_partners_distinct(18));
    CHECK_FALSE(fm_partners_distinct(12));
    CHECK_THROWS_AS(has_principal_polarization(-6), DomainError);
}

TEST_CASE("polarization classes") {
    PolarizationClass a = polarization_class(PolCase::i, {3, 1, 0, 1});
    CHECK(a.lx_sq == 20);
    CHECK(a.la_sq == 60);
    PolarizationClass b = polarization_class(PolCase::ii, {2, 1, 0, 0});
    CHECK(b.lx_sq == 12);
    CHECK(b.la_sq == 4);
    CHECK(polarization_from_gamma(PolCase::i, a.gamma_coords).n == a.n);
    CHECK(polarization_from_gamma(PolCase::ii, b.gamma_coords).n == b.n);
    CHECK_THROWS_AS(polarization_class(PolCase::i, {1, 1, 0, 3}), DomainError);
    CHECK_THROWS_AS(polarization_class(PolCase::ii, {3, 3, 3, 1}), DomainError);
}

TEST_CASE("wedge model") {
    using namespace wedge;
    CHECK(wedge_pairing(delta1, delta1) == -2);
    CHECK(wedge_pairing(delta2, delta2) == -2);
    CHECK(wedge_pairing(delta1, delta2) == 1);
    const Wedge* g[] = {&gamma1, &gamma2, &gamma3, &gamma4};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(wedge_pairing(*g[i], *g[j]) == gamma_gram()(i, j));
            CHECK(wedge_pairing(*g[i], delta1) == 0);
            CHECK(wedge_pairing(*g[i], delta2) == 0);
        }
    IntMatrix m = wedge_to_alternating(gamma1);
    CHECK(m.transpose() == m * Int(-1));
}

TEST_CASE("endomorphism relations on random classes") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<Int> c(-4, 4);
    int done = 0;
    while (done < 50) {
        PolCase cs = rng() % 2 ? PolCase::i : PolCase::ii;
        std::array<Int, 4> n{c(rng), c(rng), c(rng), c(rng)};
        PolarizationClass pc;
        try {
            pc = polarization_class(cs, n);
        } catch (const DomainError&) {
            continue;
        }
        if (pc.lx_sq <= 0) continue;
        ++done;
        EndoData e = endo_matrices(pc);
        CAPTURE(to_string(cs));
        CAPTURE(pc.lx_sq);
        CHECK(e.relations_verified);
        RatMatrix I = RatMatrix::identity(4);
        CHECK(e.r * e.r == I * Rational(-3));
        CHECK(e.r * e.phi == (e.phi * e.r) * Rational(-1));
        Rational ell(pc.lx_sq);
        if (cs == PolCase::i) {
            CHECK(e.phi * e.phi == I * (ell / 2));
            REQUIRE(e.psi);
            CHECK(*e.psi * *e.psi == I * ((ell - 2) / 6));
        } else {
            CHECK(e.phi * e.phi == I * (ell / 6));
        }
        CHECK(e.J * e.J + e.J + I == RatMatrix(4, 4));
    }
}

TEST_CASE("endomorphism trace Gram") {
    PolarizationClass pc = polarization_class(PolCase::i, {2, 1, 0, 1});
    IntMatrix g = endo_trace_gram(endo_matrices(pc));
    CHECK(determinant(g) == -(pc.lx_sq / 2) * (pc.lx_sq / 2));
}
