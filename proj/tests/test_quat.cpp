#include <doctest.h>

#include <random>

#include "km3/quat.hpp"

using namespace km3;

TEST_CASE("element arithmetic") {
    QuatAlgebra h{-3, -2};
    QuatElement a{h, {1, 2, Rational(1, 2), -1}}, b{h, {0, 1, -1, 3}};
    CHECK((a * b).reduced_norm() == a.reduced_norm() * b.reduced_norm());
    CHECK((a * a.conj()) == QuatElement::scalar(h, a.reduced_norm()));
    CHECK((a + b).reduced_trace() == a.reduced_trace() + b.reduced_trace());
    QuatElement al{h, {0, 1, 0, 0}}, be{h, {0, 0, 1, 0}};
    CHECK(al * al == QuatElement::scalar(h, -3));
    CHECK(be * be == QuatElement::scalar(h, -2));
    CHECK(al * be == QuatElement::scalar(h, 0) - be * al);
}

TEST_CASE("ramification") {
    CHECK(ramified_places(QuatAlgebra{-1, -1}) == std::set<Place>{kRealPlace, 2});
    CHECK(ramified_places(QuatAlgebra{-3, 1}).empty());
    CHECK(discriminant_from_places(QuatAlgebra{-3, -2}) == 2);
    for (Int d : {2, -2, 5, -5, 10, -10, 11, -1}) {
        AlgebraDiscriminant ad = algebra_discriminant(d);
        CHECK(discriminant_from_places(minus3_algebra(d)) == ad.finite);
        CHECK(ramified_places(minus3_algebra(d)).count(kRealPlace) == (d < 0 ? 1u : 0u));
        // even number of ramified places
        CHECK(ramified_places(minus3_algebra(d)).size() % 2 == 0);
    }
}

TEST_CASE("admissibility and normalization") {
    CHECK(is_admissible_dh(10));
    CHECK(is_admissible_dh(-1));
    CHECK_FALSE(is_admissible_dh(7));
    CHECK_FALSE(is_admissible_dh(4));
    CHECK(normalize_minus3(12) == 1);
    CHECK(normalize_minus3(-20) == -5);
    CHECK_THROWS_AS(algebra_discriminant(7), DomainError);
}

TEST_CASE("maximal orders have discriminant D_H") {
    for (Int d = -50; d <= 50; ++d) {
        if (!is_admissible_dh(d)) continue;
        QuatOrder o = maximal_order(d);
        Int D = algebra_discriminant(d).finite;
        CHECK_MESSAGE(determinant(o.trace_gram) == -D * D, d);
        CHECK(o.reduced_disc == D);
    }
}

TEST_CASE("formal order for d = 7") {
    QuatOrder o = formal_order(7);
    CHECK(o.reduced_disc == 7);
    CHECK_THROWS_AS(formal_order(5), DomainError);
}

TEST_CASE("O_mu discriminants on random pairs") {
    std::mt19937_64 rng(5);
    std::vector<Int> dhs;
    for (Int d = -30; d <= 30; ++d)
        if (is_admissible_dh(d)) dhs.push_back(d);
    std::uniform_int_distribution<std::size_t> pd(0, dhs.size() - 1);
    std::uniform_int_distribution<Int> c(-6, 6);
    int done = 0;
    while (done < 30) {
        Int d = dhs[pd(rng)];
        EisensteinInt mu{c(rng), c(rng)};
        if (mu.is_zero()) continue;
        QuatOrder o = order_mu(d, mu);
        Int n = mu.norm() * algebra_discriminant(d).finite;
        CHECK_MESSAGE(determinant(o.trace_gram) == -n * n, d << " " << mu.str());
        ++done;
    }
}

TEST_CASE("Eichler certification") {
    CHECK(is_eichler_certified(order_mu(10, EisensteinInt{3, 1})));
    CHECK_FALSE(is_eichler_certified(order_mu(2, EisensteinInt{2, 0}))); // level 4
}

TEST_CASE("e3") {
    CHECK(e3(10, 1) == 4);
    CHECK(e3(2, 7) == 4);
    CHECK(e3(6, 1) == 2); // 3 ramifies in Z[j]
    CHECK(e3(5, 1) == 2);
    CHECK(e3(14, 1) == 0); // 7 splits
    CHECK(e3(2, 9) == 0);
    CHECK_THROWS_AS(e3(2, 2), Unsupported);
    CHECK_THROWS_AS(e3(5, 49), Unsupported);
}

TEST_CASE("Kummer structure counts") {
    CHECK(kummer_structure_count(20).n_ks == std::optional<Int>(2));
    CHECK(kummer_structure_count(12).n_ks == std::optional<Int>(1));
    for (Int ell : {2, 14, 18, 42}) {
        KummerCount k = kummer_structure_count(ell);
        CHECK_FALSE(k.exact);
        CHECK_FALSE(k.reason.empty());
    }
    // ell <= 200 satisfying the closed-form hypotheses
    int applied = 0;
    for (Int ell = 2; ell <= 200; ++ell) {
        if (ell % 6 != 0 && ell % 6 != 2) continue;
        KummerCount k = kummer_structure_count(ell);
        if (!k.closed_form_applies) continue;
        ++applied;
        REQUIRE(k.e3);
        CHECK(*k.e3 / 2 == *k.closed_form);
    }
    CHECK(applied > 5);
    CHECK_THROWS_AS(kummer_structure_count(15), DomainError);
    CHECK_THROWS_AS(kummer_structure_count(-6), DomainError);
}

TEST_CASE("conjugation isomorphism") {
    CHECK(conjugation_iso_check(10, EisensteinInt{3, 1}, EisensteinInt{3, 1}.conj()));
}

TEST_CASE("cube roots of unity") {
    CHECK(cube_roots_of_unity(maximal_order(-1)).size() == 2);
    CHECK(cube_roots_of_unity(maximal_order(-2)).size() == 8);
    for (auto& w : cube_roots_of_unity(maximal_order(-2))) {
        QuatElement one = QuatElement::scalar(w.alg, 1);
        CHECK(w * w + w + one == QuatElement::scalar(w.alg, 0));
    }
}

TEST_CASE("the maximal order of discriminant 2 has 24 units") {
    QuatOrder o = maximal_order(-2);
    int units = 0;
    for (Int a = -3; a <= 3; ++a)
        for (Int b = -3; b <= 3; ++b)
            for (Int c = -3; c <= 3; ++c)
                for (Int d = -3; d <= 3; ++d) {
                    QuatElement x = o.basis[0] * Rational(a) + o.basis[1] * Rational(b) + o.basis[2] * Rational(c) +
                                    o.basis[3] * Rational(d);
                    if (x.reduced_norm() == Rational(1)) ++units;
                }
    CHECK(units == 24);
}
