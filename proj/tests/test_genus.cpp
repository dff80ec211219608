#include <doctest.h>

#include <random>

#include "km3/genus.hpp"
#include "km3/vinberg.hpp"

using namespace km3;

namespace {

const IntMatrix kT1{{4, 2, -2}, {2, 6, -3}, {-2, -3, 6}};

}

TEST_CASE("short vectors and minimum") {
    IntMatrix a2{{2, 1, 0}, {1, 2, 0}, {0, 0, 4}};
    CHECK(short_vectors(a2, 2).size() == 6);
    CHECK(lattice_minimum(a2) == 2);
    CHECK(lattice_minimum(kT1) == 4);
    CHECK(lattice_minimum(IntMatrix{{28, 0, 0}, {0, 2, -1}, {0, -1, 2}}) == 2);
    CHECK_THROWS_AS(short_vectors(IntMatrix{{0, 1}, {1, 0}}, 2), DomainError);
}

TEST_CASE("canonical form is a class invariant") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<Int> c(-2, 2);
    for (auto& cls : enumerate_classes(84)) {
        for (int t = 0; t < 10; ++t) {
            IntMatrix U{{c(rng), c(rng), c(rng)}, {c(rng), c(rng), c(rng)}, {c(rng), c(rng), c(rng)}};
            if (iabs(determinant(U)) != 1) continue;
            IntMatrix g = U.transpose() * cls.gram * U;
            CHECK(canonical_form(g) == cls.gram);
        }
    }
}

TEST_CASE("class enumeration") {
    CHECK(enumerate_classes(6).size() == 1);
    CHECK(enumerate_classes(4).size() == 1); // A3
    // all classes at det 66 and 102; the genus of NS holds 3 and 4 of them
    CHECK(enumerate_classes(66).size() == 4);
    CHECK(enumerate_classes(102).size() == 6);
    CHECK_THROWS_AS(enumerate_classes(501), DomainError);
    CHECK_THROWS_AS(enumerate_classes(0), DomainError);
    for (Int d : {30, 66, 84}) {
        auto cls = enumerate_classes(d);
        for (std::size_t i = 0; i < cls.size(); ++i) {
            CHECK(determinant(cls[i].gram) == d);
            CHECK(IntLattice(cls[i].gram).is_even());
            for (std::size_t j = 0; j < cls.size(); ++j)
                CHECK(is_isometric(IntLattice(cls[i].gram), IntLattice(cls[j].gram)) == (i == j));
        }
    }
}

TEST_CASE("enumeration is complete against an unreduced search") {
    for (Int d : {12, 30, 48}) {
        auto cls = enumerate_classes(d);
        for (Int a = 2; a <= 12; a += 2)
            for (Int b = 2; b <= 12; b += 2)
                for (Int c = 2; c <= 12; c += 2)
                    for (Int x = -3; x <= 3; ++x)
                        for (Int y = -3; y <= 3; ++y)
                            for (Int z = -3; z <= 3; ++z) {
                                IntMatrix g{{a, x, y}, {x, b, z}, {y, z, c}};
                                if (determinant(g) != d || !is_positive_definite(g)) continue;
                                bool hit = false;
                                for (auto& k : cls) hit = hit || is_isometric(IntLattice(g), IntLattice(k.gram));
                                CHECK(hit);
                            }
    }
}

TEST_CASE("isometry") {
    IntLattice ns = ns_lattice(-84).scaled(-1);
    CHECK(is_isometric(ns, ns));
    CHECK_FALSE(is_isometric(IntLattice(kT1), ns));
    CHECK(is_isometric(orthogonal_complement({15, -14, 14, -14}), ns));
    CHECK_THROWS_AS(is_isometric(ns, IntLattice(IntMatrix{{2}})), DomainError);
}

TEST_CASE("discriminant form isomorphism") {
    FiniteQuadForm a = discriminant_form(ns_lattice(-84));
    CHECK(fqf_isomorphic(a, a));
    CHECK_FALSE(fqf_isomorphic(a, discriminant_form(ns_lattice(-90))));
    // Z/14 with q(1) = u/14 against a nonsquare multiple
    FiniteQuadForm q1{{14}, RatMatrix{{Rational(1, 14)}}};
    FiniteQuadForm q3{{14}, RatMatrix{{Rational(3, 14)}}};
    FiniteQuadForm q9{{14}, RatMatrix{{Rational(9, 14)}}};
    CHECK(fqf_isomorphic(q1, q9));
    CHECK_FALSE(fqf_isomorphic(q1, q3));
    FiniteQuadForm big{{20000}, RatMatrix{{Rational(1, 20000)}}};
    CHECK_THROWS_AS(fqf_isomorphic(big, big), DomainError);
}

TEST_CASE("genus") {
    IntLattice ns = ns_lattice(-84).scaled(-1);
    CHECK(same_genus(IntLattice(kT1), ns));
    CHECK_FALSE(same_genus(ns_lattice(6), ns_lattice(12)));
    CHECK_THROWS_AS(same_genus(IntLattice(IntMatrix{{1}}), IntLattice(IntMatrix{{1}})), DomainError);
    for (auto& x : enumerate_components(-84)) CHECK(same_genus(orthogonal_complement(x), ns));
    CHECK(genus_count(-30) == 2);
    CHECK(genus_count(-84) == 2);
    CHECK(genus_count(-94) == 5);
    CHECK_THROWS_AS(genus_count(12), DomainError);
}

TEST_CASE("isometry refines genus") {
    for (Int d : {66, 84, 102}) {
        auto cls = enumerate_classes(d);
        for (auto& a : cls)
            for (auto& b : cls)
                if (is_isometric(IntLattice(a.gram), IntLattice(b.gram))) CHECK(same_genus(IntLattice(a.gram), IntLattice(b.gram)));
    }
}

TEST_CASE("genus counts") {
    const std::vector<Int> g1{1, 1, 1, 1, 2, 1, 2, 2, 2, 1, 3, 1, 3, 2, 2, 2, 4, 1};
    const std::vector<Int> g2{1, 1, 1, 2, 1, 2, 1, 3, 2, 3, 2, 3, 2, 4, 2, 5, 2, 4};
    for (int k = 1; k <= 18; ++k) {
        CHECK_MESSAGE(genus_count(-6 * k) == g1[k - 1], k);
        CHECK_MESSAGE(genus_count(2 - 6 * k) == g2[k - 1], k);
        CHECK(genus_count(-6 * k) <= static_cast<Int>(enumerate_classes(6 * k).size()));
    }
}
