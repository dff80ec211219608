#include <doctest.h>

#include <random>
#include <set>

#include "km3/eisenstein.hpp"

using namespace km3;

TEST_CASE("ring structure") {
    EisensteinInt j = EisensteinInt::j();
    CHECK(j * j + j + EisensteinInt(1) == EisensteinInt(0));
    CHECK(EisensteinInt::r() * EisensteinInt::r() == EisensteinInt(-3));
    CHECK((j * j * j) == EisensteinInt(1));
    EisensteinInt a{3, 1}, b{-2, 5};
    CHECK((a * b).norm() == a.norm() * b.norm());
    CHECK(a * a.conj() == EisensteinInt(a.norm()));
    CHECK(a.norm() == 7);
}

TEST_CASE("units and associates") {
    CHECK(eisenstein_units().size() == 6);
    for (auto u : eisenstein_units()) CHECK(u.is_unit());
    EisensteinInt a{5, 2};
    EisensteinInt c = canonical_associate(a);
    CHECK(c.x > 0);
    CHECK(c.y >= 0);
    CHECK(c.y < c.x);
    for (auto u : eisenstein_units()) CHECK(canonical_associate(u * a) == c);
    CHECK(associates(a, EisensteinInt::j() * a));
    CHECK_FALSE(associates(a, a.conj()));
}

TEST_CASE("division") {
    EisensteinInt a{3, 1}, b{2, -1};
    CHECK(divides(a, a * b));
    CHECK(exact_div(a * b, a) == b);
    CHECK_FALSE(divides(EisensteinInt(2), EisensteinInt(1, 1)));
    CHECK_THROWS(exact_div(EisensteinInt(1), EisensteinInt(2)));
}

TEST_CASE("splitting of rational primes") {
    CHECK(splitting_type(3) == Splitting::ramified);
    CHECK(splitting_type(7) == Splitting::split);
    CHECK(splitting_type(2) == Splitting::inert);
    CHECK(splitting_type(11) == Splitting::inert);
    CHECK(split_prime(7).norm() == 7);
    CHECK(split_prime(13).norm() == 13);
}

TEST_CASE("norm equation") {
    CHECK(solve_norm_equation(7).size() == 1);
    CHECK(solve_norm_equation(2).empty());
    CHECK(solve_norm_equation(4).size() == 1);
    CHECK(solve_norm_equation(49).size() == 2); // 7 and pi^2
    CHECK(solve_norm_equation(91).size() == 2);
    for (Int n = 1; n <= 200; ++n) {
        for (auto z : solve_norm_equation(n)) CHECK(z.norm() == n);
        // n is a norm iff primes = 2 mod 3 occur to even power
        bool norm = true;
        Int m = n;
        for (Int p = 2; p * p <= m || m > 1; ++p) {
            if (p * p > m) p = m;
            int e = 0;
            while (m % p == 0) m /= p, ++e;
            if (p % 3 == 2 && e % 2) norm = false;
        }
        CHECK_MESSAGE(solve_norm_equation(n).empty() == !norm, n);
    }
}

TEST_CASE("norm_solutions_up_to_units keeps conjugates apart") {
    auto v = norm_solutions_up_to_units(7);
    CHECK(v.size() == 2);
    CHECK_FALSE(associates(v[0], v[1]));
    CHECK(associates(v[0].conj(), v[1]));
}

TEST_CASE("factorization round trip") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Int> d(-40, 40);
    for (int t = 0; t < 200; ++t) {
        EisensteinInt mu{d(rng), d(rng)};
        if (mu.is_zero()) continue;
        EisensteinFactorization f = eisenstein_factorize(mu);
        CHECK(f.value() == mu);
        CHECK(f.unit.is_unit());
        NormalizedSplit ns = normalize_split(mu);
        CHECK(ns.mu2.norm() == mu.norm());
    }
}
