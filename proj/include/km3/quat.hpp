#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "km3/arith.hpp"
#include "km3/core.hpp"
#include "km3/eisenstein.hpp"
#include "km3/matrix.hpp"

namespace km3 {

// (a,b)/Q: alpha^2 = a, beta^2 = b, alpha beta = -beta alpha.
struct QuatAlgebra {
    Rational a, b;
    bool operator==(const QuatAlgebra&) const = default;
};

// x + y alpha + z beta + t alpha beta
struct QuatElement {
    QuatAlgebra alg;
    std::array<Rational, 4> c{};

    static QuatElement scalar(const QuatAlgebra& h, const Rational& s) { return {h, {s, 0, 0, 0}}; }

    QuatElement operator+(const QuatElement& o) const;
    QuatElement operator-(const QuatElement& o) const;
    QuatElement operator*(const QuatElement& o) const;
    QuatElement operator*(const Rational& s) const;
    QuatElement conj() const;
    Rational reduced_trace() const { return 2 * c[0]; }
    Rational reduced_norm() const;
    bool operator==(const QuatElement& o) const { return c == o.c; }
    std::string str() const;
};

struct QuatOrder {
    QuatAlgebra alg;
    std::array<QuatElement, 4> basis;
    IntMatrix trace_gram; // Trd(b_i b_j)
    Int reduced_disc = 0;

    // Coordinates of x in the basis (rational); x is in the order iff all are integers.
    std::array<Rational, 4> coordinates(const QuatElement& x) const;
    bool contains(const QuatElement& x) const;
};

// Validates ring axioms and fills the cached data; throws VerificationError.
QuatOrder make_order(const QuatAlgebra& h, const std::array<QuatElement, 4>& basis);

// Same lattice (each basis lies in the other).
bool same_lattice(const QuatOrder& o1, const QuatOrder& o2);

std::set<Place> ramified_places(const QuatAlgebra& h);
// Product of the finite ramified primes.
Int discriminant_from_places(const QuatAlgebra& h);

Int normalize_minus3(Int d);
bool is_admissible_dh(Int d_H);

struct AlgebraDiscriminant {
    Int finite = 1;
    bool ramified_at_infinity = false;
};
AlgebraDiscriminant algebra_discriminant(Int d_H);

QuatAlgebra minus3_algebra(Int d);
// Image of x + y j under j -> (-1 + alpha)/2.
QuatElement embed(const QuatAlgebra& h, EisensteinInt z);

// Basis 1, j, theta, j theta inside (-3, d) with theta = (r/3)(phi0 - 1); needs d = 1 mod 3.
QuatOrder formal_order(Int d);
QuatOrder maximal_order(Int d_H);
QuatOrder order_mu(Int d_H, EisensteinInt mu);

bool is_eichler_certified(const QuatOrder& o);

Int e3(Int D_H, Int N);

bool has_norm_minus_one_unit(Int ell);

struct KummerCount {
    Int ell = 0;
    Int d_H = 0;
    Int D_H = 0;
    Int mu_norm = 0;
    std::optional<EisensteinInt> mu;
    std::optional<Int> e3;
    std::optional<Int> n_ks;
    bool exact = false;
    std::string reason;      // set when not exact
    bool closed_form_applies = false;
    std::optional<Int> closed_form; // 2^{m+eps} when its hypotheses hold
};
KummerCount kummer_structure_count(Int ell);

// Conjugation x -> delta x delta^{-1} realizes O_mu ~ O_mu'' ~ O_mu'.
bool conjugation_iso_check(Int d_H, EisensteinInt mu, EisensteinInt mu_prime);

// Solutions of w^2 + w + 1 = 0 in a definite order, by bounded search.
std::vector<QuatElement> cube_roots_of_unity(const QuatOrder& o);

} // namespace km3
