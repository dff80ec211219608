#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "km3/core.hpp"
#include "km3/matrix.hpp"
#include "km3/nslat.hpp"

namespace km3 {

// Coordinates in the gamma basis of U + A2.
using ConeVector = std::array<Int, 4>;

Int cone_dot(const ConeVector& x, const ConeVector& y);
inline Int cone_square(const ConeVector& x) { return cone_dot(x, x); }
ConeVector apply(const IntMatrix& g, const ConeVector& x);
Int content(const ConeVector& x); // gcd of the coordinates

struct IsometryWord {
    IntMatrix matrix;
    std::vector<std::string> word; // letters "r1".."r5", "t1".."t4"
};

const std::array<ConeVector, 5>& vinberg_roots();  // c1..c5
const ConeVector& orientation_vector();            // P
const std::array<ConeVector, 5>& hilbert_basis();  // w1..w5

IsometryWord reflection(const ConeVector& c);
const std::array<IsometryWord, 5>& simple_reflections();
const std::array<IsometryWord, 4>& tau_generators();

bool preserves_gram(const IntMatrix& g);

struct GeneratorSet {
    std::array<IntMatrix, 5> r;
    std::array<IntMatrix, 4> t;
};
GeneratorSet default_generators();

// Product of the named letters, left to right as matrices.
IntMatrix evaluate_word(const std::vector<std::string>& word);
IntMatrix evaluate_word(const std::vector<std::string>& word, const GeneratorSet& gens);

struct WordIdentity {
    std::string name;
    std::vector<std::string> lhs, rhs;
};
const std::vector<WordIdentity>& word_identities(); // 4 tau-in-r, 10 rr-in-tau
bool identity_holds(const WordIdentity& w);
bool identity_holds(const WordIdentity& w, const GeneratorSet& gens);

bool in_negative_cone(const ConeVector& x);   // x^2 <= 0, P.x <= 0
bool in_fundamental_cone(const ConeVector& x); // Pi: walls c1..c4
bool in_reflection_chamber(const ConeVector& x); // Pi': walls c1..c5

struct Reduction {
    IsometryWord g;   // over r1..r5; x0 = g (sign * x)
    ConeVector x0;
    bool negated = false;
};
Reduction reduce_to_domain(const ConeVector& x, int max_steps = 100000);

// Squares of L_A for the two congruence classes of ell.
Int la_square_for(Int ell);

// Primitive lattice points of Pi of the given square, with the case filter, before the facet rule.
std::vector<ConeVector> cone_points(Int ell);
std::vector<ConeVector> enumerate_components(Int ell);

// Equivalence under Gamma = <t1..t4> (even words in r1..r5), decided in the reflection chamber.
bool gamma_equivalent(const ConeVector& x, const ConeVector& y);
Int gamma_orbit_count(Int ell);

IntLattice orthogonal_complement(const ConeVector& L);

} // namespace km3
