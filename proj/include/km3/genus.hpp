#pragma once

#include <vector>

#include "km3/core.hpp"
#include "km3/matrix.hpp"
#include "km3/nslat.hpp"

namespace km3 {

inline constexpr Int kDefaultGenusDetBound = 500;
inline constexpr Int kDefaultFqfOrderBound = 10000;

struct TernaryClass {
    IntMatrix gram; // canonical form
    Int minimum = 0;
};

// All nonzero v with v^T G v <= bound (G positive definite).
std::vector<std::vector<Int>> short_vectors(const IntMatrix& gram, Int bound);

Int lattice_minimum(const IntMatrix& gram);

// Greedy pairwise reduction; returns a Gram of the same lattice with small diagonal.
IntMatrix reduce_gram(const IntMatrix& gram);

// Lexicographically least Gram over bases realizing the successive minima.
IntMatrix canonical_form(const IntMatrix& gram);

std::vector<TernaryClass> enumerate_classes(Int det, Int bound = kDefaultGenusDetBound);

bool is_isometric(const IntLattice& a, const IntLattice& b);
bool fqf_isomorphic(const FiniteQuadForm& a, const FiniteQuadForm& b, Int bound = kDefaultFqfOrderBound);
bool same_genus(const IntLattice& a, const IntLattice& b);

Int genus_count(Int ell);

} // namespace km3
