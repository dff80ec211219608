#pragma once

#include <utility>
#include <vector>

#include "km3/core.hpp"
#include "km3/matrix.hpp"

namespace km3 {

// A place of Q: -1 is the real place, otherwise a positive prime.
using Place = Int;
inline constexpr Place kRealPlace = -1;

inline constexpr Int kDefaultFactorBound = Int(1) << 48;

struct Factorization {
    int sign = 1;
    std::vector<std::pair<Int, int>> factors; // primes increasing

    Int value() const;
    bool operator==(const Factorization&) const = default;
};

Factorization factorize(Int n, Int bound = kDefaultFactorBound);
bool is_prime(Int n);
std::vector<Int> prime_divisors(Int n);

Int valuation(Int n, Int p);
Int powmod(Int b, Int e, Int m);

// Signed square-free kernel: n = squarefree_part(n) * m^2.
Int squarefree_part(Int n);
// Square class of a nonzero rational as a square-free integer.
Int square_class(const Rational& q);

// Legendre symbol for odd p, the Kronecker rule at 2.
int kronecker_symbol(Int d, Int p);

int hilbert_symbol(const Rational& a, const Rational& b, Place p);

// True iff the square-free integer d is a square in Q_p (R for p = -1).
bool is_local_square(Int d, Place p);

Int rad2(Int c);

struct SmithForm {
    IntMatrix U, D, V;
};
SmithForm smith_normal_form(const IntMatrix& m);

struct LocalInvariants {
    Int d = 1;   // square-free representative of the determinant class
    int eps = 1; // Hasse invariant prod_{i<j} (a_i, a_j)_p
};
LocalInvariants local_invariants(const std::vector<Rational>& diag, Place p);

// Quaternary form <a1..a4> has a nontrivial zero over Q_p.
bool rank4_represents_zero(const std::vector<Rational>& diag, Place p);

} // namespace km3
