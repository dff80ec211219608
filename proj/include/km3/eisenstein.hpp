#pragma once

#include <compare>
#include <string>
#include <vector>

#include "km3/core.hpp"

namespace km3 {

// x + y*j in Z[j], j^2 + j + 1 = 0.
struct EisensteinInt {
    Int x = 0, y = 0;

    EisensteinInt() = default;
    EisensteinInt(Int x_, Int y_ = 0) : x(x_), y(y_) {}

    static EisensteinInt j() { return {0, 1}; }
    static EisensteinInt r() { return {1, 2}; } // r^2 = -3

    EisensteinInt conj() const { return {x - y, -y}; }
    Int norm() const { return x * x - x * y + y * y; }
    bool is_zero() const { return x == 0 && y == 0; }
    bool is_unit() const { return norm() == 1; }

    friend EisensteinInt operator+(EisensteinInt a, EisensteinInt b) { return {a.x + b.x, a.y + b.y}; }
    friend EisensteinInt operator-(EisensteinInt a, EisensteinInt b) { return {a.x - b.x, a.y - b.y}; }
    friend EisensteinInt operator-(EisensteinInt a) { return {-a.x, -a.y}; }
    friend EisensteinInt operator*(EisensteinInt a, EisensteinInt b) {
        return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x - a.y * b.y};
    }
    friend auto operator<=>(const EisensteinInt&, const EisensteinInt&) = default;
    friend bool operator==(const EisensteinInt&, const EisensteinInt&) = default;

    std::string str() const;
};

EisensteinInt pow(EisensteinInt a, int e);

// a / b when b divides a in Z[j]
bool divides(EisensteinInt b, EisensteinInt a);
EisensteinInt exact_div(EisensteinInt a, EisensteinInt b);

const std::vector<EisensteinInt>& eisenstein_units();

// Unit multiple in the sector x > 0, 0 <= y < x.
EisensteinInt canonical_associate(EisensteinInt a);
bool associates(EisensteinInt a, EisensteinInt b);

enum class Splitting { split, inert, ramified };
Splitting splitting_type(Int p);
const char* to_string(Splitting s);

// One solution per class modulo units and conjugation, sorted.
std::vector<EisensteinInt> solve_norm_equation(Int n);
// All canonical associates of norm n (conjugate pairs kept apart).
std::vector<EisensteinInt> norm_solutions_up_to_units(Int n);

// Chosen prime above a split p (canonical, the lexicographically smaller of the pair).
EisensteinInt split_prime(Int p);

struct SplitPart {
    Int p;
    EisensteinInt prime; // split_prime(p); its conjugate is the other prime
    int a = 0;           // exponent of prime
    int b = 0;           // exponent of conj(prime)
};

// mu = unit * r^ramified * prod prime^a conj(prime)^b * prod q^e
struct EisensteinFactorization {
    EisensteinInt unit{1, 0};
    int ramified = 0;
    std::vector<SplitPart> split;
    std::vector<std::pair<Int, int>> inert; // rational primes = 2 mod 3

    EisensteinInt value() const;
};
EisensteinFactorization eisenstein_factorize(EisensteinInt mu);

struct NormalizedSplit {
    EisensteinInt mu2;   // mu''
    EisensteinInt delta; // prod prime^b
};
NormalizedSplit normalize_split(EisensteinInt mu);

} // namespace km3
