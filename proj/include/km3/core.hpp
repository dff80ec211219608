#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

namespace km3 {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

// Bad input: wrong congruence class, zero where nonzero is required, etc.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The computation is outside what can be certified; carries a reason.
class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed.
class VerificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline Int floor_mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + (m < 0 ? -m : m) : r;
}

inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int iabs(Int a) { return a < 0 ? -a : a; }

Int gcd(Int a, Int b);

// Returns g = gcd(a,b) >= 0 and sets x, y with a*x + b*y = g.
Int ext_gcd(Int a, Int b, Int& x, Int& y);

Int isqrt(Int n);

std::string to_string(const Rational& q);

} // namespace km3
