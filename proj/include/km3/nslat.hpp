#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "km3/arith.hpp"
#include "km3/core.hpp"
#include "km3/matrix.hpp"

namespace km3 {

struct IntLattice {
    IntMatrix gram;

    IntLattice() = default;
    explicit IntLattice(IntMatrix g);

    std::size_t rank() const { return gram.rows(); }
    Int det() const { return determinant(gram); }
    Signature signature() const { return km3::signature(gram); }
    bool is_even() const;
    IntLattice scaled(Int s) const { return IntLattice(gram * s); }
};

// Values stored normalized: diagonal in [0,2), off-diagonal in [0,1).
struct FiniteQuadForm {
    std::vector<Int> invariant_factors; // d1 | d2 | ..., all > 1
    RatMatrix gram_q;

    Int order() const;
    // q(sum x_i g_i) mod 2
    Rational q(const std::vector<Int>& x) const;
    // b(x, y) mod 1
    Rational b(const std::vector<Int>& x, const std::vector<Int>& y) const;
    bool is_cyclic() const { return invariant_factors.size() <= 1; }
};

Rational mod2(const Rational& v);
Rational mod1(const Rational& v);

bool valid_ell(Int ell); // ell = 0 or 2 mod 6
void require_valid_ell(Int ell);

IntLattice ns_lattice(Int ell);
FiniteQuadForm discriminant_form(const IntLattice& L);

bool has_principal_polarization(Int ell);
bool pp_local_oracle(Int ell);
// Places checked by the oracle and the per-place verdict.
struct LocalVerdict {
    Place p;
    bool solvable;
};
std::vector<LocalVerdict> pp_local_report(Int ell);

// Dual torus distinct as a Kummer structure iff 9 | ell.
bool fm_partners_distinct(Int ell);

enum class PolCase { i, ii };
const char* to_string(PolCase c);

struct PolarizationClass {
    PolCase case_tag = PolCase::i;
    std::array<Int, 4> n{};
    std::array<Int, 4> gamma_coords{};
    Int lx_sq = 0;
    Int la_sq = 0;
};

PolarizationClass polarization_class(PolCase c, const std::array<Int, 4>& n);
// Recover n from gamma coordinates.
PolarizationClass polarization_from_gamma(PolCase c, const std::array<Int, 4>& gamma);

// Gram of U + A2 in the gamma basis.
const IntMatrix& gamma_gram();

// Basis order alpha1^alpha2, alpha1^beta1, alpha1^beta2, alpha2^beta1, alpha2^beta2, beta1^beta2;
// matrix in the dual basis of (alpha1, beta1, alpha2, beta2).
using Wedge = std::array<Int, 6>;
IntMatrix wedge_to_alternating(const Wedge& w);
// Intersection number against alpha1^alpha2^beta1^beta2.
Int wedge_pairing(const Wedge& u, const Wedge& v);

namespace wedge {
extern const Wedge delta1, delta2, gamma1, gamma2, gamma3, gamma4;
}
Wedge gamma_to_wedge(const std::array<Int, 4>& g);

struct EndoData {
    RatMatrix J, r, phi;
    std::optional<RatMatrix> psi;
    bool deltas_swapped = false;
    bool closed_formulas = false; // phi/psi taken from the closed-form matrices
    bool relations_verified = false;
    std::vector<std::string> failures;
};

EndoData endo_matrices(const PolarizationClass& pc);

// Reduced-trace Gram on (I, J, g, Jg), g = psi (case i) or phi (case ii).
IntMatrix endo_trace_gram(const EndoData& e);

} // namespace km3
