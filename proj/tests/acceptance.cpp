// One line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "km3/genus.hpp"
#include "km3/quat.hpp"
#include "km3/report.hpp"
#include "km3/vinberg.hpp"
#include "oracles.hpp"

using namespace km3;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;
    void fail(const std::string& what) {
        if (ok) note << what;
        ok = false;
    }
};

bool table_matches(int parity, Outcome& out) {
    Report r = cmd_tables(parity, 18);
    const TableReference& ref = table_reference(parity);
    for (int k = 1; k <= 18; ++k) {
        auto& row = r.results["rows"][k - 1];
        if (row["num_components"] != ref.components[k - 1])
            out.fail("k=" + std::to_string(k) + " #L_A=" + row["num_components"].dump());
        if (row["genus_size"] != ref.genus[k - 1]) out.fail("k=" + std::to_string(k) + " #G=" + row["genus_size"].dump());
    }
    return out.ok;
}

void c1(Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    table_matches(0, o);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s >= 120) o.fail("runtime " + std::to_string(s) + " s");
    if (o.ok) o.note << "18 rows, " << s << " s";
}

void c2(Outcome& o) {
    table_matches(2, o);
    if (o.ok) o.note << "18 rows";
}

void c3(Outcome& o) {
    IntLattice t1(IntMatrix{{4, 2, -2}, {2, 6, -3}, {-2, -3, 6}});
    IntLattice t2(IntMatrix{{28, 0, 0}, {0, 2, -1}, {0, -1, 2}});
    auto comps = enumerate_components(-84);
    if (comps.size() != 3) return o.fail(std::to_string(comps.size()) + " components");
    std::vector<IntLattice> ts;
    int n1 = 0, n2 = 0;
    for (auto& x : comps) {
        IntLattice t = orthogonal_complement(x);
        Int m = lattice_minimum(t.gram);
        if (is_isometric(t, t1) && m == 4) ++n1;
        if (is_isometric(t, t2) && m == 2) ++n2;
        ts.push_back(t);
    }
    if (n1 != 1 || n2 != 2) o.fail("T1-type " + std::to_string(n1) + ", T2-type " + std::to_string(n2));
    for (auto& a : ts)
        for (auto& b : ts)
            if (!same_genus(a, b)) o.fail("complements in different genera");
    if (o.ok) o.note << "minima {4,2,2}, one genus";
}

void c4(Outcome& o) {
    int n = 0;
    for (auto& w : word_identities()) {
        if (!identity_holds(w)) o.fail(w.name);
        ++n;
    }
    if (n != 14) o.fail(std::to_string(n) + " identities");
    GeneratorSet g = default_generators();
    for (auto& m : g.r)
        if (!preserves_gram(m)) o.fail("reflection moves the Gram");
    for (auto& m : g.t)
        if (!preserves_gram(m)) o.fail("tau moves the Gram");
    if (o.ok) o.note << "14 identities, 9 generators";
}

void c5(Outcome& o) {
    int maxi = 0;
    std::vector<Int> dhs;
    for (Int d = -50; d <= 50; ++d) {
        if (!is_admissible_dh(d)) continue;
        dhs.push_back(d);
        Int D = algebra_discriminant(d).finite;
        if (determinant(maximal_order(d).trace_gram) != -D * D) o.fail("O_m d_H=" + std::to_string(d));
        ++maxi;
    }
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> pd(0, dhs.size() - 1);
    std::uniform_int_distribution<Int> c(-8, 8);
    int done = 0;
    while (done < 30) {
        Int d = dhs[pd(rng)];
        EisensteinInt mu{c(rng), c(rng)};
        if (mu.is_zero()) continue;
        Int n = mu.norm() * algebra_discriminant(d).finite;
        if (determinant(order_mu(d, mu).trace_gram) != -n * n) o.fail("O_mu d_H=" + std::to_string(d) + " mu=" + mu.str());
        ++done;
    }
    if (o.ok) o.note << maxi << " maximal orders, 30 random O_mu";
}

void c6(Outcome& o) {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<Int> c(-5, 5);
    int done = 0;
    RatMatrix I = RatMatrix::identity(4);
    while (done < 50) {
        PolCase cs = rng() % 2 ? PolCase::i : PolCase::ii;
        PolarizationClass pc;
        try {
            pc = polarization_class(cs, {c(rng), c(rng), c(rng), c(rng)});
        } catch (const DomainError&) {
            continue;
        }
        if (pc.lx_sq <= 0) continue;
        ++done;
        EndoData e = endo_matrices(pc);
        Rational ell(pc.lx_sq);
        bool ok = e.r * e.r == I * Rational(-3) && e.r * e.phi == e.phi * e.r * Rational(-1);
        if (cs == PolCase::i)
            ok = ok && e.phi * e.phi == I * (ell / 2) && e.psi && *e.psi * *e.psi == I * ((ell - 2) / 6);
        else
            ok = ok && e.phi * e.phi == I * (ell / 6);
        if (!ok) o.fail(std::string("case ") + to_string(cs) + " ell=" + std::to_string(pc.lx_sq));
    }
    if (o.ok) o.note << "50 random classes";
}

void c7(Outcome& o) {
    for (Int ell = 1; ell <= 120; ++ell) {
        if (!valid_ell(ell)) continue;
        bool cf = has_principal_polarization(ell);
        if (cf != pp_local_oracle(ell)) o.fail("oracle ell=" + std::to_string(ell));
        if (ell <= 60 && cf != oracle::represents_two(ns_lattice(ell).gram, 30)) o.fail("search ell=" + std::to_string(ell));
    }
    if (o.ok) o.note << "ell in (0,120] and search to 60";
}

void c8(Outcome& o) {
    int applied = 0;
    for (Int ell = 2; ell <= 200; ++ell) {
        if (!valid_ell(ell)) continue;
        KummerCount k = kummer_structure_count(ell);
        if (!k.closed_form_applies) continue;
        ++applied;
        int m = static_cast<int>(prime_divisors(ell / 2).size());
        int eps = k.D_H % 3 == 0 ? -2 : -1;
        if (!k.e3 || *k.e3 != 2 * (Int(1) << (m + eps))) o.fail("ell=" + std::to_string(ell));
    }
    if (kummer_structure_count(20).n_ks != std::optional<Int>(2)) o.fail("N_KS(20)");
    if (kummer_structure_count(12).n_ks != std::optional<Int>(1)) o.fail("N_KS(12)");
    if (o.ok) o.note << applied << " ell with the closed form; N_KS(20)=2, N_KS(12)=1";
}

void c9(Outcome& o) {
    int n = 0;
    for (Int ell = -120; ell <= 120; ++ell) {
        if (ell == 0 || !valid_ell(ell)) continue;
        ++n;
        FiniteQuadForm q = discriminant_form(ns_lattice(ell));
        if (q.order() != iabs(ell)) o.fail("order ell=" + std::to_string(ell));
        if (floor_mod(ell, 6) == 2 && !q.is_cyclic()) o.fail("not cyclic ell=" + std::to_string(ell));
        if (ell > 0 && ell % 9 == 0 && q.invariant_factors != std::vector<Int>{3, ell / 3})
            o.fail("structure ell=" + std::to_string(ell));
    }
    if (o.ok) o.note << n << " values of ell";
}

void c10(Outcome& o) {
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<Int> d(-1000, 1000);
    int pairs = 0;
    while (pairs < 200) {
        Int a = d(rng), b = d(rng);
        if (a == 0 || b == 0) continue;
        ++pairs;
        int prod = hilbert_symbol(a, b, kRealPlace);
        for (Int p : prime_divisors(2 * a * b)) prod *= hilbert_symbol(a, b, p);
        if (prod != 1) o.fail("(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    const Int coeffs[] = {1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 10, -10, 15, -15, 30, -30};
    std::uniform_int_distribution<int> pick(0, 15);
    const Int primes[] = {2, 3, 5};
    for (int t = 0; t < 50; ++t) {
        std::vector<Int> a(4);
        for (auto& x : a) x = coeffs[pick(rng)];
        Int p = primes[t % 3];
        if (rank4_represents_zero(std::vector<Rational>(a.begin(), a.end()), p) != oracle::isotropic_mod_pk(a, p))
            o.fail("form at p=" + std::to_string(p));
    }
    if (o.ok) o.note << "200 pairs, 50 forms";
}

} // namespace

int main() {
    using Check = void (*)(Outcome&);
    const std::pair<const char*, Check> criteria[] = {
        {"first table", c1},        {"second table", c2},          {"ell = -84 example", c3},
        {"word identities", c4},    {"order discriminants", c5},   {"endomorphism relations", c6},
        {"principal polarization", c7}, {"Kummer counts", c8},     {"discriminant groups", c9},
        {"Hilbert symbols and isotropy", c10}};
    int failed = 0, i = 0;
    for (auto [name, fn] : criteria) {
        ++i;
        Outcome o;
        try {
            fn(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failed += !o.ok;
        std::cout << "criterion " << i << " " << (o.ok ? "PASS" : "FAIL") << "  " << name << ": " << o.note.str() << "\n";
    }
    std::cout << (failed ? "acceptance: FAIL" : "acceptance: PASS") << "\n";
    return failed ? 1 : 0;
}
