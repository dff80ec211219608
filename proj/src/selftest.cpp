#include <functional>
#include <set>

#include "km3/arith.hpp"
#include "km3/genus.hpp"
#include "km3/nslat.hpp"
#include "km3/quat.hpp"
#include "km3/report.hpp"
#include "km3/vinberg.hpp"

namespace km3 {

namespace {

struct Group {
    std::string name;
    Int checks = 0;
    std::vector<std::string> failures;

    explicit Group(std::string n) : name(std::move(n)) {}

    void check(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
    // exceptions count as failures
    void run(const std::string& what, const std::function<bool()>& f) {
        bool ok = false;
        try {
            ok = f();
        } catch (const std::exception& e) {
            check(false, what + ": " + e.what());
            return;
        }
        check(ok, what);
    }
};

std::vector<Place> places_of(Int a, Int b) {
    std::vector<Place> out{kRealPlace};
    for (Int p : prime_divisors(2 * a * b)) out.push_back(p);
    return out;
}

Group generators_group(const GeneratorSet& gens) {
    Group g{"generators"};
    for (int k = 0; k < 5; ++k) g.check(preserves_gram(gens.r[k]), "r" + std::to_string(k + 1) + " preserves the Gram");
    for (int k = 0; k < 4; ++k) g.check(preserves_gram(gens.t[k]), "t" + std::to_string(k + 1) + " preserves the Gram");
    return g;
}

Group words_group(const GeneratorSet& gens) {
    Group g{"word-identities"};
    for (auto& w : word_identities()) g.run(w.name, [&] { return identity_holds(w, gens); });
    return g;
}

Group orders_group() {
    Group g{"order-discriminants"};
    for (Int d = -50; d <= 50; ++d) {
        if (!is_admissible_dh(d)) continue;
        g.run("maximal order d_H = " + std::to_string(d), [&] {
            Int D = algebra_discriminant(d).finite;
            return determinant(maximal_order(d).trace_gram) == -D * D;
        });
    }
    for (Int d : {-1, 2, -2, 5, -5, -10, 11, 17}) {
        for (EisensteinInt mu : {EisensteinInt{2, 0}, EisensteinInt{3, 1}, EisensteinInt{1, 3}, EisensteinInt{4, 1}}) {
            g.run("O_mu d_H = " + std::to_string(d) + " mu = " + mu.str(), [&] {
                Int D = algebra_discriminant(d).finite;
                Int n = mu.norm() * D;
                return determinant(order_mu(d, mu).trace_gram) == -n * n;
            });
        }
    }
    return g;
}

Group endo_group() {
    Group g{"endomorphism-relations"};
    for (Int n1 = -2; n1 <= 2; ++n1)
        for (Int n2 = -1; n2 <= 2; ++n2)
            for (Int n3 = -1; n3 <= 1; ++n3)
                for (Int n4 = -2; n4 <= 2; ++n4)
                    for (PolCase c : {PolCase::i, PolCase::ii}) {
                        std::array<Int, 4> n{n1, n2, n3, n4};
                        PolarizationClass pc;
                        try {
                            pc = polarization_class(c, n);
                        } catch (const DomainError&) {
                            continue; // n violates the case constraints
                        }
                        if (pc.lx_sq <= 0) continue;
                        std::string what = std::string("case ") + to_string(c) + " n = (" + std::to_string(n1) + "," +
                                           std::to_string(n2) + "," + std::to_string(n3) + "," + std::to_string(n4) + ")";
                        g.run(what, [&] { return endo_matrices(pc).relations_verified; });
                    }
    return g;
}

Group pp_group() {
    Group g{"principal-polarization"};
    for (Int ell = 1; ell <= 120; ++ell)
        if (valid_ell(ell))
            g.run("ell = " + std::to_string(ell), [&] { return has_principal_polarization(ell) == pp_local_oracle(ell); });
    return g;
}

Group kummer_group() {
    Group g{"kummer-counts"};
    for (Int ell = 2; ell <= 200; ++ell) {
        if (!valid_ell(ell)) continue;
        g.run("ell = " + std::to_string(ell), [&] {
            KummerCount k = kummer_structure_count(ell);
            return !k.closed_form_applies || (k.n_ks && k.closed_form && *k.n_ks == *k.closed_form);
        });
    }
    g.run("N_KS(20) = 2", [] { return kummer_structure_count(20).n_ks == std::optional<Int>(2); });
    g.run("N_KS(12) = 1", [] { return kummer_structure_count(12).n_ks == std::optional<Int>(1); });
    return g;
}

Group disc_group() {
    Group g{"discriminant-groups"};
    for (Int ell = -120; ell <= 120; ++ell) {
        if (ell == 0 || !valid_ell(ell)) continue;
        g.run("ell = " + std::to_string(ell), [&] {
            FiniteQuadForm q = discriminant_form(ns_lattice(ell));
            bool ok = q.order() == iabs(ell);
            if (floor_mod(ell, 6) == 2) ok = ok && q.is_cyclic();
            if (ell > 0 && ell % 9 == 0) ok = ok && q.invariant_factors == std::vector<Int>{3, ell / 3};
            return ok;
        });
    }
    return g;
}

Group hilbert_group() {
    Group g{"hilbert-product"};
    for (Int a = -12; a <= 12; ++a)
        for (Int b = -12; b <= 12; b += 5) {
            if (a == 0 || b == 0) continue;
            g.run("(" + std::to_string(a) + ", " + std::to_string(b) + ")", [&] {
                int prod = 1;
                for (Place p : places_of(a, b)) prod *= hilbert_symbol(a, b, p);
                return prod == 1;
            });
        }
    return g;
}

Group tables_group() {
    Group g{"tables"};
    for (int parity : {0, 2}) {
        const TableReference& ref = table_reference(parity);
        for (int k = 1; k <= 18; ++k) {
            Int ell = table_ell(parity, k);
            std::string at = "ell = " + std::to_string(ell);
            g.run(at + " components", [&] { return static_cast<Int>(enumerate_components(ell).size()) == ref.components[k - 1]; });
            g.run(at + " genus", [&] { return genus_count(ell) == ref.genus[k - 1]; });
        }
    }
    return g;
}

Group example_group() {
    Group g{"moduli-example"};
    g.run("ell = -84 complements", [] {
        IntLattice ns = ns_lattice(-84).scaled(-1);
        IntLattice t1(IntMatrix{{4, 2, -2}, {2, 6, -3}, {-2, -3, 6}});
        auto comps = enumerate_components(-84);
        if (comps.size() != 3) return false;
        std::multiset<Int> minima;
        for (auto& x : comps) {
            IntLattice t = orthogonal_complement(x);
            Int m = lattice_minimum(t.gram);
            minima.insert(m);
            if (!same_genus(t, ns)) return false;
            if (m == 4 && !is_isometric(t, t1)) return false;
            if (m == 2 && !is_isometric(t, ns)) return false;
        }
        return minima == std::multiset<Int>{2, 2, 4};
    });
    return g;
}

} // namespace

Report cmd_selftest(const SelftestOptions& opt) {
    GeneratorSet gens = default_generators();
    if (opt.corrupt_tau) {
        int k = *opt.corrupt_tau;
        if (k < 1 || k > 4) throw DomainError("corrupt_tau must be in 1..4");
        gens.t[k - 1](0, 0) += 1;
    }
    std::vector<Group> groups{generators_group(gens), words_group(gens), orders_group(), endo_group(),
                              pp_group(), kummer_group(), disc_group(), hilbert_group(),
                              tables_group(), example_group()};
    Report r;
    r.command = "selftest";
    if (opt.corrupt_tau) r.inputs["corrupt_tau"] = *opt.corrupt_tau;
    json gj = json::object();
    bool all = true;
    for (auto& g : groups) {
        gj[g.name] = {{"passed", g.failures.empty()}, {"checks", g.checks}, {"failures", g.failures}};
        all = all && g.failures.empty();
    }
    r.put("groups", gj, prov::derived);
    r.put("all_passed", all, prov::derived);
    if (!all) r.exit_code = kExitVerification;
    return r;
}

} // namespace km3
