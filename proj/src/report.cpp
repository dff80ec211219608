#include "km3/report.hpp"

#include <iomanip>
#include <sstream>

#include "km3/genus.hpp"
#include "km3/nslat.hpp"
#include "km3/quat.hpp"
#include "km3/vinberg.hpp"

namespace km3 {

namespace {

constexpr Int kSafeJsonInt = Int(1) << 53;

json jvec(const std::vector<Int>& v) {
    json a = json::array();
    for (Int x : v) a.push_back(jint(x));
    return a;
}

template <std::size_t N>
json jarr(const std::array<Int, N>& v) {
    return jvec(std::vector<Int>(v.begin(), v.end()));
}

std::vector<std::string> split_pointer(const std::string& p) {
    std::vector<std::string> out;
    std::string cur;
    for (std::size_t i = 1; i <= p.size(); ++i) {
        if (i == p.size() || p[i] == '/') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += p[i];
        }
    }
    if (p.empty()) out.clear();
    return out;
}

// pattern segments may be "*"
bool covers(const std::string& pattern, const std::string& ptr) {
    auto a = split_pointer(pattern), b = split_pointer(ptr);
    if (a.size() > b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != "*" && a[i] != b[i]) return false;
    return true;
}

void numeric_leaves(const json& j, const std::string& at, std::vector<std::string>& out) {
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) numeric_leaves(v, at + "/" + k, out);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) numeric_leaves(j[i], at + "/" + std::to_string(i), out);
    } else if (j.is_number()) {
        out.push_back(at);
    }
}

json disc_form_json(const FiniteQuadForm& q) {
    json d;
    d["invariant_factors"] = jvec(q.invariant_factors);
    d["order"] = jint(q.order());
    d["cyclic"] = q.is_cyclic();
    json qs = json::array();
    for (std::size_t i = 0; i < q.invariant_factors.size(); ++i) {
        std::vector<Int> e(q.invariant_factors.size(), 0);
        e[i] = 1;
        qs.push_back(to_string(q.q(e)));
    }
    d["q_generators"] = qs;
    return d;
}

json order_json(const QuatOrder& o) {
    json j;
    json b = json::array();
    for (auto& e : o.basis) b.push_back(e.str());
    j["basis"] = b;
    j["algebra"] = {to_string(o.alg.a), to_string(o.alg.b)};
    j["trace_gram"] = jmatrix(o.trace_gram);
    j["trace_gram_det"] = jint(determinant(o.trace_gram));
    j["reduced_disc"] = jint(o.reduced_disc);
    j["eichler"] = is_eichler_certified(o);
    return j;
}

json kummer_json(const KummerCount& k) {
    json j;
    j["exact"] = k.exact;
    j["e3"] = k.e3 ? jint(*k.e3) : json(nullptr);
    j["n_ks"] = k.n_ks ? jint(*k.n_ks) : json(nullptr);
    j["reason"] = k.reason.empty() ? json(nullptr) : json(k.reason);
    j["closed_form_applies"] = k.closed_form_applies;
    j["closed_form"] = k.closed_form ? jint(*k.closed_form) : json(nullptr);
    return j;
}

PolarizationClass representative_class(Int ell) {
    if (floor_mod(ell, 6) == 2) return polarization_class(PolCase::i, {(ell - 2) / 6, 1, 0, 1});
    return polarization_class(PolCase::ii, {ell / 6, 1, 0, 0});
}

void require_table_args(int parity, int kmax) {
    if (parity != 0 && parity != 2) throw DomainError("--parity must be 0 or 2");
    if (kmax < 1 || kmax > kKmaxCap) throw DomainError("--kmax must lie in [1, " + std::to_string(kKmaxCap) + "]");
}

} // namespace

json jint(Int v) {
    if (v > kSafeJsonInt || v < -kSafeJsonInt) return std::to_string(v);
    return v;
}

json jmatrix(const IntMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(jint(m(i, j)));
        a.push_back(row);
    }
    return a;
}

json jrational(const Rational& q) { return to_string(q); }

void Report::put(const std::string& key, json value, const std::string& prov_id) {
    results[key] = std::move(value);
    provenance["/results/" + key] = prov_id;
}

json Report::to_json() const {
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    j["provenance"] = provenance;
    j["exit_code"] = exit_code;
    return j;
}

std::vector<std::string> missing_provenance(const Report& r) {
    std::vector<std::string> leaves;
    numeric_leaves(r.results, "/results", leaves);
    std::vector<std::string> out;
    for (auto& p : leaves) {
        bool ok = false;
        for (auto& [pat, id] : r.provenance)
            if (!id.empty() && covers(pat, p)) ok = true;
        if (!ok) out.push_back(p);
    }
    return out;
}

std::string render_json(const Report& r) { return r.to_json().dump(2) + "\n"; }

std::string render_table_csv(const Report& r) {
    if (r.command != "tables") throw DomainError("csv output is only defined for tables");
    std::ostringstream os;
    os << "k,lx_sq,num_components,genus_size\n";
    for (auto& row : r.results.at("rows"))
        os << row.at("k").dump() << ',' << row.at("lx_sq").dump() << ',' << row.at("num_components").dump() << ','
           << row.at("genus_size").dump() << '\n';
    return os.str();
}

std::string render_table_pretty(const Report& r) {
    if (r.command != "tables") throw DomainError("pretty output is only defined for tables");
    auto& rows = r.results.at("rows");
    std::ostringstream os;
    os << "L_X^2 = " << (r.inputs.at("parity").get<int>() == 0 ? "-6k" : "-6k+2") << "\n";
    auto line = [&](const char* label, const char* key) {
        os << std::left << std::setw(6) << label;
        for (auto& row : rows) os << std::right << std::setw(4) << row.at(key).dump();
        os << '\n';
    };
    line("k", "k");
    line("#L_A", "num_components");
    line("#G", "genus_size");
    return os.str();
}

Int table_ell(int parity, int k) { return parity == 0 ? -6 * Int(k) : 2 - 6 * Int(k); }

Report cmd_invariants(Int ell) {
    require_valid_ell(ell);
    if (ell == 0) throw DomainError("invariants: ell must be nonzero");
    Report r;
    r.command = "invariants";
    r.inputs["ell"] = jint(ell);

    IntLattice ns = ns_lattice(ell);
    r.put("ns_gram", jmatrix(ns.gram), prov::ns_lattice);
    r.put("ns_det", jint(ns.det()), prov::ns_lattice);
    r.put("discriminant_group", disc_form_json(discriminant_form(ns)), prov::disc_group);

    if (ell < 0) {
        r.put("positive_only", "polarization, order and count data need ell > 0", prov::derived);
        return r;
    }

    json pp;
    pp["closed_form"] = has_principal_polarization(ell);
    pp["local_oracle"] = pp_local_oracle(ell);
    pp["agree"] = pp["closed_form"] == pp["local_oracle"];
    json places = json::array();
    for (auto& v : pp_local_report(ell))
        places.push_back({{"place", v.p == kRealPlace ? json("inf") : jint(v.p)}, {"solvable", v.solvable}});
    pp["places"] = places;
    r.put("principal_polarization", pp, prov::pp_closed);
    r.provenance["/results/principal_polarization/places"] = prov::pp_oracle;
    if (pp["agree"] != true) r.exit_code = kExitVerification;

    PolarizationClass pc = representative_class(ell);
    json pol;
    pol["case"] = to_string(pc.case_tag);
    pol["n"] = jarr(pc.n);
    pol["gamma"] = jarr(pc.gamma_coords);
    pol["lx_sq"] = jint(pc.lx_sq);
    pol["la_sq"] = jint(pc.la_sq);
    EndoData ed = endo_matrices(pc);
    pol["endo_relations_verified"] = ed.relations_verified;
    pol["endo_trace_gram"] = jmatrix(endo_trace_gram(ed));
    r.put("polarization", pol, prov::polarization);
    r.provenance["/results/polarization/endo_trace_gram"] = prov::end_order;
    if (!ed.relations_verified) r.exit_code = kExitVerification;

    KummerCount kc = kummer_structure_count(ell);
    AlgebraDiscriminant ad = algebra_discriminant(kc.d_H);
    json q;
    q["d_H"] = jint(kc.d_H);
    q["D_H"] = jint(kc.D_H);
    q["ramified_at_infinity"] = ad.ramified_at_infinity;
    r.put("quaternion_algebra", q, prov::quat_algebra);

    json ord;
    ord["mu_norm"] = kc.mu ? jint(kc.mu_norm) : json(nullptr);
    ord["mu"] = kc.mu ? json{jint(kc.mu->x), jint(kc.mu->y)} : json(nullptr);
    if (kc.mu) {
        json oj = order_json(order_mu(kc.d_H, *kc.mu));
        for (auto& [k, v] : oj.items()) ord[k] = v;
    }
    r.put("order", ord, prov::end_order);

    r.put("kummer", kummer_json(kc), prov::kummer);
    r.provenance["/results/kummer/e3"] = prov::elliptic;
    r.provenance["/results/kummer/closed_form"] = prov::kummer_closed;

    bool distinct = fm_partners_distinct(ell);
    r.put("fm_partners", {{"distinct", distinct}, {"count", distinct ? 2 : 1}}, prov::fm);
    r.put("rad2", jint(rad2(ell / 2)), prov::isogeny);
    return r;
}

Report cmd_moduli(Int ell, bool reps) {
    require_valid_ell(ell);
    if (ell > 0) throw DomainError("moduli: ell must be <= 0");
    Report r;
    r.command = "moduli";
    r.inputs["ell"] = jint(ell);
    r.inputs["reps"] = reps;

    auto comps = enumerate_components(ell);
    r.put("lx_sq", jint(ell), prov::ns_lattice);
    r.put("la_sq", jint(la_square_for(ell)), prov::ns_lattice);
    r.put("num_components", jint(static_cast<Int>(comps.size())), prov::components);
    r.put("gamma_orbits", jint(gamma_orbit_count(ell)), prov::derived);
    if (!reps) return r;

    json a = json::array();
    IntLattice ns = ell < 0 ? ns_lattice(ell).scaled(-1) : IntLattice();
    for (auto& x : comps) {
        json e;
        e["gamma"] = jarr(x);
        if (ell < 0) {
            IntLattice t = orthogonal_complement(x);
            e["complement_gram"] = jmatrix(t.gram);
            e["minimum"] = jint(lattice_minimum(t.gram));
            e["isometric_to_ns"] = is_isometric(t, ns);
            e["same_genus_as_ns"] = same_genus(t, ns);
        } else {
            e["complement_gram"] = nullptr; // isotropic: degenerate complement
        }
        a.push_back(e);
    }
    r.put("representatives", a, prov::components);
    r.provenance["/results/representatives/*/complement_gram"] = prov::complement;
    r.provenance["/results/representatives/*/minimum"] = prov::complement;
    return r;
}

Report cmd_tables(int parity, int kmax) {
    require_table_args(parity, kmax);
    Report r;
    r.command = "tables";
    r.inputs["parity"] = parity;
    r.inputs["kmax"] = kmax;
    json rows = json::array();
    for (int k = 1; k <= kmax; ++k) {
        Int ell = table_ell(parity, k);
        rows.push_back({{"k", k},
                        {"lx_sq", jint(ell)},
                        {"num_components", jint(static_cast<Int>(enumerate_components(ell).size()))},
                        {"genus_size", jint(genus_count(ell))}});
    }
    r.put("rows", rows, prov::derived);
    r.provenance["/results/rows/*/lx_sq"] = prov::ns_lattice;
    r.provenance["/results/rows/*/num_components"] = prov::components;
    r.provenance["/results/rows/*/genus_size"] = prov::genus;
    return r;
}

Report cmd_order(Int d_H, EisensteinInt mu) {
    Report r;
    r.command = "order";
    r.inputs["d_H"] = jint(d_H);
    r.inputs["mu"] = {jint(mu.x), jint(mu.y)};
    AlgebraDiscriminant ad = algebra_discriminant(d_H);
    QuatOrder o = order_mu(d_H, mu);
    r.put("D_H", jint(ad.finite), prov::quat_algebra);
    r.put("ramified_at_infinity", ad.ramified_at_infinity, prov::quat_algebra);
    r.put("mu_norm", jint(mu.norm()), prov::end_order);
    r.put("order", order_json(o), prov::end_order);
    r.put("expected_disc", jint(mu.norm() * ad.finite), prov::end_order);
    if (o.reduced_disc != mu.norm() * ad.finite) r.exit_code = kExitVerification;
    if (d_H < 0) r.put("cube_roots_of_unity", jint(static_cast<Int>(cube_roots_of_unity(o).size())), prov::derived);
    if (is_eichler_certified(o)) {
        try {
            r.put("e3", jint(e3(ad.finite, mu.norm())), prov::elliptic);
        } catch (const Unsupported& u) {
            r.put("e3_unsupported", u.what(), prov::derived);
        }
    }
    return r;
}

Report cmd_count(Int ell) {
    KummerCount kc = kummer_structure_count(ell);
    Report r;
    r.command = "count";
    r.inputs["ell"] = jint(ell);
    r.put("d_H", jint(kc.d_H), prov::quat_algebra);
    r.put("D_H", jint(kc.D_H), prov::quat_algebra);
    r.put("mu_norm", kc.mu ? jint(kc.mu_norm) : json(nullptr), prov::end_order);
    r.put("kummer", kummer_json(kc), prov::kummer);
    r.provenance["/results/kummer/e3"] = prov::elliptic;
    r.provenance["/results/kummer/closed_form"] = prov::kummer_closed;
    if (!kc.exact) r.exit_code = kExitUnsupported;
    return r;
}

const TableReference& table_reference(int parity) {
    static const TableReference t0{{1, 1, 2, 1, 2, 2, 2, 2, 3, 2, 3, 3, 3, 3, 4, 2, 4, 5},
                                   {1, 1, 1, 1, 2, 1, 2, 2, 2, 1, 3, 1, 3, 2, 2, 2, 4, 1}};
    static const TableReference t2{{1, 1, 1, 2, 2, 2, 3, 3, 3, 4, 2, 5, 4, 5, 3, 7, 3, 5},
                                   {1, 1, 1, 2, 1, 2, 1, 3, 2, 3, 2, 3, 2, 4, 2, 5, 2, 4}};
    if (parity == 0) return t0;
    if (parity == 2) return t2;
    throw DomainError("table_reference: parity must be 0 or 2");
}

} // namespace km3
