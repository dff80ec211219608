#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "km3/core.hpp"
#include "km3/eisenstein.hpp"
#include "km3/matrix.hpp"

namespace km3 {

using json = nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnsupported = 3;

inline constexpr int kDefaultKmax = 18;
inline constexpr int kKmaxCap = 30;

// Provenance ids.
namespace prov {
inline constexpr const char* ns_lattice = "ns-lattice-table";
inline constexpr const char* disc_group = "discriminant-group";
inline constexpr const char* pp_closed = "principal-polarization-criterion";
inline constexpr const char* pp_oracle = "derived:local-oracle";
inline constexpr const char* quat_algebra = "quaternion-algebra-discriminant";
inline constexpr const char* end_order = "endomorphism-order";
inline constexpr const char* elliptic = "elliptic-point-count";
inline constexpr const char* kummer = "kummer-structure-count";
inline constexpr const char* kummer_closed = "kummer-count-closed-form";
inline constexpr const char* fm = "fourier-mukai-partners";
inline constexpr const char* isogeny = "isogeny-invariant";
inline constexpr const char* components = "component-enumeration";
inline constexpr const char* genus = "genus-table";
inline constexpr const char* complement = "orthogonal-complement";
inline constexpr const char* polarization = "polarization-coordinates";
inline constexpr const char* words = "reflection-word-identities";
inline constexpr const char* derived = "derived";
} // namespace prov

// Integers past 2^53 become strings.
json jint(Int v);
json jmatrix(const IntMatrix& m);
json jrational(const Rational& q);

struct Report {
    std::string command;
    json inputs = json::object();
    json results = json::object();
    // JSON pointer (relative to the report root) -> provenance id; covers everything below it.
    std::map<std::string, std::string> provenance;
    int exit_code = kExitOk;

    void put(const std::string& key, json value, const std::string& prov_id);
    json to_json() const;
};

// Pointers of numeric leaves with no covering provenance entry.
std::vector<std::string> missing_provenance(const Report& r);

std::string render_json(const Report& r);
std::string render_table_csv(const Report& r);
std::string render_table_pretty(const Report& r);

Int table_ell(int parity, int k);

Report cmd_invariants(Int ell);
Report cmd_moduli(Int ell, bool reps);
Report cmd_tables(int parity, int kmax);
Report cmd_order(Int d_H, EisensteinInt mu);
Report cmd_count(Int ell);

struct SelftestOptions {
    std::optional<int> corrupt_tau; // 1..4, fault injection
};
Report cmd_selftest(const SelftestOptions& opt = {});

// Reference rows for k = 1..18.
struct TableReference {
    std::vector<Int> components, genus;
};
const TableReference& table_reference(int parity);

} // namespace km3
