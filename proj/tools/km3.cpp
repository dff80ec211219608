#include <fstream>
#include <iostream>
#include <regex>

#include <CLI11.hpp>

#include "km3/report.hpp"

using namespace km3;

namespace {

EisensteinInt parse_mu(const std::string& s) {
    static const std::regex re(R"(\s*(-?\d+)\s*,\s*(-?\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw DomainError("--mu expects x,y (got '" + s + "')");
    return {std::stoll(m[1]), std::stoll(m[2])};
}

int emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write " << out << "\n";
        return kExitUsage;
    }
    f << text;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized Kummer surfaces: lattices, orders and moduli counts"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out;
    app.add_option("--out", out, "write the report to this file");

    Int ell = 0;
    bool reps = false;
    int parity = 0, kmax = kDefaultKmax;
    std::string format = "json";
    Int d_H = 0;
    std::string mu;
    int corrupt = 0;

    auto* inv = app.add_subcommand("invariants", "lattice, polarization and order invariants");
    inv->add_option("ell", ell, "L_X^2")->required();
    auto* mod = app.add_subcommand("moduli", "components of the moduli space (ell <= 0)");
    mod->add_option("ell", ell, "L_X^2")->required();
    mod->add_flag("--reps", reps, "print representatives and complements");
    auto* tab = app.add_subcommand("tables", "component and genus counts, k = 1..kmax");
    tab->add_option("--parity", parity, "0 for L_X^2 = -6k, 2 for -6k+2")->required()->check(CLI::IsMember({0, 2}));
    tab->add_option("--kmax", kmax, "last k")->check(CLI::Range(1, kKmaxCap));
    tab->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "pretty"}));
    auto* ord = app.add_subcommand("order", "the order O_mu in the algebra of d_H");
    ord->add_option("--dh", d_H)->required();
    ord->add_option("--mu", mu, "x,y for x + y j")->required();
    auto* cnt = app.add_subcommand("count", "number of Kummer structures");
    cnt->add_option("ell", ell, "L_X^2")->required();
    auto* st = app.add_subcommand("selftest", "run the identity and oracle suite");
    st->add_option("--corrupt-tau", corrupt)->group(""); // fault injection for tests

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        Report r;
        if (*inv) r = cmd_invariants(ell);
        else if (*mod) r = cmd_moduli(ell, reps);
        else if (*tab) r = cmd_tables(parity, kmax);
        else if (*ord) r = cmd_order(d_H, parse_mu(mu));
        else if (*cnt) r = cmd_count(ell);
        else {
            SelftestOptions opt;
            if (corrupt) opt.corrupt_tau = corrupt;
            r = cmd_selftest(opt);
        }
        std::string text = format == "csv" ? render_table_csv(r) : format == "pretty" ? render_table_pretty(r) : render_json(r);
        if (int rc = emit(text, out)) return rc;
        if (r.exit_code == kExitUnsupported) std::cerr << "unsupported: " << r.results.at("kummer").at("reason").get<std::string>() << "\n";
        return r.exit_code;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitVerification;
    }
}
