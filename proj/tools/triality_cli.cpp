#include "triality/checks.hpp"
#include "triality/lefschetz.hpp"
#include "triality/liealg.hpp"
#include "triality/schottky.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace triality;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kUsageError = 2;

int run_verify(const std::string& suite, std::uint64_t seed, int trials, bool json) {
    if (!is_suite(suite)) {
        std::cerr << "unknown suite '" << suite << "'; choose one of: all";
        for (const auto& s : suite_names()) std::cerr << ", " << s;
        std::cerr << "\n";
        return kUsageError;
    }
    if (trials < 1) {
        std::cerr << "--trials must be at least 1\n";
        return kUsageError;
    }
    const auto reports = run_checks(suite, CheckContext{seed, trials});
    bool all_pass = true;
    for (const auto& r : reports) {
        all_pass = all_pass && r.status == CheckStatus::pass;
        if (json) {
            ordered_json j;
            j["check"] = r.check_name;
            j["paper"] = r.location;
            j["status"] = to_string(r.status);
            j["detail"] = r.detail;
            j["elapsed_ms"] = std::round(r.elapsed_ms * 1000) / 1000;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << std::left << std::setw(6) << to_string(r.status) << std::setw(26) << r.check_name << r.detail
                      << "\n";
        }
    }
    if (!json) std::cout << reports.size() << " checks, " << (all_pass ? "all passed" : "FAILURES") << "\n";
    return all_pass ? 0 : 1;
}

std::string rational_string(const Rational& r) { return r.to_string(); }

int run_dim(std::int64_t g, std::int64_t delta, bool cyclic_flag, bool json) {
    if (cyclic_flag && delta != g + 2)
        std::cerr << "warning: --cyclic given but delta = " << delta << " ≠ g+2 = " << g + 2
                  << "; treating the curve as non-cyclic\n";
    const TrigonalData t(g, delta);
    const GenusReport genus = genus_suite(t);
    ordered_json j;
    j["genus"] = g;
    j["delta"] = delta;
    j["cyclic"] = t.cyclic();
    if (t.cyclic()) {
        const auto c = cyclic_moduli_dim(g);
        j["dimension"] = rational_string(c.a);
        j["multiplicities"] = {{"1", rational_string(c.a)}, {"omega", rational_string(c.b)}, {"omega2", rational_string(c.c)}};
    } else {
        const auto m = galois_moduli_character(t);
        j["dimension"] = m.a;
        j["character"] = {{"1", m.a}, {"eps", m.b}, {"rho", m.c}};
    }
    ordered_json covers = ordered_json::array();
    for (const auto& c : genus.covers)
        covers.push_back({{"cover", c.name}, {"degree", c.degree}, {"genus", c.closed_genus}, {"euler", c.euler},
                          {"riemann_hurwitz", c.consistent()}});
    j["covers"] = covers;
    j["galois_closure_components"] = genus.galois_closure_components;
    if (!t.cyclic()) j["recillas_unramified"] = recillas_unramified_check(t);

    if (json) {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "g = " << g << ", delta = " << delta << (t.cyclic() ? " (cyclic)" : "") << "\n";
        if (t.cyclic()) {
            const auto c = cyclic_moduli_dim(g);
            std::cout << "dim N_C = " << c.a << "\n"
                      << "eigenvalue multiplicities (1, w, w^2) = (" << c.a << ", " << c.b << ", " << c.c << ")\n";
        } else {
            const auto m = galois_moduli_character(t);
            std::cout << "dim N_C = " << m.a << "\n"
                      << "S3 character (1, eps, rho) = (" << m.a << ", " << m.b << ", " << m.c << ")\n";
        }
        for (const auto& c : genus.covers)
            std::cout << "  " << std::left << std::setw(5) << c.name << " degree " << std::setw(3) << c.degree << " genus "
                      << std::setw(5) << c.closed_genus << " Riemann-Hurwitz " << (c.consistent() ? "ok" : "MISMATCH")
                      << "\n";
        if (!t.cyclic()) std::cout << "G(R) -> G(C) unramified: " << (recillas_unramified_check(t) ? "yes" : "NO") << "\n";
    }
    return genus.ok() ? 0 : 1;
}

int run_hodge(std::int64_t g, std::int64_t delta, bool json) {
    const TrigonalData t(g, delta);
    const auto cf = structure_sheaf_class_function(t);
    const auto m = structure_sheaf_character_S4(t);
    const auto& table = s4_table();
    if (json) {
        ordered_json j;
        j["genus"] = g;
        j["delta"] = delta;
        ordered_json traces, mult;
        for (std::size_t k = 0; k < cf.values.size(); ++k) traces[table.classes[k].label] = cf.values[k].to_string();
        for (std::size_t i = 0; i < m.size(); ++i) mult[table.irreducibles[i].name] = m[i];
        j["traces"] = traces;
        j["multiplicities"] = mult;
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "H^1(G(R), O) for g = " << g << ", delta = " << delta << "\n  traces:";
    for (std::size_t k = 0; k < cf.values.size(); ++k) std::cout << " " << table.classes[k].label << "=" << cf.values[k];
    std::cout << "\n  multiplicities:";
    for (std::size_t i = 0; i < m.size(); ++i) std::cout << " " << table.irreducibles[i].name << "=" << m[i];
    std::cout << "\n";
    return 0;
}

void print_multiset(const char* label, const SummandMultiset& m) {
    std::cout << "  " << std::left << std::setw(3) << label << " " << m.twist << " ⊗ {";
    for (std::size_t i = 0; i < m.vectors.size(); ++i) std::cout << (i ? ", " : "") << m.vectors[i];
    std::cout << "}\n";
}

int run_schottky() {
    const auto ids = recillas_identity_values();
    std::cout << "l = " << recillas_l() << ", n = " << recillas_n() << "\n"
              << "(1+phi^2) l = " << ids.one_plus_phi2_l << "\n"
              << "(1+tau+tau^2) n = " << ids.tau_orbit_sum_n << "\n";
    const auto lhs = expand_L_side(), rhs = expand_N_side();
    std::cout << "L side:\n";
    print_multiset("V", lhs.v);
    print_multiset("S+", lhs.s_plus);
    print_multiset("S-", lhs.s_minus);
    std::cout << "N side:\n";
    print_multiset("V", rhs.v);
    print_multiset("S+", rhs.s_plus);
    print_multiset("S-", rhs.s_minus);
    const auto rep = compare_sides(lhs, rhs);
    std::cout << "equal: V " << rep.v << ", S+ " << rep.s_plus << ", S- " << rep.s_minus << "\n";
    return ids.ok() && rep.ok() ? 0 : 1;
}

int run_liealg() {
    for (const auto& u : S3Element::all()) {
        std::cout << std::left << std::setw(4) << u.name() << " trace " << std::setw(3) << adjoint_trace(u).to_string()
                  << " eigenvalues:";
        for (const auto& [l, m] : adjoint_decomposition(u)) std::cout << " " << l << " x" << m;
        std::cout << "\n";
    }
    const auto rep = positive_root_array_check();
    std::cout << "positive-root array under tau: " << (rep.ok() ? "columns 1-3 cycled, column 4 fixed" : "MISMATCH")
              << "\n";
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for Spin(8) triality, isotropic subspaces and trigonal moduli"};
    app.require_subcommand(1);

    std::string suite = "all";
    std::uint64_t seed = 0;
    int trials = 100;
    bool json = false;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", suite, "Suite name or 'all'");
    verify->add_option("--seed", seed, "Random seed")->capture_default_str();
    verify->add_option("--trials", trials, "Random samples per property check")->capture_default_str();
    verify->add_flag("--json", json, "One JSON object per check");

    std::int64_t genus = 0, delta = 0;
    bool cyclic = false;
    auto* dim = app.add_subcommand("dim", "Dimension and character of the moduli of Galois bundles");
    dim->add_option("--genus", genus, "Genus g of the trigonal curve")->required();
    dim->add_option("--delta", delta, "Number of double branch points")->capture_default_str();
    dim->add_flag("--cyclic", cyclic, "Expect the cyclic case delta = g+2");
    dim->add_flag("--json", json, "JSON output");

    auto* hodge = app.add_subcommand("hodge", "S4 decomposition of H^1(G(R), O)");
    hodge->add_option("--genus", genus, "Genus g of the trigonal curve")->required();
    hodge->add_option("--delta", delta, "Number of double branch points")->capture_default_str();
    hodge->add_flag("--json", json, "JSON output");

    auto* schottky = app.add_subcommand("schottky", "Recillas identities and the eight-vector comparison");
    auto* liealg = app.add_subcommand("liealg", "Triality on so(8): traces and eigenspaces");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*verify) return run_verify(suite, seed, trials, json);
        if (*dim) return run_dim(genus, delta, cyclic, json);
        if (*hodge) return run_hodge(genus, delta, json);
        if (*schottky) return run_schottky();
        if (*liealg) return run_liealg();
    } catch (const CyclicCase& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
