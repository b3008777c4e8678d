// Acceptance criteria AC1..AC12, one PASS/FAIL line each.

#include "triality/checks.hpp"
#include "triality/clifford.hpp"
#include "triality/isotropic.hpp"
#include "triality/lefschetz.hpp"
#include "triality/liealg.hpp"
#include "triality/schottky.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>

using namespace triality;

namespace {

struct Result {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && pass) {
            pass = false;
            detail = what;
        }
    }
};

Result named_checks(std::initializer_list<const char*> names, int trials, std::uint64_t seed) {
    Result r;
    CheckContext ctx{seed, trials};
    for (const auto& rep : run_checks("all", ctx)) {
        if (std::find_if(names.begin(), names.end(), [&](const char* n) { return rep.check_name == n; }) == names.end())
            continue;
        r.require(rep.status == CheckStatus::pass, rep.check_name + ": " + rep.detail);
    }
    return r;
}

Result ac1() {
    Result r;
    Rng rng = make_rng(101);
    int isotropic = 0;
    for (int i = 0; i < 120; ++i) {
        const RepTag tag = tag_from_index(i % 3);
        const bool iso = i % 4 == 0;
        BlockVector x = iso ? random_isotropic(tag, rng).vec() : random_block_vector(tag, rng);
        const Matrix m = mult_matrix(x);
        r.require(determinant(m) == -pow(quad(x), 4), "determinant identity at sample " + std::to_string(i));
        if (iso) {
            ++isotropic;
            r.require(rank(m) == 4, "isotropic rank at sample " + std::to_string(i));
        }
    }
    r.require(isotropic >= 20, "too few isotropic samples");
    return r;
}

Result ac2() {
    Result r;
    int pairs = 0;
    for (const auto& a : S3Element::all())
        for (const auto& b : S3Element::all()) {
            r.require(rho(a * b) == rho(a) * rho(b), "rho(" + a.name() + b.name() + ")");
            ++pairs;
        }
    r.require(pairs == 36, "pair count");
    Rng rng = make_rng(202);
    for (int i = 0; i < 100; ++i) {
        BlockVector v = random_block_vector(RepTag::V, rng), s = random_block_vector(RepTag::Splus, rng),
                    t = random_block_vector(RepTag::Sminus, rng);
        const Rational base = trilinear(v, s, t);
        for (const auto& u : S3Element::all()) {
            // Images of v, s, t land in three different summands; reassemble them by tag.
            BlockVector x[3] = {act(u, v), act(u, s), act(u, t)};
            BlockVector by_tag[3];
            for (const auto& y : x) by_tag[index_of(y.tag())] = y;
            r.require(trilinear(by_tag[0], by_tag[1], by_tag[2]) == base, "trilinear invariance under " + u.name());
        }
    }
    return r;
}

Result ac4() {
    Result r;
    r.require(adjoint_trace(S3Element::sigma()) == Eisenstein(14), "trace sigma");
    r.require(adjoint_trace(S3Element::tau()) == Eisenstein(7), "trace tau");
    using P = std::vector<std::pair<Eisenstein, int>>;
    r.require(adjoint_decomposition(S3Element::sigma()) == P{{Eisenstein(1), 21}, {Eisenstein(-1), 7}},
              "sigma decomposition");
    r.require(adjoint_decomposition(S3Element::tau()) ==
                  P{{Eisenstein(1), 14}, {Eisenstein::omega(), 7}, {Eisenstein::omega_squared(), 7}},
              "tau decomposition");
    r.require(positive_root_array_check().ok(), "positive-root array");
    return r;
}

Result ac5() {
    Result r;
    for (std::int64_t g = 3; g <= 50; ++g)
        for (std::int64_t d = 0; d <= g + 1; ++d) {
            const auto m = galois_moduli_character(TrigonalData(g, d));
            const MultiplicityTriple closed{7 * g - 14, 21 * g + 14 - 14 * d, 28 * g - 7 * d};
            r.require(m == closed, "g=" + std::to_string(g) + " delta=" + std::to_string(d));
        }
    r.require(galois_moduli_character(TrigonalData(4, 0)).a == 14, "dimension at (4,0)");
    return r;
}

Result ac6() {
    Result r;
    for (std::int64_t g = 3; g <= 50; ++g)
        r.require(cyclic_moduli_dim(g).a == Rational(7 * g - 14), "g=" + std::to_string(g));
    return r;
}

Result ac7() {
    Result r;
    for (std::int64_t g = 3; g <= 30; ++g)
        for (std::int64_t d = 0; d <= g + 1; ++d) {
            const std::array<std::int64_t, 5> closed{0, g + 1 - d, g - 1, 2 * g + 1 - d, g};
            r.require(structure_sheaf_character_S4(TrigonalData(g, d)) == closed,
                      "g=" + std::to_string(g) + " delta=" + std::to_string(d));
        }
    return r;
}

Result ac8() {
    Result r;
    for (std::int64_t g = 4; g <= 50; ++g) {
        const auto t = hyperelliptic_terms(g);
        r.require(t.total == (g - 3) * (g + 5) && t.subtract == (g - 3) * (g - 2), "factorizations at g=" + std::to_string(g));
        r.require(hyperelliptic_moduli_dim(g) == 7 * (g - 3), "value at g=" + std::to_string(g));
    }
    return r;
}

Result ac9() {
    Result r;
    for (std::int64_t g = 3; g <= 50; ++g)
        for (std::int64_t d = 0; d <= g + 2; ++d) {
            const TrigonalData t(g, d);
            const GenusReport rep = genus_suite(t);
            const std::string at = " at g=" + std::to_string(g) + " delta=" + std::to_string(d);
            r.require(rep.ok(), "genus report" + at);
            for (const auto& c : rep.covers) r.require(c.consistent(), std::string(c.name) + at);
            if (!t.cyclic()) {
                r.require(rep.covers[2].closed_genus == 3 * g + 1 - d, "genus G(C)" + at);
                r.require(rep.covers[3].closed_genus == 12 * g + 1 - 4 * d, "genus G(R)" + at);
                r.require(recillas_unramified_check(t), "unramified" + at);
            }
        }
    return r;
}

Result ac10() {
    Result r;
    r.require(recillas_identities(), "Recillas identities");
    r.require(verify_eight_vectors(), "eight vectors");
    // Listed V-multiset.
    std::vector<LatticeVector> listed;
    for (auto v : {LatticeVector::of({1, 1, -1, -1}), LatticeVector::of({1, 1, -1, -1}),
                   LatticeVector::of({2, -2, 0, 0}), LatticeVector::of({0, 0, 2, -2})}) {
        listed.push_back(v);
        listed.push_back(-v);
    }
    std::sort(listed.begin(), listed.end());
    const auto side = expand_N_side().v.vectors;
    r.require(side == listed, "V multiset differs from the listed vectors");
    return r;
}

Result ac11() {
    Result r;
    Rng rng = make_rng(1111);
    const BlockVector one = BlockVector::unit(RepTag::V);
    for (int i = 0; i < 100; ++i) {
        BlockVector x = random_block_vector(RepTag::V, rng), y = random_block_vector(RepTag::V, rng);
        r.require(oct_mul(one, x) == x && oct_mul(x, one) == x, "unit law");
        r.require(quad(oct_mul(x, y)) == quad(x) * quad(y), "norm multiplicativity");
    }
    Result z = named_checks({"octonion-composition", "zero-norm"}, 100, 11);
    r.require(z.pass, z.detail);
    return r;
}

std::string capture(const std::string& cmd, int& code) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        code = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    code = pclose(p);
    return out;
}

Result ac12() {
    Result r;
    const std::string cmd = std::string(TRIALITY_CLI) + " verify --seed 7 --trials 100 --json";
    int c1 = 0, c2 = 0;
    std::string a = capture(cmd, c1), b = capture(cmd, c2);
    const std::regex elapsed("\"elapsed_ms\":[-0-9.eE+]+");
    a = std::regex_replace(a, elapsed, "\"elapsed_ms\":_");
    b = std::regex_replace(b, elapsed, "\"elapsed_ms\":_");
    r.require(c1 == 0 && c2 == 0, "verify exited non-zero");
    r.require(!a.empty(), "empty report");
    r.require(a == b, "reports differ");
    return r;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
        {"AC1 determinant rank-drop", ac1},
        {"AC2 triality splitting", ac2},
        {"AC3 quadric calculus", [] { return named_checks({"prod-zero", "polarity", "ab1", "ab3"}, 60, 3); }},
        {"AC4 Lie algebra traces", ac4},
        {"AC5 moduli dimension", ac5},
        {"AC6 cyclic case", ac6},
        {"AC7 Hodge decomposition", ac7},
        {"AC8 hyperelliptic dimension", ac8},
        {"AC9 genus bookkeeping", ac9},
        {"AC10 Schottky lattice", ac10},
        {"AC11 octonion properties", ac11},
        {"AC12 determinism", ac12},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Result res;
        try {
            res = run();
        } catch (const std::exception& e) {
            res.pass = false;
            res.detail = std::string("exception: ") + e.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (res.pass ? "PASS " : "FAIL ") << name << " (" << static_cast<long>(ms) << " ms)";
        if (!res.pass) std::cout << ": " << res.detail;
        std::cout << "\n";
        if (!res.pass) ++failed;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
