#include "triality/lefschetz.hpp"

#include "triality/liealg.hpp"
#include "triality/linalg.hpp"
#include "triality/s3.hpp"

#include <string>

namespace triality {

TrigonalData::TrigonalData(std::int64_t genus, std::int64_t double_points) : g(genus), delta(double_points) {
    if (g < 3) throw std::invalid_argument("genus must be at least 3, got " + std::to_string(g));
    if (delta < 0 || delta > g + 2)
        throw std::invalid_argument("delta must lie in [0, g+2] = [0, " + std::to_string(g + 2) + "], got " +
                                    std::to_string(delta));
}

Eisenstein holo_lefschetz(const std::vector<FixedPointDatum>& data, const Eisenstein& h0_trace) {
    Eisenstein sum;
    for (const auto& d : data) {
        if (d.tangent_eigenvalue == Eisenstein(1)) throw std::domain_error("fixed point is not isolated: dγ = 1");
        sum += Eisenstein(Rational(static_cast<long>(d.multiplicity))) * d.fiber_trace / (Eisenstein(1) - d.tangent_eigenvalue);
    }
    return h0_trace - sum;
}

int BranchType::stabilizer_order() const {
    int n = 0;
    for (int x : stabilizer) n += x;
    return n;
}

std::int64_t fixed_point_count(const CharTable& table, std::size_t k, const std::vector<BranchType>& branching) {
    const std::int64_t order = table.order();
    const std::int64_t centralizer = order / table.classes.at(k).size;
    std::int64_t total = 0;
    for (const auto& b : branching) {
        const std::int64_t num = centralizer * b.stabilizer.at(k);
        if (num % b.stabilizer_order() != 0) throw std::logic_error("non-integral fixed-point count");
        total += b.count * (num / b.stabilizer_order());
    }
    return total;
}

std::int64_t galois_cover_euler(const CharTable& table, const std::vector<BranchType>& branching) {
    const std::int64_t order = table.order();
    std::int64_t chi = 2 * order;
    for (const auto& b : branching) chi -= b.count * (order - order / b.stabilizer_order());
    return chi;
}

std::vector<BranchType> galois_closure_branching(const TrigonalData& t) {
    // S3 classes 1, σ, τ.
    return {{t.simple_points(), {1, 1, 0}}, {t.delta, {1, 0, 2}}};
}

std::vector<BranchType> recillas_closure_branching(const TrigonalData& t) {
    // S4 classes 1, σ, τ, φ, σσ′.
    return {{t.simple_points(), {1, 1, 0, 0, 0}}, {t.delta, {1, 0, 2, 0, 0}}};
}

namespace {

// Element order by class label of s3_table / s4_table.
int class_element_order(const CharTable& table, std::size_t k) {
    const std::string& label = table.classes.at(k).label;
    if (label == "1") return 1;
    if (label == "σ" || label == "σσ′") return 2;
    if (label == "τ") return 3;
    if (label == "φ") return 4;
    throw std::invalid_argument("unknown class label " + label);
}

}  // namespace

std::vector<FixedPointDatum> fixed_point_data(const CharTable& table, std::size_t k,
                                              const std::vector<BranchType>& branching, const Eisenstein& fiber) {
    const std::int64_t n = fixed_point_count(table, k, branching);
    if (n == 0) return {};
    switch (class_element_order(table, k)) {
        case 2: return {{Eisenstein(-1), fiber, n}};
        case 3:
            if (n % 2 != 0) throw std::logic_error("order-3 fixed points do not pair up");
            return {{Eisenstein::omega(), fiber, n / 2}, {Eisenstein::omega_squared(), fiber, n / 2}};
    }
    throw std::domain_error("fixed points with tangent eigenvalue outside ℚ(ω)");
}

namespace {

std::int64_t galois_closure_genus(const TrigonalData& t) { return 3 * t.g + 1 - t.delta; }
std::int64_t recillas_genus(const TrigonalData& t) { return 12 * t.g + 1 - 4 * t.delta; }

std::int64_t checked_integer(const Eisenstein& x, const char* what) {
    if (!x.is_rational() || !x.real_part().is_integer())
        throw std::logic_error(std::string(what) + " is not a rational integer: " + x.to_string());
    return x.real_part().to_int64();
}

}  // namespace

ClassFunction adjoint_bundle_character(const TrigonalData& t) {
    if (t.cyclic()) throw CyclicCase("δ = g+2: 𝒢(C) is disconnected, use cyclic_moduli_dim");
    const CharTable& s3 = s3_table();
    const auto branching = galois_closure_branching(t);
    // Riemann–Roch for the degree-0 bundle ad F of rank 28 with H⁰ = 0.
    const std::int64_t genus = (2 - galois_cover_euler(s3, branching)) / 2;
    const Eisenstein dim(Rational(28 * (genus - 1)));
    const Eisenstein sigma = holo_lefschetz(fixed_point_data(s3, 1, branching, adjoint_trace(S3Element::sigma())), 0);
    const Eisenstein tau = holo_lefschetz(fixed_point_data(s3, 2, branching, adjoint_trace(S3Element::tau())), 0);
    checked_integer(sigma, "trace of σ");
    checked_integer(tau, "trace of τ");
    return ClassFunction(s3, {dim, sigma, tau});
}

MultiplicityTriple galois_moduli_character(const TrigonalData& t) {
    const auto m = decompose(adjoint_bundle_character(t));
    return {m[0], m[1], m[2]};
}

CyclicMultiplicities cyclic_moduli_dim(std::int64_t g) {
    const TrigonalData t(g, g + 2);
    // C itself is the ℤ/3 cover; τ fixes the g+2 total ramification points with dτ = ω.
    const Eisenstein fiber = adjoint_trace(S3Element::tau());
    CyclicMultiplicities out;
    out.trace_tau = holo_lefschetz({{Eisenstein::omega(), fiber, t.delta}}, 0);
    out.trace_tau_squared = holo_lefschetz({{Eisenstein::omega_squared(), fiber, t.delta}}, 0);
    out.total = Rational(28 * (g - 1));

    const Eisenstein w = Eisenstein::omega(), w2 = Eisenstein::omega_squared();
    const auto x = solve_linear<Eisenstein>({{1, 1, 1}, {1, w, w2}, {1, w2, w}},
                                            {Eisenstein(out.total), out.trace_tau, out.trace_tau_squared});
    for (const auto& v : x)
        if (!v.is_rational()) throw std::logic_error("cyclic multiplicity outside ℚ: " + v.to_string());
    out.a = x[0].real_part();
    out.b = x[1].real_part();
    out.c = x[2].real_part();
    return out;
}

ClassFunction structure_sheaf_class_function(const TrigonalData& t) {
    if (t.cyclic()) throw CyclicCase("δ = g+2: R_η is not defined by this construction");
    const CharTable& s4 = s4_table();
    const auto branching = recillas_closure_branching(t);
    const std::int64_t genus = (2 - galois_cover_euler(s4, branching)) / 2;
    std::vector<Eisenstein> values{Eisenstein(Rational(genus))};
    for (std::size_t k = 1; k < s4.classes.size(); ++k) {
        Eisenstein tr = holo_lefschetz(fixed_point_data(s4, k, branching, 1), 1);
        checked_integer(tr, "trace on H¹(𝒪)");
        values.push_back(tr);
    }
    return ClassFunction(s4, values);
}

std::array<std::int64_t, 5> structure_sheaf_character_S4(const TrigonalData& t) {
    const auto m = decompose(structure_sheaf_class_function(t));
    return {m[0], m[1], m[2], m[3], m[4]};
}

HyperellipticTerms hyperelliptic_terms(std::int64_t g) { return {(g - 3) * (g + 5), (g - 3) * (g - 2)}; }

std::int64_t hyperelliptic_moduli_dim(std::int64_t g) {
    if (g < 4) throw std::invalid_argument("hyperelliptic count needs g ≥ 4, got " + std::to_string(g));
    const auto terms = hyperelliptic_terms(g);
    const std::int64_t d = terms.total - terms.subtract;
    if (d != 7 * (g - 3)) throw std::logic_error("hyperelliptic factorizations disagree");
    return d;
}

bool GenusReport::ok() const {
    for (const auto& c : covers)
        if (!c.consistent()) return false;
    return fix_sigma_galois_closure == data.simple_points() && fix_sigma_recillas == 2 * data.simple_points();
}

GenusReport genus_suite(const TrigonalData& t) {
    const std::int64_t simple = t.simple_points();
    GenusReport r{t, t.cyclic(), t.cyclic() ? 2 : 1, {}, 0, 0};
    // Ramification contribution per branch point (sheets minus points above it).
    r.covers.push_back({"C", 3, 6 - simple * 1 - t.delta * 2, t.g});
    r.covers.push_back({"H", 2, 4 - simple * 1, t.g + 1 - t.delta});
    r.covers.push_back({"G(C)", 6, 12 - simple * 3 - t.delta * 4, galois_closure_genus(t)});
    r.covers.push_back({"G(R)", 24, 48 - simple * 12 - t.delta * 16, recillas_genus(t)});
    r.fix_sigma_galois_closure = fixed_point_count(s3_table(), 1, galois_closure_branching(t));
    r.fix_sigma_recillas = fixed_point_count(s4_table(), 1, recillas_closure_branching(t));
    return r;
}

bool recillas_unramified_check(const TrigonalData& t, std::int64_t genus) {
    return 2 - 2 * genus == 4 * (2 - 2 * galois_closure_genus(t));
}

bool recillas_unramified_check(const TrigonalData& t) { return recillas_unramified_check(t, recillas_genus(t)); }

}  // namespace triality
