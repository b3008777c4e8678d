#pragma once

// Holomorphic Lefschetz traces and genus bookkeeping for trigonal curves
// C → ℙ¹ of genus g whose branch divisor has δ double points.
//
// Covers of ℙ¹ used here:
//   C        degree 3,  genus g
//   H        degree 2,  genus g+1−δ   (quotient of 𝒢(C) by A3)
//   𝒢(C)     degree 6,  genus 3g+1−δ  (Galois closure, group S3)
//   𝒢(R_η)   degree 24, genus 12g+1−4δ (Galois closure of the tetragonal R_η, group S4)
// Simple branch points have a transposition as monodromy, double points a 3-cycle.

#include "triality/exact.hpp"
#include "triality/reps.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace triality {

struct FixedPointDatum {
    Eisenstein tangent_eigenvalue;  // dγ at the fixed point
    Eisenstein fiber_trace;         // trace of γ on the fibre of the bundle
    std::int64_t multiplicity = 1;  // number of fixed points sharing this datum
};

struct TrigonalData {
    std::int64_t g = 3;
    std::int64_t delta = 0;

    /// Throws std::invalid_argument unless g ≥ 3 and 0 ≤ δ ≤ g+2.
    TrigonalData(std::int64_t genus, std::int64_t double_points);

    std::int64_t branch_degree() const { return 2 * g + 4; }
    std::int64_t simple_points() const { return 2 * g + 4 - 2 * delta; }
    bool cyclic() const { return delta == g + 2; }
};

/// Trace on H¹ of a curve: h0_trace − Σ multiplicity · fiber_trace / (1 − tangent_eigenvalue).
/// Throws std::domain_error on a tangent eigenvalue equal to 1.
Eisenstein holo_lefschetz(const std::vector<FixedPointDatum>& data, const Eisenstein& h0_trace);

/// Branching of a Galois cover of ℙ¹ over one kind of branch point.
struct BranchType {
    std::int64_t count = 0;            // number of such branch points
    std::vector<int> stabilizer;       // |stabilizer ∩ class k| for each class of the table
    int stabilizer_order() const;
};

/// Fixed points of an element of class k on a connected Galois cover:
/// Σ count · |C_G(γ)| · |H ∩ class k| / |H|.
std::int64_t fixed_point_count(const CharTable& table, std::size_t k, const std::vector<BranchType>& branching);
/// χ = 2|G| − Σ count · (|G| − |G|/|H|).
std::int64_t galois_cover_euler(const CharTable& table, const std::vector<BranchType>& branching);

/// Branching of 𝒢(C) over ℙ¹ in the S3 table, and of 𝒢(R_η) in the S4 table.
std::vector<BranchType> galois_closure_branching(const TrigonalData& t);
std::vector<BranchType> recillas_closure_branching(const TrigonalData& t);

/// Fixed-point data of the element of class k, with fibre trace `fiber` at
/// every fixed point. Elements of order 3 split their fixed points evenly
/// between tangent eigenvalues ω and ω².
std::vector<FixedPointDatum> fixed_point_data(const CharTable& table, std::size_t k,
                                              const std::vector<BranchType>& branching, const Eisenstein& fiber);

/// Character of S3 on H¹(𝒢(C), ad F), assembled from holomorphic Lefschetz.
ClassFunction adjoint_bundle_character(const TrigonalData& t);

/// Raised by the S3 computations when δ = g+2.
struct CyclicCase : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MultiplicityTriple {
    std::int64_t a = 0, b = 0, c = 0;
    friend bool operator==(const MultiplicityTriple&, const MultiplicityTriple&) = default;
};

/// Multiplicities of 1, ε, ρ in H¹(𝒢(C), ad F); a is dim 𝒩_C.
MultiplicityTriple galois_moduli_character(const TrigonalData& t);

struct CyclicMultiplicities {
    Eisenstein trace_tau, trace_tau_squared;
    Rational total;
    Rational a, b, c;  // eigenvalues 1, ω, ω²
};

/// Cyclic case: solves a + b + c = 28(g−1), a + bω + cω² = tr τ, a + bω² + cω = tr τ² over ℚ(ω).
CyclicMultiplicities cyclic_moduli_dim(std::int64_t g);

/// Multiplicities of 1, ε, ρ, ρ⊗ε, 2 in H¹(𝒢(R_η), 𝒪).
std::array<std::int64_t, 5> structure_sheaf_character_S4(const TrigonalData& t);
ClassFunction structure_sheaf_class_function(const TrigonalData& t);

struct HyperellipticTerms {
    std::int64_t total;     // (g−3)(g+5)
    std::int64_t subtract;  // (g−3)(g−2)
};
HyperellipticTerms hyperelliptic_terms(std::int64_t g);
/// (g−3)(g+5) − (g−3)(g−2), checked against 7(g−3). Throws for g < 4.
std::int64_t hyperelliptic_moduli_dim(std::int64_t g);

struct CoverCheck {
    const char* name;
    std::int64_t degree;
    std::int64_t euler;          // from Riemann–Hurwitz
    std::int64_t closed_genus;   // closed formula
    bool consistent() const { return euler == 2 - 2 * closed_genus; }
};

struct GenusReport {
    TrigonalData data;
    bool cyclic;
    int galois_closure_components;  // 2 in the cyclic case
    std::vector<CoverCheck> covers;  // C, H, 𝒢(C), 𝒢(R_η)
    std::int64_t fix_sigma_galois_closure;
    std::int64_t fix_sigma_recillas;
    bool ok() const;
};

GenusReport genus_suite(const TrigonalData& t);

/// 2 − 2·genus(𝒢(R_η)) = 4 · (2 − 2·genus(𝒢(C))).
bool recillas_unramified_check(const TrigonalData& t);
/// Same check with a caller-supplied genus for 𝒢(R_η).
bool recillas_unramified_check(const TrigonalData& t, std::int64_t recillas_genus);

}  // namespace triality
