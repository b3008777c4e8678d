#pragma once

// Character tables of S3 and S4 and decomposition of class functions.

#include "triality/exact.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace triality {

struct ConjugacyClass {
    std::string label;
    int size = 0;
};

struct Irreducible {
    std::string name;
    std::vector<Eisenstein> values;  // one per class
};

struct CharTable {
    std::string group;
    std::vector<ConjugacyClass> classes;  // classes[0] is the identity
    std::vector<Irreducible> irreducibles;

    int order() const;
    /// Σ sizes · χ_i · conj(χ_j) = |G| δ_ij for all pairs.
    bool orthogonal() const;
    std::size_t index_of(const std::string& irreducible) const;
};

/// Classes 1, σ, τ (sizes 1, 3, 2); irreducibles 1, ε, ρ.
const CharTable& s3_table();
/// Classes 1, σ, τ, φ, σσ′ (sizes 1, 6, 8, 6, 3); irreducibles 1, ε, ρ, ρ⊗ε, 2.
const CharTable& s4_table();

struct ClassFunction {
    const CharTable* table = nullptr;
    std::vector<Eisenstein> values;

    /// Throws std::invalid_argument if the value count does not match the table.
    ClassFunction(const CharTable& t, std::vector<Eisenstein> v);

    ClassFunction& operator+=(const ClassFunction& o);
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator*(const Eisenstein& k, ClassFunction f);
};

ClassFunction character_of(const CharTable& t, std::size_t irreducible);

/// Multiplicities are not nonnegative integers.
struct NotGenuineCharacter : std::domain_error {
    using std::domain_error::domain_error;
};
/// The linear solve and the inner-product formula disagree, or the table is singular.
struct InconsistentSystem : std::logic_error {
    using std::logic_error::logic_error;
};

/// Solves Σ m_i χ_i = cf exactly over ℚ(ω).
std::vector<Eisenstein> solve_multiplicities(const ClassFunction& cf);
/// m_i = (1/|G|) Σ sizes · cf · conj(χ_i).
std::vector<Eisenstein> inner_product_multiplicities(const ClassFunction& cf);

/// Runs both paths, requires agreement, then requires nonnegative integers.
std::vector<std::int64_t> decompose(const ClassFunction& cf);

/// Number of Galois structures on a bundle whose automorphism group has k
/// factors of μ₂: 1 for k = 1, otherwise 2^{k−1}. Throws for k = 0.
std::uint64_t galois_structure_count(unsigned k);

}  // namespace triality
