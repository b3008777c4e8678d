#include "triality/concordance.hpp"

#include "triality/checks.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace triality {

const std::vector<ConcordanceEntry>& concordance_entries() {
    static const std::vector<ConcordanceEntry> entries{
        {"spinor-pairing", 10, "Spinors as exterior algebras: the pairing r", "symmetric precisely when n ≡ 0 (4)"},
        {"center-triples", 20, "Spin(8) as triples (a, b, c) with a(u)b(v) = c(uv); its centre", "(1,−1,−1), (−1,−1,1), (−1,1,−1)"},
        {"rho-homomorphism", 30, "Triality splitting ρ: S3 → Aut(V ⊕ S⁺ ⊕ S⁻)", "determines an S3-action"},
        {"triality-equivariance", 40, "Outer automorphisms preserve the trilinear form", "preserves the cubic form"},
        {"adjugate-identity", 50, "2×2 matrix model: adjugate", "m · adj m = det m · 1"},
        {"trilinear-symmetry", 60, "2×2 matrix model: Clifford multiplications and the trilinear form", "q⁻(v·s, t) = q⁺(v·t, s) = q(s·t, v)"},
        {"rankdrop-det", 70, "Clifford multiplication by an isotropic vector: rank drop", "the rank drops by 4"},
        {"octonion-composition", 80, "Split octonions by Cayley–Dickson doubling", "(a,b)(c,d) = (ac + d̄b, da + bc̄)"},
        {"zero-norm", 85, "Clifford multiplication on a small isotropic subspace", "if dim U = 2 then rank μ ≤ 1"},
        {"isotropic-sampling", 90, "Points of the quadrics Q, Q⁺, Q⁻", "Given vectors s ∈ S⁺ and t ∈ S⁻"},
        {"ab-spaces", 100, "Isotropic subspaces A_s and B_t", "A_s = ker{V → S⁻} = Im{S⁻ → V}"},
        {"prod-zero", 110, "Incidence of A_s and B_t", "s·t = 0 ⇔ s ∈ A_t ⇔ t ∈ B_s ⇔ dim A_s ∩ B_t = 3"},
        {"polarity", 120, "Polarity on a spinor quadric", "2 if ⟨s,s′⟩ = 0"},
        {"ab-sequences", 130, "Exact sequences through A_s and B_s", "A_s → V → B_s"},
        {"ab-subspace-dims", 140, "A_U and B_U for isotropic U", "If dim U = 1,2,3 then dim A_U = dim B_U = 4,2,1"},
        {"ab1", 150, "Iterating A and B", "A_{B_U} = B_{A_U} = U"},
        {"ab2", 160, "Vanishing of Clifford multiplication on U ⊗ R", "Clifford multiplication vanishes on U⊗R"},
        {"ab3", 170, "Equivariance of A_U under S3", "if sgn g = −1"},
        {"root-system", 180, "Root system of so(8)", "The 24 roots of g are ±e_i ± e_j"},
        {"cartan-action", 190, "S3 acting on the Cartan subalgebra", "σ acts on h by e₄ ↔ −e₄"},
        {"positive-root-array", 200, "Positive roots arranged in a 3×4 array", "the first three columns ... are cyclically permuted by τ"},
        {"adjoint-decomposition", 210, "Eigenspace decomposition of so(8)", "so(8) = 21⁺ ⊕ 7⁻ under σ; 14 ⊕ 7^ω ⊕ 7^ω² under τ"},
        {"adjoint-trace", 220, "Adjoint traces of triality", "the trace of σ ... is 14"},
        {"spin-sum", 230, "Half-spin representations of a direct sum", "S⁺ = S⁺⊗S⁺ ⊕ S⁻⊗S⁻"},
        {"galois-structures", 240, "Counting Galois structures on a bundle", "has cardinality 2^{k−1}"},
        {"hyperelliptic-dimension", 250, "Hyperelliptic curves: dimension count", "= 7(g−3)"},
        {"genus-bookkeeping", 260, "Galois closure of a trigonal curve: genera and branching", "genus 3g+1−δ; cyclic iff δ = g+2"},
        {"character-tables", 270, "Character tables of S3 and S4", "three irreducible representations"},
        {"lefschetz-traces", 280, "Holomorphic Lefschetz formula on 𝒢(C)", "trace σ = −7(2g+4−2δ)"},
        {"moduli-character", 290, "S3-character of the tangent space to the moduli of Galois bundles", "a = 7g−14, b = 21g+14−14δ, c = 28g−7δ"},
        {"decompose", 300, "Decomposing a class function by solving the character equations", "Solving these equations yields"},
        {"cyclic-dimension", 310, "Cyclic trigonal curves", "Adding the three equations gives again a = 7g−14"},
        {"recillas-unramified", 320, "Recillas tower: 𝒢(R_η) → 𝒢(C)", "is unramified"},
        {"hodge-decomposition", 330, "S4-decomposition of H¹(𝒢(R_η), 𝒪)", "(a,b,c,d,e) = (0, g+1−δ, g−1, 2g+1−δ, g)"},
        {"s4-action", 340, "S4 permuting coordinates of the ρ-isotypic lattice", "with S4 permuting coordinates"},
        {"klein-closure", 350, "Klein four-group in S4", "generated by the conjugates of σσ′ = φ²"},
        {"recillas-identities", 360, "Recillas isomorphism on lattice vectors", "(1+φ²)l = n and (1+τ+τ²)n = 2l"},
        {"eight-vectors", 370, "Trigonal nonabelian Schottky: comparing the two splittings", "exactly the same eight vectors"},
    };
    return entries;
}

const ConcordanceEntry& concordance_for(const std::string& check_name) {
    for (const auto& e : concordance_entries())
        if (e.check_name == check_name) return e;
    throw std::out_of_range("no concordance entry for " + check_name);
}

ConcordanceDiff concordance_diff() {
    std::multiset<std::string> registered, listed;
    for (const auto& c : check_registry()) registered.insert(c.name);
    for (const auto& e : concordance_entries()) listed.insert(e.check_name);
    ConcordanceDiff d;
    for (const auto& n : registered)
        if (listed.count(n) != 1) d.missing_entry.push_back(n);
    for (const auto& n : listed)
        if (registered.count(n) != 1) d.orphan_entry.push_back(n);
    d.missing_entry.erase(std::unique(d.missing_entry.begin(), d.missing_entry.end()), d.missing_entry.end());
    d.orphan_entry.erase(std::unique(d.orphan_entry.begin(), d.orphan_entry.end()), d.orphan_entry.end());
    return d;
}

namespace {

const char* const kConventions = R"(## Conventions

- **Quadratic forms.** On V, S⁺ and S⁻ alike, q(a, b) = det a − det b, with polar form ½tr(a·adj a′) − ½tr(b·adj b′). No extra sign on either spinor form was needed: with the maps below the three evaluations of the trilinear form agree identically.
- **Clifford multiplications.**
  - V ⊗ S⁺ → S⁻: (a, b)(x, y) = (adj a·adj x + adj y·b, b·x + y·adj a)
  - V ⊗ S⁻ → S⁺: (a, b)(z, w) = (adj z·adj a − adj b·w, w·a − b·adj z)
  - S⁺ ⊗ S⁻ → V: (x, y)(z, w) = (adj x·adj z − adj w·y, w·adj x − y·z)
- **Units.** v₀ = s₀ = t₀ = (1, 0), so v₀·s₀ = t₀ and the trilinear form takes the value 1 on (v₀, s₀, t₀).
- **S3 labels.** Summands V, S⁺, S⁻ are 1, 2, 3; σ = (23), τ = (123) so τ moves V → S⁺ → S⁻. Then στ swaps V and S⁻ and is built from s₀, and στ² swaps V and S⁺ and is built from t₀. Products compose right to left.
- **Involutions.** The involution fixing a summand with unit e acts there by x ↦ 2⟨x, e⟩e − x (fixing e, negating e⊥) and swaps the other two summands by Clifford multiplication with e. The plain reflection x ↦ x − 2⟨x, e⟩e does not give a homomorphism S3 → O(24).
- **A and B.** For isotropic x in summand k, A_x ⊂ pred(k) and B_x ⊂ succ(k) are the kernels of multiplication by x (cyclic order V → S⁺ → S⁻ → V).
- **Fixed root spaces.** A root space fixed by a diagram automorphism contributes eigenvalue +1. This gives 21⁺ ⊕ 7⁻ for σ and 14 ⊕ 7^ω ⊕ 7^ω² for τ.
- **Dynkin labels.** Outer nodes f₁ = e₁ − e₂, f₂ = e₃ − e₄, f₃ = e₃ + e₄ correspond to V, S⁺, S⁻.
- **Cyclic case.** Only a = 7g − 14 has a closed form. The ω- and ω²-multiplicities come out as b = 28(g−1)/3 and c = (35g−14)/3, which are integers only for g ≡ 1 mod 3. They are reported as rationals.
- **Lattice scaling.** l = ½(3, −1, −1, −1) throughout, so φl = ½(−1, −1, 3, −1) and l + φl = (1, −1, 1, −1). The eight vectors of V are {±(1,1,−1,−1) twice, ±(2,−2,0,0), ±(0,0,2,−2)} with this scaling.
- **Twists.** The 2-torsion twists ζ′, τζ′, τ²ζ′ are carried as labels and must match literally between the two splittings.
)";

}  // namespace

std::string emit_concordance() {
    std::vector<std::pair<const ConcordanceEntry*, const CheckSpec*>> rows;
    for (const auto& e : concordance_entries()) {
        const CheckSpec* spec = nullptr;
        for (const auto& c : check_registry())
            if (c.name == e.check_name) spec = &c;
        if (!spec) throw std::logic_error("concordance entry without a check: " + e.check_name);
        rows.emplace_back(&e, spec);
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first->rank < b.first->rank; });

    std::ostringstream os;
    os << "# Concordance\n\n"
       << "Generated by `triality_concordance` from the check registry. Do not edit by hand.\n\n"
       << "| Check | Topic | Statement | Module | Operation |\n"
       << "|---|---|---|---|---|\n";
    for (const auto& [e, spec] : rows)
        os << "| `" << e->check_name << "` | " << e->location << " | " << e->quote_anchor << " | " << spec->module
           << " | `" << spec->operation << "` |\n";
    os << "\n" << kConventions;
    return os.str();
}

}  // namespace triality
