#pragma once

// Block model of the three 8-dimensional representations of Spin(8):
//
//   V  = Hom(A,B) ⊕ Hom(C,D)
//   S⁺ = Hom(B,C) ⊕ Hom(A,D)
//   S⁻ = Hom(C,A) ⊕ Hom(B,D)
//
// with A, B, C, D oriented copies of ℚ², so each summand is a pair of 2×2
// matrices and adjugation gives Hom(X,Y) ≅ Hom(Y,X). Every summand carries the
// quadratic form (a, b) ↦ det a − det b.

#include "triality/exact.hpp"
#include "triality/linalg.hpp"
#include "triality/random.hpp"
#include "triality/s3.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

namespace triality {

enum class RepTag { V = 0, Splus = 1, Sminus = 2 };

inline int index_of(RepTag t) { return static_cast<int>(t); }
RepTag tag_from_index(int i);
/// Cyclic order V → S⁺ → S⁻ → V.
RepTag successor(RepTag t);
RepTag predecessor(RepTag t);
/// The summand different from both arguments; throws std::invalid_argument if a == b.
RepTag third(RepTag a, RepTag b);
std::string to_string(RepTag t);
RepTag parse_tag(const std::string& name);

/// 2×2 matrix [[p, q], [r, s]].
struct Block2 {
    std::array<Rational, 4> e{};

    static Block2 identity() { return {{1, 0, 0, 1}}; }
    static Block2 zero() { return {}; }

    Rational det() const { return e[0] * e[3] - e[1] * e[2]; }
    Rational trace() const { return e[0] + e[3]; }

    friend Block2 operator*(const Block2& x, const Block2& y);
    friend Block2 operator+(const Block2& x, const Block2& y);
    friend Block2 operator-(const Block2& x, const Block2& y);
    friend Block2 operator-(const Block2& x);
    friend Block2 operator*(const Rational& s, const Block2& x);
    friend bool operator==(const Block2&, const Block2&) = default;
};

/// Transpose of the matrix of signed cofactors: m·adjugate(m) = det(m)·1.
Block2 adjugate(const Block2& m);

class BlockVector {
public:
    BlockVector() = default;
    BlockVector(RepTag tag, Block2 first, Block2 second)
        : tag_(tag), first_(std::move(first)), second_(std::move(second)) {}

    static BlockVector zero(RepTag tag) { return {tag, Block2::zero(), Block2::zero()}; }
    /// (identity, 0): the units v₀, s₀, t₀.
    static BlockVector unit(RepTag tag) { return {tag, Block2::identity(), Block2::zero()}; }
    /// Inverse of coords(): entries of `first` row-major, then `second`.
    static BlockVector from_coords(RepTag tag, std::span<const Rational> coords);
    static BlockVector basis(RepTag tag, std::size_t index);

    RepTag tag() const { return tag_; }
    const Block2& first() const { return first_; }
    const Block2& second() const { return second_; }
    Vec coords() const;
    bool is_zero() const { return first_ == Block2::zero() && second_ == Block2::zero(); }

    BlockVector operator+(const BlockVector& o) const;
    BlockVector operator-(const BlockVector& o) const;
    BlockVector operator-() const { return {tag_, -first_, -second_}; }
    friend BlockVector operator*(const Rational& s, const BlockVector& x) {
        return {x.tag_, s * x.first_, s * x.second_};
    }

    friend bool operator==(const BlockVector&, const BlockVector&) = default;

private:
    RepTag tag_ = RepTag::V;
    Block2 first_;
    Block2 second_;
};

std::ostream& operator<<(std::ostream& os, const BlockVector& x);

/// Element of V ⊕ S⁺ ⊕ S⁻; coordinates are the 24 matrix units in that order.
struct ChevalleyElement {
    BlockVector v = BlockVector::zero(RepTag::V);
    BlockVector s = BlockVector::zero(RepTag::Splus);
    BlockVector t = BlockVector::zero(RepTag::Sminus);

    static ChevalleyElement embed(const BlockVector& x);
    static ChevalleyElement from_coords(std::span<const Rational> coords);
    Vec coords() const;
    const BlockVector& component(RepTag tag) const;
    friend bool operator==(const ChevalleyElement&, const ChevalleyElement&) = default;
};

/// det(first) − det(second).
Rational quad(const BlockVector& x);
/// Symmetric bilinear form with polar(x, x) = quad(x): ½tr(a·adj a′) − ½tr(b·adj b′).
Rational polar(const BlockVector& x, const BlockVector& y);
/// 8×8 Gram matrix of `polar` in the standard coordinates (identical on all summands).
const Matrix& gram_matrix();

/// Clifford multiplication between two different summands, landing in the third.
/// It is symmetric: cliff_mul(x, y) == cliff_mul(y, x).
BlockVector cliff_mul(const BlockVector& x, const BlockVector& y);

/// The three values polar(v·s, t), polar(v·t, s), polar(s·t, v).
std::array<Rational, 3> trilinear_evaluations(const BlockVector& v, const BlockVector& s, const BlockVector& t);
/// The common value of trilinear_evaluations; throws std::logic_error if they disagree.
Rational trilinear(const BlockVector& v, const BlockVector& s, const BlockVector& t);

/// Matrix of y ↦ x·y with y ranging over `domain` (≠ tag of x).
Matrix mult_map(const BlockVector& x, RepTag domain);
/// mult_map from the cyclic successor of tag(x); det = −quad(x)⁴.
Matrix mult_matrix(const BlockVector& x);

/// Split-octonion product on V: (a,b)(c,d) = (ac + adj(d)·b, da + b·adj(c)).
BlockVector oct_mul(const BlockVector& x, const BlockVector& y);
/// Octonion conjugation (a, b) ↦ (adj a, −b).
BlockVector oct_conj(const BlockVector& x);

/// Triality splitting ρ: S3 → O(V ⊕ S⁺ ⊕ S⁻) as a 24×24 matrix. The
/// involution fixing summand k acts on that summand by x ↦ 2⟨x,e⟩e − x and
/// swaps the other two by Clifford multiplication with e, where e is the unit
/// of summand k.
const Matrix& rho(const S3Element& u);
ChevalleyElement act(const S3Element& u, const ChevalleyElement& x);
/// ρ(u) restricted to the summand of x; the result lives in summand u(tag x).
BlockVector act(const S3Element& u, const BlockVector& x);
/// 24×24 Gram matrix of the direct-sum form.
const Matrix& chevalley_gram();

/// True iff a, b, c preserve quad and a(u)·b(v) = c(u·v) on all basis pairs.
bool is_triality_triple(const Matrix& a, const Matrix& b, const Matrix& c);

struct SpinorPairingReport {
    int n = 0;
    std::size_t dim_even = 0;
    std::size_t dim_odd = 0;
    bool vanishes_on_halves = false;     // r ≡ 0 on S⁺×S⁺ and on S⁻×S⁻
    bool cross_nondegenerate = false;    // S⁺ × S⁻ → ℚ is a perfect pairing
    bool halves_nondegenerate = false;   // restriction to each half is nondegenerate
    bool symmetric = false;              // r(s,t) = r(t,s) on each half
    bool antisymmetric = false;          // r(s,t) = −r(t,s) on each half
};

/// Builds S⁺ = Λ^even N, S⁻ = Λ^odd N with dim N = n and the pairing
/// r(s,t) = top-degree part of β(s) ∧ t, β the principal anti-involution.
SpinorPairingReport spinor_pairing(int n);

struct SpinSumReport {
    int m = 0;
    int n = 0;
    std::size_t dim_even = 0;     // dim Λ^even(N₁ ⊕ N₂)
    std::size_t dim_odd = 0;
    std::size_t even_split = 0;   // dim(Λ⁺⊗Λ⁺ ⊕ Λ⁻⊗Λ⁻)
    std::size_t odd_split = 0;    // dim(Λ⁺⊗Λ⁻ ⊕ Λ⁻⊗Λ⁺)
    bool bijection_ok = false;
};

/// Checks Λ(N₁ ⊕ N₂) ≅ Λ(N₁) ⊗ Λ(N₂) parity by parity through the explicit
/// monomial bijection e_I ∧ e_J ↔ e_I ⊗ e_J.
SpinSumReport spin_sum_dims(int m, int n);

/// Entries uniform in [lo, hi].
Block2 random_block(Rng& rng, long lo = -9, long hi = 9);
BlockVector random_block_vector(RepTag tag, Rng& rng, long lo = -9, long hi = 9);

}  // namespace triality
