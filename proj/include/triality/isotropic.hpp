#pragma once

// Isotropic subspaces of the three 6-dimensional quadrics and the α/β
// correspondences between them.
//
// For an isotropic x in summand k, m_x denotes Clifford multiplication by x.
//   A_x = ker(m_x : pred(k) → succ(k))  ⊂ pred(k)
//   B_x = ker(m_x : succ(k) → pred(k))  ⊂ succ(k)
// and for an isotropic subspace U ⊂ summand k, A_U and B_U are the common
// kernels over a basis of U. For s ∈ S⁺ this puts A_s in V, for t ∈ S⁻ it puts
// B_t in V.
//
// On a maximal plane one kernel is zero. There the other plane of the pair
// is used instead: A_U = B_x when U = A_x, and B_U = A_x when U = B_x.

#include "triality/clifford.hpp"
#include "triality/linalg.hpp"
#include "triality/s3.hpp"

#include <cstdint>
#include <utility>

namespace triality {

class IsotropicVector {
public:
    /// Throws std::invalid_argument if v is zero or quad(v) ≠ 0.
    explicit IsotropicVector(BlockVector v);

    const BlockVector& vec() const { return vec_; }
    RepTag tag() const { return vec_.tag(); }

private:
    BlockVector vec_;
};

class IsotropicSubspace {
public:
    /// Throws std::invalid_argument unless polar vanishes on all basis pairs and dim ≤ 4.
    IsotropicSubspace(RepTag tag, Subspace space);

    static IsotropicSubspace span_of(const IsotropicVector& v);
    static IsotropicSubspace span_of(RepTag tag, const std::vector<BlockVector>& vectors);

    RepTag tag() const { return tag_; }
    const Subspace& space() const { return space_; }
    std::size_t dim() const { return space_.dim(); }
    std::vector<BlockVector> basis() const;
    bool contains(const BlockVector& x) const;

    friend bool operator==(const IsotropicSubspace&, const IsotropicSubspace&) = default;

private:
    RepTag tag_;
    Subspace space_;
};

bool is_totally_isotropic(RepTag tag, const Subspace& space);

IsotropicSubspace a_space(const IsotropicVector& x);
IsotropicSubspace b_space(const IsotropicVector& x);
/// Image characterisations: A_x = im(m_x : succ(k) → pred(k)), B_x = im(m_x : pred(k) → succ(k)).
Subspace a_space_image(const IsotropicVector& x);
Subspace b_space_image(const IsotropicVector& x);

IsotropicSubspace a_of(const IsotropicSubspace& u);
IsotropicSubspace b_of(const IsotropicSubspace& u);
/// The plain common kernels, without the maximal-plane rule.
IsotropicSubspace a_kernel_of(const IsotropicSubspace& u);
IsotropicSubspace b_kernel_of(const IsotropicSubspace& u);
/// (A_U, B_U); throws std::invalid_argument if dim U is 0.
std::pair<IsotropicSubspace, IsotropicSubspace> ab_of_subspace(const IsotropicSubspace& u);

/// Deterministic in `seed`: first block a has entries in [−9, 9], second block
/// is [[det a, 0], [r, 1]] so that det b = det a.
IsotropicVector random_isotropic(RepTag tag, std::uint64_t seed);
IsotropicVector random_isotropic(RepTag tag, Rng& rng);

/// An isotropic s′ in the same summand with polar(s, s′) = 0 and s′ not
/// proportional to s. Uses the transposed sampling family
/// [[det a′, r′], [0, 1]] and solves the single linear condition for r′.
IsotropicVector random_orthogonal_isotropic(const IsotropicVector& s, Rng& rng);
/// An isotropic s′ with polar(s, s′) ≠ 0.
IsotropicVector random_nonorthogonal_isotropic(const IsotropicVector& s, Rng& rng);

/// Random dim-d subspace (1 ≤ d ≤ 4) of a random maximal isotropic subspace of `tag`.
IsotropicSubspace random_isotropic_subspace(RepTag tag, std::size_t dim, Rng& rng);

/// ρ(g) applied to a subspace; lands in summand g(tag).
IsotropicSubspace transform(const S3Element& g, const IsotropicSubspace& u);

/// Matrix of μ: U ⊗ U → third summand, u ⊗ u′ ↦ u · ρ(g)u′, one row per
/// basis pair (i, j) in row-major order.
Matrix mu_matrix(const IsotropicSubspace& u, const S3Element& g);
/// rank of mu_matrix. Throws std::invalid_argument unless g is an involution moving tag(u).
std::size_t mu_rank(const IsotropicSubspace& u, const S3Element& g);
/// μ(u_i ⊗ u_j + u_j ⊗ u_i) = 0 for all basis pairs.
bool mu_symmetric_part_vanishes(const IsotropicSubspace& u, const S3Element& g);

}  // namespace triality
