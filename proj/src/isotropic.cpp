#include "triality/isotropic.hpp"

#include <optional>
#include <stdexcept>

namespace triality {

IsotropicVector::IsotropicVector(BlockVector v) : vec_(std::move(v)) {
    if (vec_.is_zero()) throw std::invalid_argument("isotropic vector must be nonzero");
    if (!quad(vec_).is_zero()) throw std::invalid_argument("vector is not isotropic: quad = " + quad(vec_).to_string());
}

bool is_totally_isotropic(RepTag tag, const Subspace& space) {
    const auto basis = space.basis_vectors();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j)
            if (!polar(BlockVector::from_coords(tag, basis[i]), BlockVector::from_coords(tag, basis[j])).is_zero())
                return false;
    return true;
}

IsotropicSubspace::IsotropicSubspace(RepTag tag, Subspace space) : tag_(tag), space_(std::move(space)) {
    if (space_.ambient_dim() != 8) throw std::invalid_argument("isotropic subspace must live in an 8-dimensional summand");
    if (space_.dim() > 4) throw std::invalid_argument("isotropic subspace has dimension > 4");
    if (!is_totally_isotropic(tag_, space_)) throw std::invalid_argument("subspace is not totally isotropic");
}

IsotropicSubspace IsotropicSubspace::span_of(const IsotropicVector& v) {
    return IsotropicSubspace(v.tag(), Subspace::span({v.vec().coords()}, 8));
}

IsotropicSubspace IsotropicSubspace::span_of(RepTag tag, const std::vector<BlockVector>& vectors) {
    std::vector<Vec> rows;
    for (const auto& v : vectors) {
        if (v.tag() != tag) throw std::invalid_argument("span_of: mixed summands");
        rows.push_back(v.coords());
    }
    return IsotropicSubspace(tag, Subspace::span(rows, 8));
}

std::vector<BlockVector> IsotropicSubspace::basis() const {
    std::vector<BlockVector> out;
    for (const auto& row : space_.basis_vectors()) out.push_back(BlockVector::from_coords(tag_, row));
    return out;
}

bool IsotropicSubspace::contains(const BlockVector& x) const {
    if (x.tag() != tag_) return false;
    Vec c = x.coords();
    return space_.contains(c);
}

namespace {

Subspace common_kernel(const std::vector<BlockVector>& multipliers, RepTag domain) {
    Matrix stacked(0, 8);
    for (const auto& u : multipliers) stacked = stacked.stacked(mult_map(u, domain));
    if (stacked.rows() == 0) return Subspace::full(8);
    return kernel(stacked);
}

}  // namespace

Subspace a_space_image(const IsotropicVector& x) { return image(mult_map(x.vec(), successor(x.tag()))); }

Subspace b_space_image(const IsotropicVector& x) { return image(mult_map(x.vec(), predecessor(x.tag()))); }

IsotropicSubspace a_space(const IsotropicVector& x) {
    const RepTag home = predecessor(x.tag());
    Subspace ker = kernel(mult_map(x.vec(), home));
    if (!(ker == a_space_image(x))) throw std::logic_error("A_x: kernel and image characterisations differ");
    return IsotropicSubspace(home, std::move(ker));
}

IsotropicSubspace b_space(const IsotropicVector& x) {
    const RepTag home = successor(x.tag());
    Subspace ker = kernel(mult_map(x.vec(), home));
    if (!(ker == b_space_image(x))) throw std::logic_error("B_x: kernel and image characterisations differ");
    return IsotropicSubspace(home, std::move(ker));
}

IsotropicSubspace a_kernel_of(const IsotropicSubspace& u) {
    if (u.dim() == 0) throw std::invalid_argument("A_U needs a nonzero subspace");
    const RepTag home = predecessor(u.tag());
    return IsotropicSubspace(home, common_kernel(u.basis(), home));
}

IsotropicSubspace b_kernel_of(const IsotropicSubspace& u) {
    if (u.dim() == 0) throw std::invalid_argument("B_U needs a nonzero subspace");
    const RepTag home = successor(u.tag());
    return IsotropicSubspace(home, common_kernel(u.basis(), home));
}

IsotropicSubspace a_of(const IsotropicSubspace& u) {
    IsotropicSubspace a = a_kernel_of(u);
    if (u.dim() == 4 && a.dim() == 0) {
        // U = A_x with ⟨x⟩ = B_U.
        return b_space(IsotropicVector(b_kernel_of(u).basis().front()));
    }
    return a;
}

IsotropicSubspace b_of(const IsotropicSubspace& u) {
    IsotropicSubspace b = b_kernel_of(u);
    if (u.dim() == 4 && b.dim() == 0) {
        // U = B_x with ⟨x⟩ = A_U.
        return a_space(IsotropicVector(a_kernel_of(u).basis().front()));
    }
    return b;
}

std::pair<IsotropicSubspace, IsotropicSubspace> ab_of_subspace(const IsotropicSubspace& u) {
    return {a_of(u), b_of(u)};
}

IsotropicVector random_isotropic(RepTag tag, Rng& rng) {
    Block2 a = random_block(rng);
    Rational r = random_rational(rng, -9, 9);
    Block2 b{{a.det(), 0, r, 1}};
    return IsotropicVector(BlockVector(tag, a, b));
}

IsotropicVector random_isotropic(RepTag tag, std::uint64_t seed) {
    Rng rng = make_rng(seed, 0x150);
    return random_isotropic(tag, rng);
}

namespace {

bool proportional(const BlockVector& x, const BlockVector& y) {
    return rank(Matrix::from_rows({x.coords(), y.coords()}, 8)) < 2;
}

// Candidate s′ = (a′, b′) isotropic by construction, with one free parameter
// entering polar(s, s′) linearly; the parameter is solved so the form vanishes.
std::optional<BlockVector> orthogonal_candidate(const BlockVector& s, Rng& rng) {
    const Block2& a = s.first();
    const Block2& b = s.second();
    const Block2 a2 = random_block(rng);
    const Rational d = a2.det();
    const Rational half(1, 2);
    const Rational base_a = half * (a * adjugate(a2)).trace();
    // b′ = [[d, r′], [0, 1]]: polar = base_a − ½(b₀ + b₃d) + ½ r′ b₂
    if (!b.e[2].is_zero()) {
        Rational r = (b.e[0] + b.e[3] * d - Rational(2) * base_a) / b.e[2];
        return BlockVector(s.tag(), a2, Block2{{d, r, 0, 1}});
    }
    // b′ = [[d, 0], [r′, 1]]: polar = base_a − ½(b₀ + b₃d) + ½ r′ b₁
    if (!b.e[1].is_zero()) {
        Rational r = (b.e[0] + b.e[3] * d - Rational(2) * base_a) / b.e[1];
        return BlockVector(s.tag(), a2, Block2{{d, 0, r, 1}});
    }
    return std::nullopt;
}

}  // namespace

IsotropicVector random_orthogonal_isotropic(const IsotropicVector& s, Rng& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto c = orthogonal_candidate(s.vec(), rng);
        if (!c) break;
        if (!proportional(*c, s.vec())) return IsotropicVector(*c);
    }
    // Otherwise take a partner inside a maximal isotropic space through s:
    // any nonzero x ∈ B_s gives s ∈ A_x, which is totally isotropic.
    const IsotropicSubspace through = a_space(IsotropicVector(b_space(s).basis().front()));
    for (int attempt = 0; attempt < 64; ++attempt) {
        BlockVector x = BlockVector::zero(s.tag());
        for (const auto& b : through.basis()) x = x + random_rational(rng, -3, 3) * b;
        if (!x.is_zero() && !proportional(x, s.vec())) return IsotropicVector(x);
    }
    throw std::runtime_error("could not sample an orthogonal isotropic partner");
}

IsotropicVector random_nonorthogonal_isotropic(const IsotropicVector& s, Rng& rng) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        IsotropicVector c = random_isotropic(s.tag(), rng);
        if (!polar(c.vec(), s.vec()).is_zero()) return c;
    }
    throw std::runtime_error("could not sample a non-orthogonal isotropic partner");
}

IsotropicSubspace random_isotropic_subspace(RepTag tag, std::size_t dim, Rng& rng) {
    if (dim < 1 || dim > 4) throw std::invalid_argument("isotropic subspace dimension must be 1..4");
    // Maximal isotropic subspaces of `tag` are A_x for x ∈ succ(tag) or B_x for x ∈ pred(tag).
    IsotropicSubspace maximal = random_int(rng, 0, 1) == 0
                                    ? a_space(random_isotropic(successor(tag), rng))
                                    : b_space(random_isotropic(predecessor(tag), rng));
    if (dim == 4) return maximal;
    const auto basis = maximal.basis();
    for (;;) {
        std::vector<BlockVector> gens;
        for (std::size_t i = 0; i < dim; ++i) {
            BlockVector g = BlockVector::zero(tag);
            for (const auto& b : basis) g = g + random_rational(rng, -3, 3) * b;
            gens.push_back(g);
        }
        IsotropicSubspace u = IsotropicSubspace::span_of(tag, gens);
        if (u.dim() == dim) return u;
    }
}

IsotropicSubspace transform(const S3Element& g, const IsotropicSubspace& u) {
    std::vector<BlockVector> images;
    for (const auto& b : u.basis()) images.push_back(act(g, b));
    return IsotropicSubspace::span_of(tag_from_index(g(index_of(u.tag()))), images);
}

namespace {

void require_moving_involution(const IsotropicSubspace& u, const S3Element& g) {
    if (!g.is_involution()) throw std::invalid_argument("mu: g must be an involution of S3");
    if (g(index_of(u.tag())) == index_of(u.tag()))
        throw std::invalid_argument("mu: g must move the summand containing U");
}

}  // namespace

Matrix mu_matrix(const IsotropicSubspace& u, const S3Element& g) {
    require_moving_involution(u, g);
    const auto basis = u.basis();
    std::vector<Vec> rows;
    for (const auto& x : basis)
        for (const auto& y : basis) rows.push_back(cliff_mul(x, act(g, y)).coords());
    return Matrix::from_rows(rows, 8);
}

std::size_t mu_rank(const IsotropicSubspace& u, const S3Element& g) { return rank(mu_matrix(u, g)); }

bool mu_symmetric_part_vanishes(const IsotropicSubspace& u, const S3Element& g) {
    require_moving_involution(u, g);
    const auto basis = u.basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) {
            BlockVector sym = cliff_mul(basis[i], act(g, basis[j])) + cliff_mul(basis[j], act(g, basis[i]));
            if (!sym.is_zero()) return false;
        }
    return true;
}

}  // namespace triality
