#include "doctest.h"

#include "triality/clifford.hpp"

using namespace triality;

namespace {

BlockVector bv(RepTag t, std::array<long, 8> c) {
    Vec coords;
    for (long x : c) coords.emplace_back(x);
    return BlockVector::from_coords(t, coords);
}

}  // namespace

TEST_CASE("adjugate of a 2x2 block") {
    Block2 m{{1, 2, 3, 4}};
    CHECK(adjugate(m) == Block2{{4, -2, -3, 1}});
    CHECK(m * adjugate(m) == Rational(-2) * Block2::identity());
}

TEST_CASE("quad is det first minus det second on every summand") {
    for (int k = 0; k < 3; ++k) {
        BlockVector x = bv(tag_from_index(k), {1, 2, 3, 4, 0, 1, 1, 0});
        CHECK(quad(x) == Rational(-2 + 1));
        CHECK(polar(x, x) == quad(x));
    }
}

TEST_CASE("V x S+ -> S- matches the displayed formula") {
    Rng rng = make_rng(11);
    for (int i = 0; i < 20; ++i) {
        BlockVector v = random_block_vector(RepTag::V, rng), s = random_block_vector(RepTag::Splus, rng);
        const Block2 &a = v.first(), &b = v.second(), &x = s.first(), &y = s.second();
        BlockVector expect(RepTag::Sminus, adjugate(a) * adjugate(x) + adjugate(y) * b, b * x + y * adjugate(a));
        CHECK(cliff_mul(v, s) == expect);
    }
}

TEST_CASE("clifford multiplication rejects equal tags") {
    BlockVector v = BlockVector::unit(RepTag::V);
    CHECK_THROWS(cliff_mul(v, v));
}

TEST_CASE("unit vectors") {
    const BlockVector v0 = BlockVector::unit(RepTag::V), s0 = BlockVector::unit(RepTag::Splus),
                      t0 = BlockVector::unit(RepTag::Sminus);
    CHECK(cliff_mul(v0, s0) == t0);
    CHECK(trilinear(v0, s0, t0) == Rational(1));
    CHECK(quad(v0) == Rational(1));
}

TEST_CASE("determinant of multiplication is minus quad to the fourth") {
    Rng rng = make_rng(5);
    for (int i = 0; i < 30; ++i) {
        BlockVector x = random_block_vector(tag_from_index(i % 3), rng);
        CHECK(determinant(mult_matrix(x)) == -pow(quad(x), 4));
    }
    // v₀ has quad 1, so multiplication by it has determinant −1.
    CHECK(determinant(mult_matrix(BlockVector::unit(RepTag::V))) == Rational(-1));
}

TEST_CASE("rho: identity, involution, braid relation") {
    CHECK(rho(S3Element::identity()) == Matrix::identity(24));
    const Matrix& s = rho(S3Element::sigma());
    CHECK(s * s == Matrix::identity(24));
    CHECK(s * rho(S3Element::tau()) * s == rho(S3Element::tau_squared()));
    for (const auto& a : S3Element::all())
        for (const auto& b : S3Element::all()) CHECK(rho(a * b) == rho(a) * rho(b));
}

TEST_CASE("sigma fixes v0 and negates its orthogonal complement") {
    const S3Element sigma = S3Element::sigma();
    CHECK(act(sigma, BlockVector::unit(RepTag::V)) == BlockVector::unit(RepTag::V));
    BlockVector w = bv(RepTag::V, {0, 1, 0, 0, 2, 0, 0, 3});
    REQUIRE(polar(w, BlockVector::unit(RepTag::V)) == Rational(0));
    CHECK(act(sigma, w) == -w);
    // Spinors are swapped.
    CHECK(act(sigma, BlockVector::unit(RepTag::Splus)).tag() == RepTag::Sminus);
}

TEST_CASE("sigma-tau and sigma-tau-squared are built from s0 and t0") {
    CHECK(act(S3Element::sigma_tau(), BlockVector::unit(RepTag::Splus)) == BlockVector::unit(RepTag::Splus));
    CHECK(act(S3Element::sigma_tau_squared(), BlockVector::unit(RepTag::Sminus)) == BlockVector::unit(RepTag::Sminus));
    CHECK(act(S3Element::sigma_tau(), BlockVector::unit(RepTag::V)).tag() == RepTag::Sminus);
    CHECK(act(S3Element::sigma_tau_squared(), BlockVector::unit(RepTag::V)).tag() == RepTag::Splus);
}

TEST_CASE("octonion product") {
    const BlockVector one = BlockVector::unit(RepTag::V);
    Rng rng = make_rng(3);
    for (int i = 0; i < 20; ++i) {
        BlockVector x = random_block_vector(RepTag::V, rng), y = random_block_vector(RepTag::V, rng);
        CHECK(oct_mul(one, x) == x);
        CHECK(quad(oct_mul(x, y)) == quad(x) * quad(y));
    }
}

TEST_CASE("centre of Spin(8) as triality triples") {
    auto I = [](int s) { return Matrix::identity(8).scaled(Rational(s)); };
    CHECK(is_triality_triple(I(1), I(1), I(1)));
    CHECK(is_triality_triple(I(1), I(-1), I(-1)));
    CHECK(is_triality_triple(I(-1), I(-1), I(1)));
    CHECK(is_triality_triple(I(-1), I(1), I(-1)));
    CHECK_FALSE(is_triality_triple(I(1), I(1), I(-1)));
    CHECK_THROWS(is_triality_triple(Matrix::identity(4), I(1), I(1)));
}

TEST_CASE("spinor pairing symmetry by dimension") {
    auto r4 = spinor_pairing(4);
    CHECK(r4.dim_even == 8);
    CHECK(r4.halves_nondegenerate);
    CHECK(r4.symmetric);
    auto r2 = spinor_pairing(2);
    CHECK(r2.antisymmetric);
    CHECK_FALSE(r2.symmetric);
    auto r3 = spinor_pairing(3);
    CHECK(r3.vanishes_on_halves);
    CHECK(r3.cross_nondegenerate);
}

TEST_CASE("spin sum dimensions") {
    auto a = spin_sum_dims(2, 2);
    CHECK(a.dim_even == 8);
    CHECK(a.even_split == 8);
    CHECK(a.bijection_ok);
    auto b = spin_sum_dims(1, 1);
    CHECK(b.dim_even == 2);
    auto c = spin_sum_dims(2, 3);
    CHECK(c.dim_even == 16);
    CHECK(c.dim_odd == 16);
    CHECK(c.bijection_ok);
}
