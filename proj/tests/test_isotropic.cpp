#include "doctest.h"

#include "triality/isotropic.hpp"

using namespace triality;

TEST_CASE("seeded isotropic sampling is reproducible") {
    IsotropicVector x = random_isotropic(RepTag::V, 1);
    Vec expect;
    for (long c : {8, -4, -2, 6, 40, 0, 8, 1}) expect.emplace_back(c);
    CHECK(x.vec().coords() == expect);
    CHECK(quad(x.vec()) == Rational(0));
    CHECK(random_isotropic(RepTag::V, 1).vec() == x.vec());
}

TEST_CASE("non-isotropic vectors are rejected") {
    CHECK_THROWS_AS(IsotropicVector(BlockVector::unit(RepTag::V)), std::invalid_argument);
    CHECK_THROWS_AS(IsotropicVector(BlockVector::zero(RepTag::V)), std::invalid_argument);
}

TEST_CASE("A and B of an isotropic vector are 4-dimensional and land in the neighbours") {
    Rng rng = make_rng(21);
    for (int k = 0; k < 3; ++k) {
        for (int i = 0; i < 5; ++i) {
            IsotropicVector x = random_isotropic(tag_from_index(k), rng);
            IsotropicSubspace a = a_space(x), b = b_space(x);
            CHECK(a.dim() == 4);
            CHECK(b.dim() == 4);
            CHECK(a.tag() == predecessor(x.tag()));
            CHECK(b.tag() == successor(x.tag()));
            CHECK(a.space() == a_space_image(x));
            CHECK(b.space() == b_space_image(x));
            for (const auto& u : a.basis()) CHECK(cliff_mul(x.vec(), u).is_zero());
        }
    }
}

TEST_CASE("maximal-plane rule and raw kernels") {
    Rng rng = make_rng(4);
    IsotropicVector s = random_isotropic(RepTag::Splus, rng);
    IsotropicSubspace u = a_space(s);
    CHECK(a_kernel_of(u).dim() == 0);
    CHECK(a_of(u) == b_space(s));
    IsotropicSubspace w = b_space(s);
    CHECK(b_kernel_of(w).dim() == 0);
    CHECK(b_of(w) == a_space(s));
}

TEST_CASE("orthogonal isotropic pairs share a plane") {
    Rng rng = make_rng(8);
    for (int i = 0; i < 5; ++i) {
        IsotropicVector s = random_isotropic(RepTag::Splus, rng);
        IsotropicVector s2 = random_orthogonal_isotropic(s, rng);
        CHECK(polar(s.vec(), s2.vec()) == Rational(0));
        CHECK(intersect(a_space(s).space(), a_space(s2).space()).dim() == 2);
        IsotropicVector s3 = random_nonorthogonal_isotropic(s, rng);
        CHECK(intersect(a_space(s).space(), a_space(s3).space()).dim() == 0);
    }
}

TEST_CASE("random isotropic subspaces") {
    Rng rng = make_rng(13);
    for (std::size_t d = 1; d <= 4; ++d) {
        IsotropicSubspace u = random_isotropic_subspace(RepTag::V, d, rng);
        CHECK(u.dim() == d);
        CHECK(is_totally_isotropic(RepTag::V, u.space()));
        IsotropicSubspace moved = transform(S3Element::tau(), u);
        CHECK(moved.tag() == RepTag::Splus);
        CHECK(is_totally_isotropic(RepTag::Splus, moved.space()));
    }
    CHECK_THROWS(random_isotropic_subspace(RepTag::V, 5, rng));
}

TEST_CASE("mu on 2-planes has rank one and vanishing symmetric part") {
    Rng rng = make_rng(17);
    for (int i = 0; i < 5; ++i) {
        IsotropicSubspace u = random_isotropic_subspace(RepTag::V, 2, rng);
        CHECK(mu_rank(u, S3Element::sigma_tau()) == 1);
        CHECK(mu_symmetric_part_vanishes(u, S3Element::sigma_tau()));
    }
    IsotropicSubspace u = random_isotropic_subspace(RepTag::V, 2, rng);
    CHECK_THROWS_AS(mu_rank(u, S3Element::sigma()), std::invalid_argument);
}
