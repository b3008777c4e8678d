#include "doctest.h"

#include "triality/reps.hpp"

using namespace triality;

TEST_CASE("character tables are orthogonal") {
    CHECK(s3_table().order() == 6);
    CHECK(s4_table().order() == 24);
    CHECK(s3_table().orthogonal());
    CHECK(s4_table().orthogonal());
    CHECK(s3_table().index_of("ρ") == 2);
    CHECK_THROWS(s3_table().index_of("nope"));
}

TEST_CASE("decomposing the regular representation") {
    ClassFunction reg3(s3_table(), {6, 0, 0});
    CHECK(decompose(reg3) == std::vector<std::int64_t>{1, 1, 2});
    ClassFunction reg4(s4_table(), {24, 0, 0, 0, 0});
    CHECK(decompose(reg4) == std::vector<std::int64_t>{1, 1, 3, 3, 2});
}

TEST_CASE("permutation representation of S3 on three points") {
    // Classes 1, σ, τ fix 3, 1, 0 points.
    CHECK(decompose(ClassFunction(s3_table(), {3, 1, 0})) == std::vector<std::int64_t>{1, 0, 1});
    // S4 on four points: 1 + ρ, with ρ the standard 3-dimensional one.
    auto m = decompose(ClassFunction(s4_table(), {4, 2, 1, 0, 0}));
    CHECK(m[0] == 1);
    CHECK(m[0] + m[1] + 3 * (m[2] + m[3]) + 2 * m[4] == 4);
}

TEST_CASE("both multiplicity paths agree on sums of irreducibles") {
    const auto& t = s4_table();
    ClassFunction cf = character_of(t, 0);
    cf += Eisenstein(3) * character_of(t, 4);
    cf += character_of(t, 3);
    CHECK(solve_multiplicities(cf) == inner_product_multiplicities(cf));
    CHECK(decompose(cf) == std::vector<std::int64_t>{1, 0, 0, 1, 3});
}

TEST_CASE("non-characters are rejected") {
    CHECK_THROWS_AS(decompose(ClassFunction(s3_table(), {1, 0, 0})), NotGenuineCharacter);
    CHECK_THROWS_AS(decompose(ClassFunction(s3_table(), {-1, -1, -1})), NotGenuineCharacter);
    CHECK_THROWS_AS(ClassFunction(s3_table(), {1, 1}), std::invalid_argument);
}

TEST_CASE("Galois structure counts") {
    CHECK(galois_structure_count(1) == 1);
    CHECK(galois_structure_count(2) == 2);
    CHECK(galois_structure_count(3) == 4);
    CHECK_THROWS(galois_structure_count(0));
}
