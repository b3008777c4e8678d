#include "doctest.h"

#include "triality/lefschetz.hpp"

using namespace triality;

TEST_CASE("trigonal data validation") {
    CHECK_THROWS_AS(TrigonalData(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(TrigonalData(4, 7), std::invalid_argument);
    CHECK(TrigonalData(4, 6).cyclic());
    CHECK(TrigonalData(4, 1).simple_points() == 10);
}

TEST_CASE("holomorphic Lefschetz on an elliptic involution") {
    // Four fixed points of −1 on an elliptic curve: h0 trace 1, each contributes 1/(1+1).
    std::vector<FixedPointDatum> d{{Eisenstein(-1), Eisenstein(1), 4}};
    CHECK(holo_lefschetz(d, Eisenstein(1)) == Eisenstein(-1));
    CHECK_THROWS_AS(holo_lefschetz({{Eisenstein(1), Eisenstein(1), 1}}, Eisenstein(1)), std::domain_error);
}

TEST_CASE("Riemann-Hurwitz for the Galois closures at g = 4") {
    const TrigonalData t(4, 0);
    CHECK(galois_cover_euler(s3_table(), galois_closure_branching(t)) == 2 - 2 * 13);
    CHECK(galois_cover_euler(s4_table(), recillas_closure_branching(t)) == -96);
    CHECK(recillas_unramified_check(t));
    CHECK_FALSE(recillas_unramified_check(t, 48));
    // A transposition fixes one point over each of the 12 simple branch points.
    CHECK(fixed_point_count(s3_table(), 1, galois_closure_branching(t)) == 12);
    CHECK(fixed_point_count(s3_table(), 2, galois_closure_branching(t)) == 0);
}

TEST_CASE("genus bookkeeping over a range") {
    for (std::int64_t g = 3; g <= 9; ++g)
        for (std::int64_t d = 0; d <= g + 2; ++d) CHECK(genus_suite(TrigonalData(g, d)).ok());
}

TEST_CASE("moduli character at g = 4") {
    const auto m = galois_moduli_character(TrigonalData(4, 0));
    CHECK(m == MultiplicityTriple{14, 98, 112});
    // Total dimension is 28(genus(𝒢(C)) − 1).
    CHECK(m.a + m.b + 2 * m.c == 28 * 12);
    CHECK_THROWS_AS(galois_moduli_character(TrigonalData(4, 6)), CyclicCase);
}

TEST_CASE("total dimension for delta = 0") {
    for (std::int64_t g = 3; g <= 10; ++g) {
        const auto m = galois_moduli_character(TrigonalData(g, 0));
        CHECK(m.a + m.b + 2 * m.c == 28 * (3 * g));
        CHECK(m.a >= 0);
    }
}

TEST_CASE("cyclic case against the inner-product formula") {
    const Eisenstein w = Eisenstein::omega(), w2 = Eisenstein::omega_squared();
    for (std::int64_t g = 3; g <= 10; ++g) {
        const auto c = cyclic_moduli_dim(g);
        const Eisenstein total(c.total), t1 = c.trace_tau, t2 = c.trace_tau_squared;
        CHECK(c.total == Rational(28 * (g - 1)));
        CHECK(Eisenstein(c.a) == (total + t1 + t2) / Eisenstein(3));
        CHECK(Eisenstein(c.b) == (total + w2 * t1 + w * t2) / Eisenstein(3));
        CHECK(Eisenstein(c.c) == (total + w * t1 + w2 * t2) / Eisenstein(3));
        CHECK(c.a == Rational(7 * g - 14));
    }
    const auto c4 = cyclic_moduli_dim(4);
    CHECK(c4.a == Rational(14));
    CHECK(c4.b == Rational(28));
    CHECK(c4.c == Rational(42));
}

TEST_CASE("structure sheaf of the S4 closure") {
    for (std::int64_t g = 3; g <= 7; ++g)
        for (std::int64_t d = 0; d <= g + 1; ++d) {
            const auto m = structure_sheaf_character_S4(TrigonalData(g, d));
            // Weighted by irreducible dimensions this is the genus 12g + 1 − 4δ.
            CHECK(m[0] + m[1] + 3 * (m[2] + m[3]) + 2 * m[4] == 12 * g + 1 - 4 * d);
            // The invariant part is H¹(ℙ¹, 𝒪) = 0.
            CHECK(m[0] == 0);
        }
}

TEST_CASE("hyperelliptic count") {
    CHECK(hyperelliptic_moduli_dim(4) == 7);
    CHECK(hyperelliptic_moduli_dim(5) == 14);
    CHECK(hyperelliptic_terms(6).total == 33);
    CHECK_THROWS(hyperelliptic_moduli_dim(3));
}
