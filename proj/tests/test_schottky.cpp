#include "doctest.h"

#include "triality/schottky.hpp"

#include <algorithm>
#include <set>

using namespace triality;

TEST_CASE("lattice vectors live in the zero-sum hyperplane") {
    CHECK_THROWS_AS(LatticeVector::of({1, 0, 0, 0}), std::invalid_argument);
    CHECK(recillas_l() == LatticeVector::halves({3, -1, -1, -1}));
    CHECK(recillas_l().dot(recillas_l()) == Rational(3));
    CHECK(recillas_n().dot(recillas_n()) == Rational(4));
}

TEST_CASE("S4 permutations") {
    CHECK(S4Perm::all().size() == 24);
    CHECK(S4Perm::tau().pow(3) == S4Perm::identity());
    CHECK(S4Perm::phi().pow(4) == S4Perm::identity());
    CHECK(S4Perm::phi().pow(2) != S4Perm::identity());
    CHECK(S4Perm::phi() * S4Perm::phi().inverse() == S4Perm::identity());
    CHECK_THROWS_AS(S4Perm({0, 0, 1, 2}), std::invalid_argument);
}

TEST_CASE("action is a left action") {
    const auto v = LatticeVector::of({3, -1, 0, -2});
    for (const auto& g : S4Perm::all())
        for (const auto& h : {S4Perm::tau(), S4Perm::phi(), S4Perm::sigma_prime()})
            CHECK(act(g * h, v) == act(g, act(h, v)));
    CHECK(act(S4Perm::phi(), recillas_l()) == LatticeVector::halves({-1, -1, 3, -1}));
}

TEST_CASE("tensoring L with phi L") {
    CHECK(recillas_l() + act(S4Perm::phi(), recillas_l()) == LatticeVector::of({1, -1, 1, -1}));
}

TEST_CASE("Recillas identities") {
    const auto r = recillas_identity_values();
    CHECK(r.one_plus_phi2_l == recillas_n());
    CHECK(r.tau_orbit_sum_n == Rational(2) * recillas_l());
    CHECK(r.composite == Rational(2) * recillas_l());
    CHECK(recillas_identities());
}

TEST_CASE("pair products") {
    const auto x = LatticeVector::of({1, -1, 0, 0}), y = LatticeVector::of({0, 0, 1, -1});
    auto p = pair_products(x, y);
    CHECK(p.size() == 4);
    CHECK(std::set<LatticeVector>(p.begin(), p.end()).count(x + y) == 1);
    CHECK(std::set<LatticeVector>(p.begin(), p.end()).count(-x - y) == 1);
}

TEST_CASE("eight vectors on both sides") {
    const Splitting l = expand_L_side(), n = expand_N_side();
    for (const auto* m : {&l.v, &l.s_plus, &l.s_minus, &n.v, &n.s_plus, &n.s_minus}) {
        CHECK(m->size() == 8);
        CHECK(m->closed_under_negation());
    }
    CHECK(compare_sides(l, n).ok());
    CHECK(verify_eight_vectors());
    // A wrong n breaks the comparison.
    CHECK_FALSE(compare_sides(l, expand_N_side(LatticeVector::of({2, 0, -1, -1}))).ok());
}

TEST_CASE("V multiset on the N side") {
    std::vector<LatticeVector> listed;
    for (auto v : {LatticeVector::of({1, 1, -1, -1}), LatticeVector::of({1, 1, -1, -1}), LatticeVector::of({2, -2, 0, 0}),
                   LatticeVector::of({0, 0, 2, -2})}) {
        listed.push_back(v);
        listed.push_back(-v);
    }
    std::sort(listed.begin(), listed.end());
    CHECK(expand_N_side().v.vectors == listed);
}
