#include "doctest.h"

#include "triality/liealg.hpp"

using namespace triality;

TEST_CASE("D4 root system") {
    const auto rs = root_system();
    CHECK(rs.roots.size() == 24);
    CHECK(rs.positive.size() == 12);
    for (const auto& r : rs.roots) CHECK(is_root(r));
    CHECK_FALSE(is_root(Root{{1, 1, 1, 0}}));
    // Highest root e₁ + e₂ = f₁ + 2f₀ + f₂ + f₃.
    CHECK(from_simple({2, 1, 1, 1}) == Root{{1, 1, 0, 0}});
    CHECK(from_simple({1, 1, 1, 1}) == Root{{1, 0, 1, 0}});
    for (const auto& r : rs.positive) {
        auto c = to_simple(r);
        for (int x : c) CHECK(x >= 0);
        CHECK(from_simple(c) == r);
    }
}

TEST_CASE("triality permutes the outer simple roots") {
    const CartanAction tau = triality_on_cartan(S3Element::tau());
    CHECK(tau.apply(kSimpleRoots.f0) == kSimpleRoots.f0);
    CHECK(tau.apply(kSimpleRoots.f1) == kSimpleRoots.f2);
    CHECK(tau.apply(kSimpleRoots.f2) == kSimpleRoots.f3);
    CHECK(tau.apply(kSimpleRoots.f3) == kSimpleRoots.f1);
    const CartanAction sigma = triality_on_cartan(S3Element::sigma());
    CHECK(sigma.apply(kSimpleRoots.f1) == kSimpleRoots.f1);
    CHECK(sigma.apply(kSimpleRoots.f2) == kSimpleRoots.f3);
    for (const auto& u : S3Element::all())
        for (const auto& r : root_system().roots) CHECK(is_root(triality_on_cartan(u).apply(r)));
}

TEST_CASE("adjoint traces: so(7) and g2 fixed subalgebras") {
    // Fixed subalgebra of an involution is so(7), of an order-3 element g2.
    CHECK(adjoint_trace(S3Element::identity()) == Eisenstein(28));
    CHECK(adjoint_trace(S3Element::sigma()) == Eisenstein(21 - 7));
    CHECK(adjoint_trace(S3Element::tau()) == Eisenstein(14) + Eisenstein(7) * (Eisenstein::omega() + Eisenstein::omega_squared()));
}

TEST_CASE("adjoint eigenspace decomposition") {
    using P = std::vector<std::pair<Eisenstein, int>>;
    CHECK(adjoint_decomposition(S3Element::sigma()) == P{{Eisenstein(1), 21}, {Eisenstein(-1), 7}});
    CHECK(adjoint_decomposition(S3Element::tau()) ==
          P{{Eisenstein(1), 14}, {Eisenstein::omega(), 7}, {Eisenstein::omega_squared(), 7}});
    CHECK(adjoint_decomposition(S3Element::identity()) == P{{Eisenstein(1), 28}});
}

TEST_CASE("positive-root array under tau") {
    const auto rep = positive_root_array_check();
    CHECK(rep.covers_positive_roots);
    CHECK(rep.last_column_fixed);
    CHECK(rep.ok());
}
