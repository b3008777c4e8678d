#include "doctest.h"

#include "triality/linalg.hpp"

using namespace triality;

namespace {
Vec v(std::initializer_list<long> xs) {
    Vec out;
    for (long x : xs) out.emplace_back(x);
    return out;
}
}  // namespace

TEST_CASE("rref, rank and determinant") {
    Matrix m = Matrix::from_rows({v({1, 2, 3}), v({2, 4, 6}), v({1, 0, 1})}, 3);
    CHECK(rank(m) == 2);
    CHECK(determinant(m) == Rational(0));
    Matrix r = rref(m);
    CHECK(r == Matrix::from_rows({v({1, 0, 1}), v({0, 1, 1}), v({0, 0, 0})}, 3));
    CHECK(determinant(Matrix::from_rows({v({0, 1}), v({1, 0})}, 2)) == Rational(-1));
}

TEST_CASE("kernel and rank add up") {
    Matrix m = Matrix::from_rows({v({1, 1, 0, 0}), v({0, 0, 1, 1})}, 4);
    Subspace k = kernel(m);
    CHECK(k.dim() + rank(m) == 4);
    for (const auto& b : k.basis_vectors()) CHECK((m * b) == Vec(2));
}

TEST_CASE("subspace intersection and sum") {
    Subspace a = Subspace::span({v({1, 0, 0}), v({0, 1, 0})}, 3);
    Subspace b = Subspace::span({v({0, 1, 0}), v({0, 0, 1})}, 3);
    Subspace i = intersect(a, b);
    CHECK(i.dim() == 1);
    CHECK(i.contains(v({0, 5, 0})));
    CHECK(sum(a, b).dim() == 3);
    CHECK_THROWS_AS(intersect(a, Subspace::full(4)), std::invalid_argument);
    // Canonical form: different spanning sets give equal subspaces.
    CHECK(Subspace::span({v({1, 1, 0}), v({1, -1, 0})}, 3) == a);
}

TEST_CASE("solve_linear over the rationals") {
    auto x = solve_linear<Rational>({{2, 1}, {1, 3}}, {3, 5});
    CHECK(x[0] == Rational(4, 5));
    CHECK(x[1] == Rational(7, 5));
    CHECK_THROWS_AS(solve_linear<Rational>({{1, 2}, {2, 4}}, {1, 1}), std::domain_error);
}
