#pragma once

// Root-space model of so(8) = h ⊕ g₊ ⊕ g₋ with the S3 diagram automorphisms.
//
// Cartan coordinates are the orthonormal e₁..e₄; simple roots are
//   f₀ = e₂ − e₃ (central node), f₁ = e₁ − e₂, f₂ = e₃ − e₄, f₃ = e₃ + e₄.
// The outer nodes f₁, f₂, f₃ are matched with the summands V, S⁺, S⁻, so an
// S3Element permutes them the same way it permutes the summands.

#include "triality/exact.hpp"
#include "triality/linalg.hpp"
#include "triality/s3.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace triality {

struct Root {
    std::array<int, 4> e{};

    bool is_positive() const;
    Root operator-() const { return {{-e[0], -e[1], -e[2], -e[3]}}; }
    friend Root operator+(const Root& a, const Root& b) {
        return {{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]}};
    }
    friend Root operator*(int k, const Root& a) { return {{k * a.e[0], k * a.e[1], k * a.e[2], k * a.e[3]}}; }
    friend auto operator<=>(const Root&, const Root&) = default;
    std::string to_string() const;
};

/// Coefficients on f₀, f₁, f₂, f₃.
using SimpleCoords = std::array<int, 4>;

struct SimpleRootLabels {
    Root f0{{0, 1, -1, 0}};
    Root f1{{1, -1, 0, 0}};
    Root f2{{0, 0, 1, -1}};
    Root f3{{0, 0, 1, 1}};

    const Root& operator[](std::size_t i) const;
};

inline const SimpleRootLabels kSimpleRoots{};

struct RootSystem {
    std::vector<Root> roots;      // all 24
    std::vector<Root> positive;   // 12
    std::vector<Root> negative;   // 12
};

RootSystem root_system();
/// True iff r is ±e_i ± e_j for i ≠ j.
bool is_root(const Root& r);
Root from_simple(const SimpleCoords& c);
/// Throws std::invalid_argument unless r is an integral combination of f₀..f₃.
SimpleCoords to_simple(const Root& r);

/// 4×4 matrix on e-coordinates.
struct CartanAction {
    Matrix m;

    Root apply(const Root& r) const;
};

/// The linear map fixing f₀ and permuting f₁, f₂, f₃ as u permutes V, S⁺, S⁻.
CartanAction triality_on_cartan(const S3Element& u);

/// trace on h plus the number of roots fixed by u (fixed root spaces carry eigenvalue +1).
Eisenstein adjoint_trace(const S3Element& u);

/// Eigenvalue multiplicities of u on so(8); eigenvalues are 1, −1, ω, ω² in that order when present.
std::vector<std::pair<Eisenstein, int>> adjoint_decomposition(const S3Element& u);

struct PositiveRootArrayReport {
    std::array<std::array<SimpleCoords, 4>, 3> array{};    // [row][column]
    std::array<std::array<SimpleCoords, 4>, 3> images{};   // τ applied entrywise
    std::array<bool, 3> cycled{};                         // columns 0..2 move row r → row r+1
    bool last_column_fixed = false;
    bool covers_positive_roots = false;
    bool ok() const { return cycled[0] && cycled[1] && cycled[2] && last_column_fixed && covers_positive_roots; }
};

/// Rebuilds the 3×4 array of positive roots in simple-root coordinates and
/// checks how τ acts on its columns.
PositiveRootArrayReport positive_root_array_check();

}  // namespace triality
