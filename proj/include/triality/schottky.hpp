#pragma once

// Lattice shadow of line-bundle classes on 𝒢(R_η): each class is a vector in
// the zero-sum hyperplane of ℚ⁴ with S4 permuting coordinates.

#include "triality/exact.hpp"

#include <array>
#include <ostream>
#include <string>
#include <vector>

namespace triality {

class LatticeVector {
public:
    LatticeVector() = default;
    /// Throws std::invalid_argument unless the coordinates sum to zero.
    explicit LatticeVector(std::array<Rational, 4> x);
    static LatticeVector halves(std::array<long, 4> twice);  // ½·twice
    static LatticeVector of(std::array<long, 4> x);

    const Rational& operator[](std::size_t i) const { return x_[i]; }
    const std::array<Rational, 4>& coords() const { return x_; }
    Rational dot(const LatticeVector& o) const;
    std::string to_string() const;

    LatticeVector operator-() const;
    friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
    friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
    friend LatticeVector operator*(const Rational& k, const LatticeVector& a);
    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

private:
    std::array<Rational, 4> x_{};
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

/// Permutation of {0,1,2,3}; p[i] is the image of i. (gh)(i) = g(h(i)).
class S4Perm {
public:
    S4Perm() : p_{0, 1, 2, 3} {}
    /// Throws std::invalid_argument unless p is a bijection.
    explicit S4Perm(std::array<int, 4> p);

    static S4Perm identity() { return {}; }
    static S4Perm sigma() { return S4Perm({0, 1, 3, 2}); }        // (23)
    static S4Perm tau() { return S4Perm({0, 2, 3, 1}); }          // (123)
    static S4Perm sigma_prime() { return S4Perm({1, 0, 2, 3}); }  // (01)
    static S4Perm phi() { return S4Perm({2, 3, 1, 0}); }          // (0213)
    static std::vector<S4Perm> all();

    int operator()(int i) const { return p_.at(static_cast<std::size_t>(i)); }
    S4Perm inverse() const;
    S4Perm pow(unsigned k) const;

    friend S4Perm operator*(const S4Perm& g, const S4Perm& h);
    friend bool operator==(const S4Perm&, const S4Perm&) = default;

private:
    std::array<int, 4> p_;
};

/// (g·v)_i = v_{g⁻¹(i)}.
LatticeVector act(const S4Perm& g, const LatticeVector& v);

/// l = ½(3,−1,−1,−1) and n = (1,1,−1,−1).
LatticeVector recillas_l();
LatticeVector recillas_n();

struct RecillasIdentities {
    LatticeVector one_plus_phi2_l;     // (1+φ²)l, expected n
    LatticeVector tau_orbit_sum_n;     // (1+τ+τ²)n, expected 2l
    LatticeVector composite;           // (1+τ+τ²)(1+φ²)l, expected 2l
    bool ok() const;
};
RecillasIdentities recillas_identity_values();
bool recillas_identities();

/// Summands of one of the pulled-back bundles: a 2-torsion twist carried as
/// a formal label, and the multiset of lattice vectors of the line summands.
struct SummandMultiset {
    std::string twist;
    std::vector<LatticeVector> vectors;  // kept sorted

    SummandMultiset(std::string twist, std::vector<LatticeVector> v);
    std::size_t size() const { return vectors.size(); }
    bool closed_under_negation() const;
    friend bool operator==(const SummandMultiset&, const SummandMultiset&) = default;
};

struct Splitting {
    SummandMultiset v, s_plus, s_minus;
};

/// (x ⊕ x⁻¹)(y ⊕ y⁻¹) ↦ {x+y, x−y, −x+y, −x−y}.
std::vector<LatticeVector> pair_products(const LatticeVector& x, const LatticeVector& y);

/// L ↦ l, φᵏL ↦ φᵏ·l.
Splitting expand_L_side();
/// N ↦ n, τᵏN ↦ τᵏ·n.
Splitting expand_N_side(const LatticeVector& n);
Splitting expand_N_side();

struct EightVectorReport {
    bool v = false, s_plus = false, s_minus = false;
    bool ok() const { return v && s_plus && s_minus; }
};
EightVectorReport compare_sides(const Splitting& lhs, const Splitting& rhs);
bool verify_eight_vectors();

}  // namespace triality
