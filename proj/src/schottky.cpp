#include "triality/schottky.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace triality {

LatticeVector::LatticeVector(std::array<Rational, 4> x) : x_(std::move(x)) {
    if (!(x_[0] + x_[1] + x_[2] + x_[3]).is_zero()) throw std::invalid_argument("lattice vector must have zero coordinate sum");
}

LatticeVector LatticeVector::halves(std::array<long, 4> twice) {
    return LatticeVector({Rational(twice[0], 2), Rational(twice[1], 2), Rational(twice[2], 2), Rational(twice[3], 2)});
}

LatticeVector LatticeVector::of(std::array<long, 4> x) {
    return LatticeVector({Rational(x[0]), Rational(x[1]), Rational(x[2]), Rational(x[3])});
}

Rational LatticeVector::dot(const LatticeVector& o) const {
    Rational s;
    for (std::size_t i = 0; i < 4; ++i) s += x_[i] * o.x_[i];
    return s;
}

std::string LatticeVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < 4; ++i) os << (i ? "," : "") << x_[i].to_string();
    os << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << v.to_string(); }

LatticeVector LatticeVector::operator-() const { return Rational(-1) * *this; }

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    return LatticeVector({a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]});
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) { return a + (-b); }

LatticeVector operator*(const Rational& k, const LatticeVector& a) {
    return LatticeVector({k * a[0], k * a[1], k * a[2], k * a[3]});
}

S4Perm::S4Perm(std::array<int, 4> p) : p_(p) {
    std::array<bool, 4> seen{};
    for (int x : p_) {
        if (x < 0 || x > 3 || seen[static_cast<std::size_t>(x)]) throw std::invalid_argument("not a permutation of {0,1,2,3}");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

std::vector<S4Perm> S4Perm::all() {
    std::array<int, 4> p{0, 1, 2, 3};
    std::vector<S4Perm> out;
    do out.emplace_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

S4Perm S4Perm::inverse() const {
    std::array<int, 4> q{};
    for (int i = 0; i < 4; ++i) q[static_cast<std::size_t>(p_[static_cast<std::size_t>(i)])] = i;
    return S4Perm(q);
}

S4Perm S4Perm::pow(unsigned k) const {
    S4Perm r;
    for (unsigned i = 0; i < k; ++i) r = *this * r;
    return r;
}

S4Perm operator*(const S4Perm& g, const S4Perm& h) {
    std::array<int, 4> q{};
    for (int i = 0; i < 4; ++i) q[static_cast<std::size_t>(i)] = g(h(i));
    return S4Perm(q);
}

LatticeVector act(const S4Perm& g, const LatticeVector& v) {
    const S4Perm inv = g.inverse();
    std::array<Rational, 4> out;
    for (int i = 0; i < 4; ++i) out[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(inv(i))];
    return LatticeVector(out);
}

LatticeVector recillas_l() { return LatticeVector::halves({3, -1, -1, -1}); }
LatticeVector recillas_n() { return LatticeVector::of({1, 1, -1, -1}); }

namespace {

LatticeVector tau_orbit_sum(const LatticeVector& v) {
    const S4Perm t = S4Perm::tau();
    return v + act(t, v) + act(t.pow(2), v);
}

}  // namespace

bool RecillasIdentities::ok() const {
    const LatticeVector two_l = Rational(2) * recillas_l();
    return one_plus_phi2_l == recillas_n() && tau_orbit_sum_n == two_l && composite == two_l;
}

RecillasIdentities recillas_identity_values() {
    const LatticeVector l = recillas_l();
    const LatticeVector m = l + act(S4Perm::phi().pow(2), l);
    return {m, tau_orbit_sum(recillas_n()), tau_orbit_sum(m)};
}

bool recillas_identities() { return recillas_identity_values().ok(); }

SummandMultiset::SummandMultiset(std::string t, std::vector<LatticeVector> v) : twist(std::move(t)), vectors(std::move(v)) {
    std::sort(vectors.begin(), vectors.end());
}

bool SummandMultiset::closed_under_negation() const {
    std::vector<LatticeVector> neg;
    for (const auto& x : vectors) neg.push_back(-x);
    std::sort(neg.begin(), neg.end());
    return neg == vectors;
}

std::vector<LatticeVector> pair_products(const LatticeVector& x, const LatticeVector& y) {
    return {x + y, x - y, -x + y, -x - y};
}

namespace {

std::vector<LatticeVector> joined(std::vector<LatticeVector> a, const std::vector<LatticeVector>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

const char* const kTwists[3] = {"ζ′", "τζ′", "τ²ζ′"};

}  // namespace

Splitting expand_L_side() {
    const S4Perm phi = S4Perm::phi();
    std::array<LatticeVector, 4> pl;  // φᵏ l
    for (unsigned k = 0; k < 4; ++k) pl[k] = act(phi.pow(k), recillas_l());
    return {
        {kTwists[0], joined(pair_products(pl[0], pl[2]), pair_products(pl[3], pl[1]))},
        {kTwists[1], joined(pair_products(pl[0], pl[1]), pair_products(pl[2], pl[3]))},
        {kTwists[2], joined(pair_products(pl[0], pl[3]), pair_products(pl[1], pl[2]))},
    };
}

Splitting expand_N_side(const LatticeVector& n) {
    const S4Perm tau = S4Perm::tau();
    const std::array<LatticeVector, 3> tn{n, act(tau, n), act(tau.pow(2), n)};
    auto doubled = [](const LatticeVector& x) { return std::vector<LatticeVector>{x, x, -x, -x}; };
    return {
        {kTwists[0], joined(doubled(tn[0]), pair_products(tn[1], tn[2]))},
        {kTwists[1], joined(doubled(tn[1]), pair_products(tn[2], tn[0]))},
        {kTwists[2], joined(doubled(tn[2]), pair_products(tn[0], tn[1]))},
    };
}

Splitting expand_N_side() { return expand_N_side(recillas_n()); }

EightVectorReport compare_sides(const Splitting& lhs, const Splitting& rhs) {
    return {lhs.v == rhs.v, lhs.s_plus == rhs.s_plus, lhs.s_minus == rhs.s_minus};
}

bool verify_eight_vectors() { return compare_sides(expand_L_side(), expand_N_side()).ok(); }

}  // namespace triality
