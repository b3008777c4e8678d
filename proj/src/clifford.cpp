#include "triality/clifford.hpp"

#include <bit>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

namespace triality {

RepTag tag_from_index(int i) {
    if (i < 0 || i > 2) throw std::invalid_argument("summand index out of range");
    return static_cast<RepTag>(i);
}

RepTag successor(RepTag t) { return tag_from_index((index_of(t) + 1) % 3); }
RepTag predecessor(RepTag t) { return tag_from_index((index_of(t) + 2) % 3); }

RepTag third(RepTag a, RepTag b) {
    if (a == b) throw std::invalid_argument("Clifford multiplication needs two different summands");
    return tag_from_index(3 - index_of(a) - index_of(b));
}

std::string to_string(RepTag t) {
    switch (t) {
        case RepTag::V: return "V";
        case RepTag::Splus: return "S+";
        case RepTag::Sminus: return "S-";
    }
    return "?";
}

RepTag parse_tag(const std::string& name) {
    if (name == "V" || name == "v") return RepTag::V;
    if (name == "S+" || name == "s+" || name == "Splus") return RepTag::Splus;
    if (name == "S-" || name == "s-" || name == "Sminus") return RepTag::Sminus;
    throw std::invalid_argument("unknown representation: " + name);
}

Block2 operator*(const Block2& x, const Block2& y) {
    const auto& a = x.e;
    const auto& b = y.e;
    return {{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
             a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]}};
}

Block2 operator+(const Block2& x, const Block2& y) {
    Block2 r;
    for (std::size_t i = 0; i < 4; ++i) r.e[i] = x.e[i] + y.e[i];
    return r;
}

Block2 operator-(const Block2& x, const Block2& y) {
    Block2 r;
    for (std::size_t i = 0; i < 4; ++i) r.e[i] = x.e[i] - y.e[i];
    return r;
}

Block2 operator-(const Block2& x) {
    Block2 r;
    for (std::size_t i = 0; i < 4; ++i) r.e[i] = -x.e[i];
    return r;
}

Block2 operator*(const Rational& s, const Block2& x) {
    Block2 r;
    for (std::size_t i = 0; i < 4; ++i) r.e[i] = s * x.e[i];
    return r;
}

Block2 adjugate(const Block2& m) { return {{m.e[3], -m.e[1], -m.e[2], m.e[0]}}; }

BlockVector BlockVector::from_coords(RepTag tag, std::span<const Rational> coords) {
    if (coords.size() != 8) throw std::invalid_argument("block vector needs 8 coordinates");
    return {tag, {{coords[0], coords[1], coords[2], coords[3]}}, {{coords[4], coords[5], coords[6], coords[7]}}};
}

BlockVector BlockVector::basis(RepTag tag, std::size_t index) {
    if (index >= 8) throw std::invalid_argument("basis index out of range");
    Vec c(8);
    c[index] = 1;
    return from_coords(tag, c);
}

Vec BlockVector::coords() const {
    Vec c;
    c.reserve(8);
    c.insert(c.end(), first_.e.begin(), first_.e.end());
    c.insert(c.end(), second_.e.begin(), second_.e.end());
    return c;
}

BlockVector BlockVector::operator+(const BlockVector& o) const {
    if (o.tag_ != tag_) throw std::invalid_argument("adding vectors from different summands");
    return {tag_, first_ + o.first_, second_ + o.second_};
}

BlockVector BlockVector::operator-(const BlockVector& o) const { return *this + (-o); }

std::ostream& operator<<(std::ostream& os, const BlockVector& x) {
    os << to_string(x.tag()) << "(";
    const Vec c = x.coords();
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? (i == 4 ? " | " : " ") : "") << c[i];
    return os << ")";
}

ChevalleyElement ChevalleyElement::embed(const BlockVector& x) {
    ChevalleyElement c;
    switch (x.tag()) {
        case RepTag::V: c.v = x; break;
        case RepTag::Splus: c.s = x; break;
        case RepTag::Sminus: c.t = x; break;
    }
    return c;
}

ChevalleyElement ChevalleyElement::from_coords(std::span<const Rational> coords) {
    if (coords.size() != 24) throw std::invalid_argument("Chevalley element needs 24 coordinates");
    return {BlockVector::from_coords(RepTag::V, coords.subspan(0, 8)),
            BlockVector::from_coords(RepTag::Splus, coords.subspan(8, 8)),
            BlockVector::from_coords(RepTag::Sminus, coords.subspan(16, 8))};
}

Vec ChevalleyElement::coords() const {
    Vec c = v.coords();
    Vec cs = s.coords();
    Vec ct = t.coords();
    c.insert(c.end(), cs.begin(), cs.end());
    c.insert(c.end(), ct.begin(), ct.end());
    return c;
}

const BlockVector& ChevalleyElement::component(RepTag tag) const {
    switch (tag) {
        case RepTag::V: return v;
        case RepTag::Splus: return s;
        case RepTag::Sminus: return t;
    }
    return v;
}

Rational quad(const BlockVector& x) { return x.first().det() - x.second().det(); }

Rational polar(const BlockVector& x, const BlockVector& y) {
    if (x.tag() != y.tag()) throw std::invalid_argument("polar form needs vectors from the same summand");
    Rational half(1, 2);
    return half * ((x.first() * adjugate(y.first())).trace() - (x.second() * adjugate(y.second())).trace());
}

const Matrix& gram_matrix() {
    static const Matrix g = [] {
        Matrix m(8, 8);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j)
                m(i, j) = polar(BlockVector::basis(RepTag::V, i), BlockVector::basis(RepTag::V, j));
        return m;
    }();
    return g;
}

namespace {

// V ⊗ S⁺ → S⁻
BlockVector mul_vs(const BlockVector& v, const BlockVector& s) {
    const Block2& a = v.first();
    const Block2& b = v.second();
    const Block2& x = s.first();
    const Block2& y = s.second();
    return {RepTag::Sminus, adjugate(a) * adjugate(x) + adjugate(y) * b, b * x + y * adjugate(a)};
}

// V ⊗ S⁻ → S⁺, adjoint to mul_vs under the polar forms.
BlockVector mul_vt(const BlockVector& v, const BlockVector& t) {
    const Block2& a = v.first();
    const Block2& b = v.second();
    const Block2& z = t.first();
    const Block2& w = t.second();
    return {RepTag::Splus, adjugate(z) * adjugate(a) - adjugate(b) * w, w * a - b * adjugate(z)};
}

// S⁺ ⊗ S⁻ → V, fixed by polar(s·t, v) = polar(v·s, t).
BlockVector mul_st(const BlockVector& s, const BlockVector& t) {
    const Block2& x = s.first();
    const Block2& y = s.second();
    const Block2& z = t.first();
    const Block2& w = t.second();
    return {RepTag::V, adjugate(x) * adjugate(z) - adjugate(w) * y, w * adjugate(x) - y * z};
}

}  // namespace

BlockVector cliff_mul(const BlockVector& x, const BlockVector& y) {
    const RepTag tx = x.tag();
    const RepTag ty = y.tag();
    third(tx, ty);  // rejects equal tags
    if (tx == RepTag::V) return ty == RepTag::Splus ? mul_vs(x, y) : mul_vt(x, y);
    if (ty == RepTag::V) return tx == RepTag::Splus ? mul_vs(y, x) : mul_vt(y, x);
    return tx == RepTag::Splus ? mul_st(x, y) : mul_st(y, x);
}

std::array<Rational, 3> trilinear_evaluations(const BlockVector& v, const BlockVector& s, const BlockVector& t) {
    if (v.tag() != RepTag::V || s.tag() != RepTag::Splus || t.tag() != RepTag::Sminus)
        throw std::invalid_argument("trilinear form takes arguments from V, S+, S- in that order");
    return {polar(cliff_mul(v, s), t), polar(cliff_mul(v, t), s), polar(cliff_mul(s, t), v)};
}

Rational trilinear(const BlockVector& v, const BlockVector& s, const BlockVector& t) {
    auto e = trilinear_evaluations(v, s, t);
    if (!(e[0] == e[1] && e[1] == e[2])) throw std::logic_error("trilinear form evaluations disagree");
    return e[0];
}

Matrix mult_map(const BlockVector& x, RepTag domain) {
    std::vector<Vec> cols;
    cols.reserve(8);
    for (std::size_t j = 0; j < 8; ++j) cols.push_back(cliff_mul(x, BlockVector::basis(domain, j)).coords());
    return Matrix::from_columns(cols, 8);
}

Matrix mult_matrix(const BlockVector& x) { return mult_map(x, successor(x.tag())); }

BlockVector oct_mul(const BlockVector& x, const BlockVector& y) {
    if (x.tag() != RepTag::V || y.tag() != RepTag::V) throw std::invalid_argument("octonion product is defined on V");
    const Block2& a = x.first();
    const Block2& b = x.second();
    const Block2& c = y.first();
    const Block2& d = y.second();
    return {RepTag::V, a * c + adjugate(d) * b, d * a + b * adjugate(c)};
}

BlockVector oct_conj(const BlockVector& x) {
    if (x.tag() != RepTag::V) throw std::invalid_argument("octonion conjugation is defined on V");
    return {RepTag::V, adjugate(x.first()), -x.second()};
}

namespace {

ChevalleyElement apply_unit_involution(RepTag fixed, const ChevalleyElement& x) {
    const BlockVector e = BlockVector::unit(fixed);
    ChevalleyElement out;
    auto slot = [&out](RepTag t) -> BlockVector& {
        switch (t) {
            case RepTag::V: return out.v;
            case RepTag::Splus: return out.s;
            case RepTag::Sminus: return out.t;
        }
        return out.v;
    };
    const BlockVector& xk = x.component(fixed);
    slot(fixed) = (Rational(2) * polar(xk, e)) * e - xk;
    for (RepTag other : {successor(fixed), predecessor(fixed)})
        slot(third(fixed, other)) = cliff_mul(e, x.component(other));
    return out;
}

Matrix involution_matrix(RepTag fixed) {
    std::vector<Vec> cols;
    cols.reserve(24);
    for (std::size_t j = 0; j < 24; ++j) {
        Vec c(24);
        c[j] = 1;
        cols.push_back(apply_unit_involution(fixed, ChevalleyElement::from_coords(c)).coords());
    }
    return Matrix::from_columns(cols, 24);
}

}  // namespace

const Matrix& rho(const S3Element& u) {
    static const std::array<Matrix, 6> table = [] {
        Matrix sigma = involution_matrix(RepTag::V);
        Matrix sigma_tau = involution_matrix(RepTag::Splus);
        Matrix sigma_tau2 = involution_matrix(RepTag::Sminus);
        // order of S3Element::all(): 1, σ, τ, τ², στ, στ²
        return std::array<Matrix, 6>{Matrix::identity(24), sigma, sigma * sigma_tau,
                                     sigma * sigma_tau2, sigma_tau, sigma_tau2};
    }();
    const auto all = S3Element::all();
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == u) return table[i];
    throw std::logic_error("unreachable: S3 element not enumerated");
}

ChevalleyElement act(const S3Element& u, const ChevalleyElement& x) {
    Vec c = x.coords();
    return ChevalleyElement::from_coords(rho(u) * c);
}

BlockVector act(const S3Element& u, const BlockVector& x) {
    return act(u, ChevalleyElement::embed(x)).component(tag_from_index(u(index_of(x.tag()))));
}

const Matrix& chevalley_gram() {
    static const Matrix g = [] {
        Matrix m(24, 24);
        const Matrix& b = gram_matrix();
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t i = 0; i < 8; ++i)
                for (std::size_t j = 0; j < 8; ++j) m(8 * k + i, 8 * k + j) = b(i, j);
        return m;
    }();
    return g;
}

bool is_triality_triple(const Matrix& a, const Matrix& b, const Matrix& c) {
    for (const Matrix* m : {&a, &b, &c}) {
        if (m->rows() != 8 || m->cols() != 8) throw std::invalid_argument("triality triple needs 8x8 matrices");
        if (!(m->transpose() * gram_matrix() * *m == gram_matrix())) return false;
    }
    auto apply = [](const Matrix& m, const BlockVector& x) {
        Vec c = x.coords();
        return BlockVector::from_coords(RepTag::V, m * c);
    };
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            BlockVector u = BlockVector::basis(RepTag::V, i);
            BlockVector v = BlockVector::basis(RepTag::V, j);
            if (!(oct_mul(apply(a, u), apply(b, v)) == apply(c, oct_mul(u, v)))) return false;
        }
    return true;
}

namespace {

// Sign of e_I ∧ e_J in the increasing-monomial basis; 0 if I, J overlap.
int wedge_sign(unsigned I, unsigned J) {
    if (I & J) return 0;
    int swaps = 0;
    for (unsigned j = J; j; j &= j - 1) {
        unsigned bit = j & (~j + 1);
        swaps += std::popcount(I & ~(bit | (bit - 1)));  // elements of I above this element of J
    }
    return swaps % 2 ? -1 : 1;
}

// β reverses a degree-k monomial: sign (−1)^{k(k−1)/2}.
int reversal_sign(unsigned I) {
    int k = std::popcount(I);
    return (k * (k - 1) / 2) % 2 ? -1 : 1;
}

}  // namespace

SpinorPairingReport spinor_pairing(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("spinor_pairing: n must lie in [1, 10]");
    const unsigned top = (1u << n) - 1;
    std::vector<unsigned> even, odd;
    for (unsigned I = 0; I <= top; ++I) (std::popcount(I) % 2 ? odd : even).push_back(I);

    auto pairing = [&](const std::vector<unsigned>& rows, const std::vector<unsigned>& cols) {
        Matrix g(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) {
                unsigned I = rows[i], J = cols[j];
                if ((I | J) != top) continue;  // only the top-degree component survives
                g(i, j) = reversal_sign(I) * wedge_sign(I, J);
            }
        return g;
    };

    Matrix pp = pairing(even, even);
    Matrix mm = pairing(odd, odd);
    Matrix pm = pairing(even, odd);

    SpinorPairingReport r;
    r.n = n;
    r.dim_even = even.size();
    r.dim_odd = odd.size();
    r.vanishes_on_halves = pp.is_zero() && mm.is_zero();
    r.cross_nondegenerate = rank(pm) == even.size() && even.size() == odd.size();
    r.halves_nondegenerate = rank(pp) == even.size() && rank(mm) == odd.size();
    r.symmetric = !r.vanishes_on_halves && pp == pp.transpose() && mm == mm.transpose();
    r.antisymmetric = !r.vanishes_on_halves && pp == -pp.transpose() && mm == -mm.transpose();
    return r;
}

SpinSumReport spin_sum_dims(int m, int n) {
    if (m < 1 || n < 1 || m + n > 20) throw std::invalid_argument("spin_sum_dims: need m, n >= 1 and m + n <= 20");
    const unsigned low = (1u << m) - 1;
    SpinSumReport r;
    r.m = m;
    r.n = n;

    // Target index sets: pairs (I, J) of monomials of the two factors.
    std::map<std::pair<unsigned, unsigned>, int> hits;
    bool parity_ok = true;
    for (unsigned K = 0; K < (1u << (m + n)); ++K) {
        unsigned I = K & low;
        unsigned J = K >> m;
        bool even_total = std::popcount(K) % 2 == 0;
        bool even_split = std::popcount(I) % 2 == std::popcount(J) % 2;
        if (even_total != even_split) parity_ok = false;
        (even_total ? r.dim_even : r.dim_odd) += 1;
        hits[{I, J}] += 1;
    }
    for (unsigned I = 0; I <= low; ++I)
        for (unsigned J = 0; J < (1u << n); ++J) {
            bool same = std::popcount(I) % 2 == std::popcount(J) % 2;
            (same ? r.even_split : r.odd_split) += 1;
        }
    bool one_to_one = hits.size() == (std::size_t{1} << (m + n));
    for (const auto& [key, count] : hits)
        if (count != 1) one_to_one = false;
    r.bijection_ok = parity_ok && one_to_one && r.dim_even == r.even_split && r.dim_odd == r.odd_split;
    return r;
}

Block2 random_block(Rng& rng, long lo, long hi) {
    Block2 b;
    for (auto& x : b.e) x = random_rational(rng, lo, hi);
    return b;
}

BlockVector random_block_vector(RepTag tag, Rng& rng, long lo, long hi) {
    Block2 a = random_block(rng, lo, hi);
    Block2 b = random_block(rng, lo, hi);
    return {tag, a, b};
}

}  // namespace triality
