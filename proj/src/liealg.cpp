#include "triality/liealg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace triality {

bool Root::is_positive() const {
    for (int x : e)
        if (x != 0) return x > 0;
    return false;
}

std::string Root::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < 4; ++i) {
        if (e[i] == 0) continue;
        std::string coef = (e[i] == 1 || e[i] == -1) ? "" : std::to_string(std::abs(e[i]));
        out += (e[i] < 0 ? "-" : (out.empty() ? "" : "+")) + coef + "e" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

const Root& SimpleRootLabels::operator[](std::size_t i) const {
    switch (i) {
        case 0: return f0;
        case 1: return f1;
        case 2: return f2;
        case 3: return f3;
    }
    throw std::out_of_range("simple root index");
}

bool is_root(const Root& r) {
    int nonzero = 0;
    for (int x : r.e) {
        if (x == 0) continue;
        if (x != 1 && x != -1) return false;
        ++nonzero;
    }
    return nonzero == 2;
}

RootSystem root_system() {
    RootSystem rs;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    Root r;
                    r.e[static_cast<std::size_t>(i)] = si;
                    r.e[static_cast<std::size_t>(j)] = sj;
                    rs.roots.push_back(r);
                    (r.is_positive() ? rs.positive : rs.negative).push_back(r);
                }
    std::sort(rs.roots.begin(), rs.roots.end());
    std::sort(rs.positive.begin(), rs.positive.end());
    std::sort(rs.negative.begin(), rs.negative.end());
    return rs;
}

Root from_simple(const SimpleCoords& c) {
    Root r;
    for (std::size_t i = 0; i < 4; ++i) r = r + c[i] * kSimpleRoots[i];
    return r;
}

namespace {

Matrix simple_root_columns() {
    Matrix f(4, 4);
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t i = 0; i < 4; ++i) f(i, j) = kSimpleRoots[j].e[i];
    return f;
}

Matrix inverse4(const Matrix& m) {
    std::vector<std::vector<Rational>> a(4, std::vector<Rational>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) a[i][j] = m(i, j);
    Matrix inv(4, 4);
    for (std::size_t col = 0; col < 4; ++col) {
        std::vector<Rational> rhs(4);
        rhs[col] = 1;
        auto x = solve_linear(a, rhs);
        for (std::size_t i = 0; i < 4; ++i) inv(i, col) = x[i];
    }
    return inv;
}

}  // namespace

SimpleCoords to_simple(const Root& r) {
    static const Matrix finv = inverse4(simple_root_columns());
    Vec v(4);
    for (std::size_t i = 0; i < 4; ++i) v[i] = r.e[i];
    Vec c = finv * v;
    SimpleCoords out{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (!c[i].is_integer()) throw std::invalid_argument("not in the root lattice: " + r.to_string());
        out[i] = static_cast<int>(c[i].to_int64());
    }
    return out;
}

Root CartanAction::apply(const Root& r) const {
    Vec v(4);
    for (std::size_t i = 0; i < 4; ++i) v[i] = r.e[i];
    Vec w = m * v;
    Root out;
    for (std::size_t i = 0; i < 4; ++i) {
        if (!w[i].is_integer()) throw std::logic_error("Cartan action left the root lattice");
        out.e[i] = static_cast<int>(w[i].to_int64());
    }
    return out;
}

CartanAction triality_on_cartan(const S3Element& u) {
    // Columns: images of f₀..f₃. Outer node f_{1+k} ↔ summand k.
    Matrix images(4, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        std::size_t target = j == 0 ? 0 : static_cast<std::size_t>(1 + u(static_cast<int>(j) - 1));
        for (std::size_t i = 0; i < 4; ++i) images(i, j) = kSimpleRoots[target].e[i];
    }
    static const Matrix finv = inverse4(simple_root_columns());
    return {images * finv};
}

namespace {

// Cycle lengths of u acting on the 24 roots.
std::vector<int> root_cycles(const CartanAction& a) {
    const auto rs = root_system();
    std::set<Root> seen;
    std::vector<int> cycles;
    for (const auto& r : rs.roots) {
        if (seen.count(r)) continue;
        int len = 0;
        Root x = r;
        do {
            seen.insert(x);
            x = a.apply(x);
            ++len;
        } while (!(x == r));
        cycles.push_back(len);
    }
    return cycles;
}

std::vector<Eisenstein> roots_of_unity(int order) {
    switch (order) {
        case 1: return {Eisenstein(1)};
        case 2: return {Eisenstein(1), Eisenstein(-1)};
        case 3: return {Eisenstein(1), Eisenstein::omega(), Eisenstein::omega_squared()};
    }
    throw std::logic_error("S3 elements have order 1, 2 or 3");
}

Matrix matrix_power(const Matrix& m, int k) {
    Matrix p = Matrix::identity(m.rows());
    for (int i = 0; i < k; ++i) p = p * m;
    return p;
}

}  // namespace

Eisenstein adjoint_trace(const S3Element& u) {
    const CartanAction a = triality_on_cartan(u);
    int fixed = 0;
    for (int len : root_cycles(a))
        if (len == 1) ++fixed;
    return Eisenstein(a.m.trace() + Rational(fixed));
}

std::vector<std::pair<Eisenstein, int>> adjoint_decomposition(const S3Element& u) {
    const CartanAction a = triality_on_cartan(u);
    const int d = u.order();
    const auto lambdas = roots_of_unity(d);

    std::vector<std::pair<Eisenstein, int>> out;
    for (const auto& lambda : lambdas) {
        // On h: multiplicity of λ is (1/d) Σ_k tr(T^k) λ^{-k}.
        Eisenstein acc;
        for (int k = 0; k < d; ++k)
            acc += Eisenstein(matrix_power(a.m, k).trace()) * pow(lambda.conj(), static_cast<unsigned>(k));
        acc /= Eisenstein(d);
        if (!acc.is_rational() || !acc.real_part().is_integer()) throw std::logic_error("non-integral Cartan multiplicity");
        int mult = static_cast<int>(acc.real_part().to_int64());
        // On root spaces: an orbit of length ℓ spans a cyclic permutation
        // module, contributing each ℓ-th root of unity once.
        for (int len : root_cycles(a))
            if (pow(lambda, static_cast<unsigned>(len)) == Eisenstein(1)) ++mult;
        if (mult > 0) out.emplace_back(lambda, mult);
    }
    return out;
}

PositiveRootArrayReport positive_root_array_check() {
    PositiveRootArrayReport rep;
    // Rows of the array; columns are read top to bottom.
    rep.array = {{
        {{{0, 1, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 1}, {1, 0, 0, 0}}},
        {{{0, 0, 1, 0}, {1, 0, 1, 0}, {1, 1, 0, 1}, {1, 1, 1, 1}}},
        {{{0, 0, 0, 1}, {1, 0, 0, 1}, {1, 1, 1, 0}, {2, 1, 1, 1}}},
    }};
    const CartanAction tau = triality_on_cartan(S3Element::tau());
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 4; ++c) rep.images[r][c] = to_simple(tau.apply(from_simple(rep.array[r][c])));

    for (std::size_t c = 0; c < 3; ++c) {
        bool ok = true;
        for (std::size_t r = 0; r < 3; ++r) ok = ok && rep.images[r][c] == rep.array[(r + 1) % 3][c];
        rep.cycled[c] = ok;
    }
    rep.last_column_fixed = true;
    for (std::size_t r = 0; r < 3; ++r)
        rep.last_column_fixed = rep.last_column_fixed && rep.images[r][3] == rep.array[r][3];

    std::vector<Root> listed;
    for (const auto& row : rep.array)
        for (const auto& c : row) listed.push_back(from_simple(c));
    std::sort(listed.begin(), listed.end());
    rep.covers_positive_roots = listed == root_system().positive;
    return rep;
}

}  // namespace triality
