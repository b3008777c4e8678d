#include "triality/checks.hpp"

#include "triality/clifford.hpp"
#include "triality/concordance.hpp"
#include "triality/isotropic.hpp"
#include "triality/lefschetz.hpp"
#include "triality/liealg.hpp"
#include "triality/reps.hpp"
#include "triality/schottky.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <set>
#include <sstream>

namespace triality {

Rng CheckContext::rng(const std::string& check_name) const {
    // FNV-1a of the name selects the stream.
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : check_name) h = (h ^ c) * 1099511628211ULL;
    return make_rng(seed, h);
}

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::error: return "error";
    }
    return "error";
}

namespace {

CheckOutcome pass(std::string detail) { return {true, std::move(detail)}; }
CheckOutcome fail(std::string detail) { return {false, std::move(detail)}; }

template <class... Ts>
std::string cat(const Ts&... xs) {
    std::ostringstream os;
    (os << ... << xs);
    return os.str();
}

std::string str(const BlockVector& x) { return cat(x); }

RepTag random_tag(Rng& rng) { return tag_from_index(static_cast<int>(random_int(rng, 0, 2))); }

BlockVector random_member(const IsotropicSubspace& u, Rng& rng) {
    for (;;) {
        BlockVector x = BlockVector::zero(u.tag());
        for (const auto& b : u.basis()) x = x + random_rational(rng, -4, 4) * b;
        if (!x.is_zero()) return x;
    }
}

// Isotropic subspaces of dimension 3 built as A_s ∩ B_t with s·t = 0; the
// result lies in pred(tag s).
IsotropicSubspace three_space(RepTag home, Rng& rng) {
    const RepTag s_tag = successor(home);
    for (;;) {
        IsotropicVector s = random_isotropic(s_tag, rng);
        IsotropicVector t(random_member(b_space(s), rng));
        Subspace w = intersect(a_space(s).space(), b_space(t).space());
        if (w.dim() == 3) return IsotropicSubspace(home, w);
    }
}

// ---------------------------------------------------------------- clifford

CheckOutcome adjugate_identity(const CheckContext& c) {
    Rng rng = c.rng("adjugate-identity");
    for (int i = 0; i < c.trials; ++i) {
        Block2 m = random_block(rng), n = random_block(rng);
        Block2 d = m.det() * Block2::identity();
        if (!(m * adjugate(m) == d) || !(adjugate(m) * m == d)) return fail(cat("m·adj m ≠ det·1 at trial ", i));
        if (!(adjugate(adjugate(m)) == m)) return fail(cat("adj not involutive at trial ", i));
        if (!(adjugate(m + n) == adjugate(m) + adjugate(n))) return fail(cat("adj not additive at trial ", i));
    }
    return pass(cat(c.trials, " random 2×2 blocks"));
}

CheckOutcome rankdrop_det(const CheckContext& c) {
    Rng rng = c.rng("rankdrop-det");
    const int generic = c.trials, isotropic = std::max(20, c.trials / 4);
    for (int i = 0; i < generic; ++i) {
        BlockVector x = random_block_vector(tag_from_index(i % 3), rng);
        Rational d = determinant(mult_matrix(x)), q = quad(x);
        if (!(d == -pow(q, 4))) return fail(cat("det ", d, " ≠ −q⁴ = ", -pow(q, 4), " for x = ", str(x)));
    }
    for (int i = 0; i < isotropic; ++i) {
        IsotropicVector x = random_isotropic(tag_from_index(i % 3), rng);
        Matrix m = mult_matrix(x.vec());
        if (!determinant(m).is_zero()) return fail(cat("nonzero det for isotropic ", str(x.vec())));
        if (rank(m) != 4) return fail(cat("rank ", rank(m), " ≠ 4 for isotropic ", str(x.vec())));
    }
    return pass(cat(generic, " generic and ", isotropic, " isotropic vectors; isotropic rank 4"));
}

CheckOutcome trilinear_symmetry(const CheckContext& c) {
    Rng rng = c.rng("trilinear-symmetry");
    const BlockVector v0 = BlockVector::unit(RepTag::V), s0 = BlockVector::unit(RepTag::Splus),
                      t0 = BlockVector::unit(RepTag::Sminus);
    if (!(cliff_mul(v0, s0) == t0)) return fail(cat("v₀·s₀ = ", str(cliff_mul(v0, s0)), " ≠ t₀"));
    if (!(trilinear(v0, s0, t0) == Rational(1))) return fail("trilinear(v₀, s₀, t₀) ≠ 1");
    for (int i = 0; i < c.trials; ++i) {
        BlockVector v = random_block_vector(RepTag::V, rng), s = random_block_vector(RepTag::Splus, rng),
                    t = random_block_vector(RepTag::Sminus, rng);
        auto e = trilinear_evaluations(v, s, t);
        if (!(e[0] == e[1] && e[1] == e[2])) return fail(cat("evaluations ", e[0], ", ", e[1], ", ", e[2], " differ"));
        if (!(cliff_mul(v, s) == cliff_mul(s, v))) return fail("Clifford multiplication not symmetric");
    }
    return pass(cat(c.trials, " triples; trilinear(v₀, s₀, t₀) = 1"));
}

CheckOutcome rho_homomorphism(const CheckContext&) {
    const auto g = S3Element::all();
    int pairs = 0;
    for (const auto& a : g)
        for (const auto& b : g) {
            if (!(rho(a * b) == rho(a) * rho(b))) return fail(cat("ρ(", a.name(), b.name(), ") ≠ ρ(", a.name(), ")ρ(", b.name(), ")"));
            ++pairs;
        }
    for (const auto& a : g)
        if (!(rho(a).transpose() * chevalley_gram() * rho(a) == chevalley_gram())) return fail(cat("ρ(", a.name(), ") not orthogonal"));
    const Matrix& s = rho(S3Element::sigma());
    if (!(s * s == Matrix::identity(24))) return fail("ρ(σ)² ≠ 1");
    if (!(s * rho(S3Element::tau()) * s == rho(S3Element::tau_squared()))) return fail("ρ(σ)ρ(τ)ρ(σ) ≠ ρ(τ²)");
    if (!(rho(S3Element::identity()) == Matrix::identity(24))) return fail("ρ(1) ≠ 1");
    return pass(cat(pairs, " pairs; all six images orthogonal"));
}

CheckOutcome triality_equivariance(const CheckContext& c) {
    Rng rng = c.rng("triality-equivariance");
    for (int i = 0; i < c.trials; ++i) {
        std::array<BlockVector, 3> x{random_block_vector(RepTag::V, rng), random_block_vector(RepTag::Splus, rng),
                                     random_block_vector(RepTag::Sminus, rng)};
        const Rational before = trilinear(x[0], x[1], x[2]);
        for (const auto& u : S3Element::all()) {
            std::array<BlockVector, 3> y;
            for (const auto& xi : x) {
                BlockVector img = act(u, xi);
                if (!(quad(img) == quad(xi))) return fail(cat("ρ(", u.name(), ") changes quad of ", str(xi)));
                y[static_cast<std::size_t>(index_of(img.tag()))] = img;
            }
            const Rational after = trilinear(y[0], y[1], y[2]);
            if (!(after == before)) return fail(cat("trilinear ", before, " → ", after, " under ρ(", u.name(), ")"));
        }
    }
    return pass(cat(c.trials, " triples × 6 group elements"));
}

Matrix signed_identity(int s) { return Matrix::identity(8).scaled(Rational(s)); }

CheckOutcome center_triples(const CheckContext&) {
    const std::array<std::array<int, 3>, 4> center{{{1, 1, 1}, {1, -1, -1}, {-1, -1, 1}, {-1, 1, -1}}};
    for (const auto& z : center)
        if (!is_triality_triple(signed_identity(z[0]), signed_identity(z[1]), signed_identity(z[2])))
            return fail(cat("(", z[0], ",", z[1], ",", z[2], ") rejected"));
    if (is_triality_triple(signed_identity(1), signed_identity(1), signed_identity(-1))) return fail("(1,1,−1) accepted");
    // Conjugating a central element by ρ(u) permutes its three signs.
    for (const auto& z : center) {
        Matrix m(24, 24);
        for (std::size_t i = 0; i < 24; ++i) m(i, i) = z[i / 8];
        for (const auto& u : S3Element::all()) {
            Matrix conj = rho(u) * m * rho(u.inverse());
            std::array<int, 3> w{};
            for (std::size_t k = 0; k < 3; ++k) {
                const std::size_t src = static_cast<std::size_t>(u.inverse()(static_cast<int>(k)));
                w[k] = z[src];
            }
            Matrix expect(24, 24);
            for (std::size_t i = 0; i < 24; ++i) expect(i, i) = w[i / 8];
            if (!(conj == expect)) return fail(cat("ρ(", u.name(), ") conjugate of a central element is not central"));
            if (!is_triality_triple(signed_identity(w[0]), signed_identity(w[1]), signed_identity(w[2])))
                return fail("conjugate central element is not a triality triple");
        }
    }
    return pass("four central elements accepted, (1,1,−1) rejected, closed under ρ(S3)");
}

CheckOutcome octonion_composition(const CheckContext& c) {
    Rng rng = c.rng("octonion-composition");
    const BlockVector one = BlockVector::unit(RepTag::V);
    for (int i = 0; i < c.trials; ++i) {
        BlockVector x = random_block_vector(RepTag::V, rng), y = random_block_vector(RepTag::V, rng);
        if (!(oct_mul(one, x) == x) || !(oct_mul(x, one) == x)) return fail(cat("unit law fails for ", str(x)));
        if (!(quad(oct_mul(x, y)) == quad(x) * quad(y))) return fail(cat("norm not multiplicative for ", str(x), ", ", str(y)));
        if (!(oct_mul(x, oct_conj(x)) == quad(x) * one)) return fail(cat("x·x̄ ≠ q(x) for ", str(x)));
    }
    return pass(cat(c.trials, " pairs: unit, x·x̄ = q(x), q(xy) = q(x)q(y)"));
}

CheckOutcome spinor_pairing_check(const CheckContext&) {
    for (int n = 1; n <= 5; ++n) {
        auto r = spinor_pairing(n);
        const std::size_t half = std::size_t{1} << (n - 1);
        if (r.dim_even != half || r.dim_odd != half) return fail(cat("n = ", n, ": wrong half-spin dimensions"));
        if (n % 2 == 1) {
            if (!r.vanishes_on_halves || !r.cross_nondegenerate) return fail(cat("n = ", n, ": odd-case pairing wrong"));
        } else {
            if (!r.halves_nondegenerate) return fail(cat("n = ", n, ": degenerate on a half"));
            if (r.symmetric != (n % 4 == 0) || r.antisymmetric != (n % 4 == 2))
                return fail(cat("n = ", n, ": symmetry ", r.symmetric, ", antisymmetry ", r.antisymmetric));
        }
    }
    return pass("n = 1..5; symmetric exactly for n = 4");
}

CheckOutcome spin_sum_check(const CheckContext&) {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            auto r = spin_sum_dims(m, n);
            const std::size_t half = std::size_t{1} << (m + n - 1);
            if (!r.bijection_ok || r.dim_even != half || r.even_split != half || r.odd_split != half)
                return fail(cat("(m, n) = (", m, ", ", n, ")"));
        }
    return pass("1 ≤ m, n ≤ 3 via explicit monomial bijection");
}

// --------------------------------------------------------------- isotropic

CheckOutcome isotropic_sampling(const CheckContext& c) {
    std::set<std::vector<Rational>> seen;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        IsotropicVector x = random_isotropic(RepTag::V, seed);
        if (!quad(x.vec()).is_zero()) return fail("sample not isotropic");
        seen.insert(x.vec().coords());
    }
    if (seen.size() < 95) return fail(cat("only ", seen.size(), " distinct vectors among seeds 1..100"));
    Rng rng = c.rng("isotropic-sampling");
    for (int i = 0; i < c.trials; ++i)
        if (!quad(random_isotropic(random_tag(rng), rng).vec()).is_zero()) return fail("sample not isotropic");
    return pass(cat(seen.size(), " distinct vectors among seeds 1..100"));
}

CheckOutcome ab_spaces(const CheckContext& c) {
    Rng rng = c.rng("ab-spaces");
    for (int i = 0; i < c.trials; ++i) {
        IsotropicVector x = random_isotropic(tag_from_index(i % 3), rng);
        // Construction asserts kernel = image and total isotropy.
        if (a_space(x).dim() != 4 || b_space(x).dim() != 4) return fail(cat("rank of m_x is not 4 for ", str(x.vec())));
    }
    return pass(cat(c.trials, " samples: dim 4, kernel = image, isotropic"));
}

CheckOutcome prod_zero(const CheckContext& c) {
    Rng rng = c.rng("prod-zero");
    int zero = 0, nonzero = 0;
    for (int i = 0; i < c.trials; ++i) {
        IsotropicVector s = random_isotropic(RepTag::Splus, rng);
        IsotropicVector t = i % 2 == 0 ? IsotropicVector(random_member(b_space(s), rng)) : random_isotropic(RepTag::Sminus, rng);
        const BlockVector st = cliff_mul(s.vec(), t.vec());
        const Subspace w = intersect(a_space(s).space(), b_space(t).space());
        const bool a = st.is_zero(), b = a_space(t).contains(s.vec()), bb = b_space(s).contains(t.vec()), d = w.dim() == 3;
        if (a != b || a != bb || a != d)
            return fail(cat("s·t = 0: ", a, ", s ∈ A_t: ", b, ", t ∈ B_s: ", bb, ", dim A_s∩B_t = ", w.dim(), " for s = ", str(s.vec())));
        if (a) {
            ++zero;
        } else {
            ++nonzero;
            if (w.dim() != 1 || !w.contains(st.coords())) return fail("A_s ∩ B_t is not spanned by s·t");
        }
    }
    if (zero == 0 || nonzero == 0) return fail("only one branch exercised");
    return pass(cat(zero, " pairs with s·t = 0, ", nonzero, " with s·t ≠ 0"));
}

CheckOutcome polarity(const CheckContext& c) {
    Rng rng = c.rng("polarity");
    int orth = 0, non = 0;
    for (int i = 0; i < c.trials; ++i) {
        IsotropicVector s = random_isotropic(RepTag::Splus, rng);
        IsotropicVector s2 = i % 2 == 0 ? random_orthogonal_isotropic(s, rng) : random_nonorthogonal_isotropic(s, rng);
        const bool o = polar(s.vec(), s2.vec()).is_zero();
        const std::size_t d = intersect(a_space(s).space(), a_space(s2).space()).dim();
        if (d != (o ? 2u : 0u)) return fail(cat("⟨s,s′⟩ = 0: ", o, " but dim A_s ∩ A_s′ = ", d));
        (o ? orth : non)++;
    }
    if (orth == 0 || non == 0) return fail("only one branch exercised");
    return pass(cat(orth, " orthogonal pairs (dim 2), ", non, " non-orthogonal (dim 0)"));
}

CheckOutcome ab_subspace_dims(const CheckContext& c) {
    Rng rng = c.rng("ab-subspace-dims");
    const std::size_t expect[4] = {4, 2, 1};
    for (int i = 0; i < c.trials; ++i) {
        const RepTag k = tag_from_index(i % 3);
        for (std::size_t d = 1; d <= 3; ++d) {
            IsotropicSubspace u = d == 3 && i % 2 == 0 ? three_space(k, rng) : random_isotropic_subspace(k, d, rng);
            auto [a, b] = ab_of_subspace(u);
            if (a.dim() != expect[d - 1] || b.dim() != expect[d - 1])
                return fail(cat("dim U = ", d, " gives dims (", a.dim(), ", ", b.dim(), ")"));
        }
        // U = A_x with x ∈ succ(k) gives A_U = B_x; U = B_x with x ∈ pred(k) gives A_U = ⟨x⟩.
        IsotropicVector x = random_isotropic(successor(k), rng);
        if (!(a_of(a_space(x)) == b_space(x))) return fail("A_U ≠ B_s for U = A_s");
        IsotropicVector y = random_isotropic(predecessor(k), rng);
        if (!(a_of(b_space(y)) == IsotropicSubspace::span_of(y))) return fail("A_U ≠ ⟨t⟩ for U = B_t");
    }
    return pass(cat(c.trials, " rounds: dims 4, 2, 1 and both plane cases"));
}

CheckOutcome ab1(const CheckContext& c) {
    Rng rng = c.rng("ab1");
    int count = 0;
    for (int i = 0; i < c.trials; ++i) {
        const RepTag k = tag_from_index(i % 3);
        for (std::size_t d : {1u, 2u, 4u}) {
            IsotropicSubspace u = random_isotropic_subspace(k, d, rng);
            auto [a, b] = ab_of_subspace(u);
            if (!(a_of(b) == u) || !(b_of(a) == u)) return fail(cat("A_{B_U} or B_{A_U} ≠ U at dim ", d));
            if (!(a_of(a) == b) || !(b_of(b) == a)) return fail(cat("A_{A_U} ≠ B_U or B_{B_U} ≠ A_U at dim ", d));
            ++count;
        }
    }
    return pass(cat(count, " subspaces of dims 1, 2, 4"));
}

CheckOutcome ab2(const CheckContext& c) {
    Rng rng = c.rng("ab2");
    for (int i = 0; i < c.trials; ++i) {
        IsotropicSubspace u = random_isotropic_subspace(tag_from_index(i % 3), 2, rng);
        for (bool use_b : {true, false}) {
            IsotropicSubspace r = use_b ? b_of(u) : a_of(u);
            for (const auto& x : u.basis())
                for (const auto& y : r.basis())
                    if (!cliff_mul(x, y).is_zero()) return fail("Clifford product does not vanish on U⊗R");
            const bool first = u == a_of(r) && r == b_of(u);
            const bool second = r.tag() == predecessor(u.tag()) && u == b_of(r) && r == a_of(u);
            if (!(first || second)) return fail("neither U = A_R, R = B_U nor U = B_R, R = A_U");
        }
    }
    return pass(cat(c.trials, " planes with R = B_U and R = A_U"));
}

CheckOutcome ab3(const CheckContext& c) {
    Rng rng = c.rng("ab3");
    int even = 0, odd = 0;
    for (int i = 0; i < c.trials; ++i) {
        IsotropicSubspace u = random_isotropic_subspace(tag_from_index(i % 3), static_cast<std::size_t>(1 + i % 4), rng);
        const IsotropicSubspace a = a_of(u);
        for (const auto& g : S3Element::all()) {
            const IsotropicSubspace gu = transform(g, u);
            const IsotropicSubspace lhs = transform(g, a);
            const IsotropicSubspace rhs = g.sign() > 0 ? a_of(gu) : b_of(gu);
            if (!(lhs == rhs)) return fail(cat("ρ(", g.name(), ")A_U ≠ ", g.sign() > 0 ? "A" : "B", "_{gU} at dim ", u.dim()));
            (g.sign() > 0 ? even : odd)++;
        }
    }
    return pass(cat(even, " even and ", odd, " odd instances"));
}

CheckOutcome ab_sequences(const CheckContext& c) {
    Rng rng = c.rng("ab-sequences");
    for (int i = 0; i < c.trials; ++i) {
        IsotropicVector s = random_isotropic(tag_from_index(i % 3), rng);
        // A_s ↪ pred → succ, the last map being multiplication by s with image B_s.
        const Matrix m = mult_map(s.vec(), predecessor(s.tag()));
        const Subspace ker = kernel(m), img = image(m);
        if (!(ker == a_space(s).space())) return fail("kernel of multiplication by s is not A_s");
        if (!(img == b_space(s).space())) return fail("image of multiplication by s is not B_s");
        if (ker.dim() + img.dim() != 8) return fail("dimensions do not add to 8");
    }
    return pass(cat(c.trials, " isotropic vectors; 4 + 4 = 8"));
}

CheckOutcome zero_norm(const CheckContext& c) {
    Rng rng = c.rng("zero-norm");
    std::size_t rank_one = 0, rank_zero = 0;
    for (int i = 0; i < c.trials; ++i) {
        const RepTag k = tag_from_index(i % 3);
        IsotropicSubspace u1 = random_isotropic_subspace(k, 1, rng);
        IsotropicSubspace u2 = random_isotropic_subspace(k, 2, rng);
        for (const auto& g : S3Element::all()) {
            if (!g.is_involution() || g(index_of(k)) == index_of(k)) continue;
            if (mu_rank(u1, g) != 0) return fail(cat("μ ≠ 0 on a line, g = ", g.name()));
            const std::size_t r = mu_rank(u2, g);
            if (r > 1) return fail(cat("rank μ = ", r, " on a plane, g = ", g.name()));
            (r == 1 ? rank_one : rank_zero)++;
            if (!mu_symmetric_part_vanishes(u2, g)) return fail("μ does not kill S²U");
        }
    }
    return pass(cat("lines: μ = 0; planes: rank 0 in ", rank_zero, ", rank 1 in ", rank_one, " cases"));
}

// ----------------------------------------------------------------- liealg

CheckOutcome root_system_check(const CheckContext&) {
    const auto rs = root_system();
    if (rs.roots.size() != 24 || rs.positive.size() != 12) return fail("wrong root count");
    for (const auto& r : rs.roots)
        if (!is_root(-r)) return fail("not closed under negation");
    if (!(from_simple({1, 1, 1, 1}) == Root{{1, 0, 1, 0}})) return fail("f₀+f₁+f₂+f₃ ≠ e₁+e₃");
    if (!(from_simple({2, 1, 1, 1}) == Root{{1, 1, 0, 0}})) return fail("2f₀+f₁+f₂+f₃ ≠ e₁+e₂");
    return pass("24 roots, 12 positive, highest root e₁+e₂");
}

CheckOutcome cartan_action(const CheckContext&) {
    Matrix d = Matrix::identity(4);
    d(3, 3) = -1;
    if (!(triality_on_cartan(S3Element::sigma()).m == d)) return fail("σ is not e₄ ↦ −e₄");
    const Matrix t = triality_on_cartan(S3Element::tau()).m;
    if (!(t * t * t == Matrix::identity(4))) return fail("τ³ ≠ 1");
    if (!(triality_on_cartan(S3Element::tau()).apply(kSimpleRoots.f0) == kSimpleRoots.f0)) return fail("τ moves f₀");
    const auto rs = root_system();
    for (const auto& u : S3Element::all()) {
        const auto a = triality_on_cartan(u);
        if (!(a.m.transpose() * a.m == Matrix::identity(4))) return fail(cat(u.name(), " is not orthogonal"));
        for (const auto& r : rs.roots)
            if (!is_root(a.apply(r))) return fail(cat(u.name(), " sends ", r.to_string(), " outside the roots"));
        for (const auto& v : S3Element::all())
            if (!(triality_on_cartan(u * v).m == a.m * triality_on_cartan(v).m)) return fail("not a homomorphism");
    }
    return pass("σ = diag(1,1,1,−1), τ³ = 1, roots permuted, homomorphism");
}

CheckOutcome adjoint_trace_check(const CheckContext&) {
    const Eisenstein id = adjoint_trace(S3Element::identity()), s = adjoint_trace(S3Element::sigma()),
                     t = adjoint_trace(S3Element::tau());
    if (!(id == Eisenstein(28)) || !(s == Eisenstein(14)) || !(t == Eisenstein(7)))
        return fail(cat("traces ", id, ", ", s, ", ", t));
    for (const auto& u : S3Element::all()) {
        const Eisenstein expect = u.is_identity() ? id : (u.is_involution() ? s : t);
        if (!(adjoint_trace(u) == expect)) return fail(cat("trace of ", u.name(), " is not a class function"));
    }
    return pass("1 ↦ 28, σ ↦ 14, τ ↦ 7, constant on classes");
}

std::string decomposition_string(const std::vector<std::pair<Eisenstein, int>>& d) {
    std::string out;
    for (const auto& [l, m] : d) out += cat(out.empty() ? "" : ", ", l, ":", m);
    return out;
}

CheckOutcome adjoint_decomposition_check(const CheckContext&) {
    using D = std::vector<std::pair<Eisenstein, int>>;
    if (adjoint_decomposition(S3Element::sigma()) != D{{1, 21}, {-1, 7}})
        return fail("σ: " + decomposition_string(adjoint_decomposition(S3Element::sigma())));
    if (adjoint_decomposition(S3Element::tau()) != D{{1, 14}, {Eisenstein::omega(), 7}, {Eisenstein::omega_squared(), 7}})
        return fail("τ: " + decomposition_string(adjoint_decomposition(S3Element::tau())));
    if (adjoint_decomposition(S3Element::identity()) != D{{1, 28}}) return fail("identity");
    for (const auto& u : S3Element::all()) {
        int total = 0;
        Eisenstein weighted;
        for (const auto& [l, m] : adjoint_decomposition(u)) {
            total += m;
            weighted += Eisenstein(m) * l;
        }
        if (total != 28 || !(weighted == adjoint_trace(u))) return fail(cat(u.name(), ": multiplicities inconsistent with trace"));
    }
    return pass("σ: 21 ⊕ 7⁻, τ: 14 ⊕ 7^ω ⊕ 7^ω²");
}

CheckOutcome positive_root_array(const CheckContext&) {
    const auto rep = positive_root_array_check();
    if (!rep.ok()) return fail("array columns not permuted as expected");
    const auto tau = triality_on_cartan(S3Element::tau());
    if (!(to_simple(tau.apply(kSimpleRoots.f1)) == SimpleCoords{0, 0, 1, 0})) return fail("τ(f₁) ≠ f₂");
    if (!(to_simple(tau.apply(from_simple({1, 1, 1, 0}))) == SimpleCoords{1, 0, 1, 1})) return fail("τ(f₀+f₁+f₂) ≠ f₀+f₂+f₃");
    return pass("first three columns cycled, last column fixed");
}

// ------------------------------------------------------------------- reps

CheckOutcome character_tables(const CheckContext&) {
    const auto& s3 = s3_table();
    const auto& s4 = s4_table();
    if (!s3.orthogonal() || !s4.orthogonal()) return fail("orthogonality fails");
    if (s3.order() != 6 || s4.order() != 24) return fail("wrong group orders");
    if (!(s3.irreducibles[2].values[1] == Eisenstein(0)) || !(s3.irreducibles[1].values[1] == Eisenstein(-1)))
        return fail("S3 values");
    if (!(s4.irreducibles[2].values[3] == Eisenstein(-1)) || !(s4.irreducibles[4].values[4] == Eisenstein(2)))
        return fail("S4 values");
    return pass("S3 and S4 tables orthogonal");
}

std::string join(const std::vector<std::int64_t>& v) {
    std::string out;
    for (auto x : v) out += cat(out.empty() ? "" : ",", x);
    return "(" + out + ")";
}

CheckOutcome decompose_check(const CheckContext& c) {
    Rng rng = c.rng("decompose");
    for (const CharTable* t : {&s3_table(), &s4_table()}) {
        const std::size_t n = t->irreducibles.size();
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::int64_t> unit(n, 0);
            unit[i] = 1;
            if (decompose(character_of(*t, i)) != unit) return fail(t->group + " irreducible " + t->irreducibles[i].name);
        }
        for (int k = 0; k < c.trials; ++k) {
            std::vector<std::int64_t> m(n);
            ClassFunction f(*t, std::vector<Eisenstein>(n));
            for (std::size_t i = 0; i < n; ++i) {
                m[i] = random_int(rng, 0, 9);
                f += Eisenstein(Rational(m[i])) * character_of(*t, i);
            }
            if (solve_multiplicities(f) != inner_product_multiplicities(f)) return fail("solver and inner product disagree");
            if (decompose(f) != m) return fail(cat(t->group, ": ", join(decompose(f)), " ≠ ", join(m)));
        }
    }
    const auto& s3 = s3_table();
    if (decompose(ClassFunction(s3, {6, 0, 0})) != std::vector<std::int64_t>{1, 1, 2}) return fail("regular character");
    if (decompose(ClassFunction(s3, {336, -84, 0})) != std::vector<std::int64_t>{14, 98, 112}) return fail("(336, −84, 0)");
    if (decompose(ClassFunction(s4_table(), {33, -7, 0, 1, 1})) != std::vector<std::int64_t>{0, 3, 2, 6, 3})
        return fail("(33, −7, 0, 1, 1)");
    try {
        decompose(ClassFunction(s3, {1, 0, 0}));
        return fail("(1, 0, 0) accepted as a character");
    } catch (const NotGenuineCharacter&) {
    }
    try {
        decompose(ClassFunction(s3, {0, 2, 0}));
        return fail("negative multiplicity accepted");
    } catch (const NotGenuineCharacter&) {
    }
    return pass(cat("irreducibles, ", c.trials, " random combinations per table, fixed examples"));
}

CheckOutcome galois_structures(const CheckContext&) {
    if (galois_structure_count(1) != 1 || galois_structure_count(2) != 2 || galois_structure_count(5) != 16)
        return fail("counts for k = 1, 2, 5");
    try {
        galois_structure_count(0);
        return fail("k = 0 accepted");
    } catch (const std::invalid_argument&) {
    }
    return pass("k = 1, 2, 5 ↦ 1, 2, 16");
}

// -------------------------------------------------------------- lefschetz

CheckOutcome lefschetz_traces(const CheckContext&) {
    const std::int64_t g = 4, d = 0;
    Eisenstein s = holo_lefschetz({{-1, 14, 2 * g + 4 - 2 * d}}, 0);
    if (!(s == Eisenstein(-84))) return fail(cat("σ on ad F: ", s));
    for (std::int64_t delta = 0; delta <= 6; ++delta) {
        Eisenstein t = holo_lefschetz({{Eisenstein::omega(), 7, delta}, {Eisenstein::omega_squared(), 7, delta}}, 0);
        if (!(t == Eisenstein(Rational(-7 * delta)))) return fail(cat("τ on ad F: ", t));
    }
    for (std::int64_t gg = 3; gg <= 10; ++gg)
        for (std::int64_t delta = 0; delta <= gg + 1; ++delta) {
            Eisenstein o = holo_lefschetz({{-1, 1, 4 * gg + 8 - 4 * delta}}, 1);
            if (!(o == Eisenstein(Rational(-2 * gg - 3 + 2 * delta)))) return fail(cat("σ on 𝒪: ", o));
        }
    try {
        holo_lefschetz({{1, 1, 1}}, 0);
        return fail("tangent eigenvalue 1 accepted");
    } catch (const std::domain_error&) {
    }
    return pass("σ: −84 at (4, 0); τ: −7δ; σ on 𝒪: −2g−3+2δ");
}

CheckOutcome moduli_character(const CheckContext&) {
    int n = 0;
    for (std::int64_t g = 3; g <= 50; ++g)
        for (std::int64_t d = 0; d <= g + 1; ++d) {
            const auto m = galois_moduli_character(TrigonalData(g, d));
            const MultiplicityTriple expect{7 * g - 14, 21 * g + 14 - 14 * d, 28 * g - 7 * d};
            if (!(m == expect)) return fail(cat("(g, δ) = (", g, ", ", d, "): (", m.a, ", ", m.b, ", ", m.c, ")"));
            if (m.a + m.b + 2 * m.c != 28 * (3 * g - d)) return fail("a + b + 2c ≠ 28(3g − δ)");
            ++n;
        }
    if (galois_moduli_character(TrigonalData(4, 0)).a != 14) return fail("dimension at g = 4 is not 14");
    return pass(cat(n, " pairs (g, δ) match (7g−14, 21g+14−14δ, 28g−7δ)"));
}

CheckOutcome cyclic_dimension(const CheckContext&) {
    for (std::int64_t g = 3; g <= 50; ++g) {
        const auto r = cyclic_moduli_dim(g);
        if (!(r.a == Rational(7 * g - 14))) return fail(cat("g = ", g, ": a = ", r.a));
        if (!(r.b + r.c == Rational(21 * g - 14))) return fail(cat("g = ", g, ": b + c = ", r.b + r.c));
    }
    const auto r4 = cyclic_moduli_dim(4);
    if (!(r4.b == Rational(28)) || !(r4.c == Rational(42))) return fail(cat("g = 4: b, c = ", r4.b, ", ", r4.c));
    return pass("a = 7g−14 for 3 ≤ g ≤ 50; g = 4: (14, 28, 42)");
}

CheckOutcome hodge_decomposition(const CheckContext&) {
    int n = 0;
    for (std::int64_t g = 3; g <= 30; ++g)
        for (std::int64_t d = 0; d <= g + 1; ++d) {
            const TrigonalData t(g, d);
            const auto m = structure_sheaf_character_S4(t);
            const std::array<std::int64_t, 5> expect{0, g + 1 - d, g - 1, 2 * g + 1 - d, g};
            if (m != expect) return fail(cat("(g, δ) = (", g, ", ", d, ")"));
            if (m[0] + m[1] + 3 * m[2] + 3 * m[3] + 2 * m[4] != 12 * g + 1 - 4 * d) return fail("dimension total");
            if (m[1] != genus_suite(t).covers[1].closed_genus) return fail("ε-multiplicity ≠ genus of H");
            ++n;
        }
    return pass(cat(n, " pairs match (0, g+1−δ, g−1, 2g+1−δ, g)"));
}

CheckOutcome hyperelliptic_dimension(const CheckContext&) {
    for (std::int64_t g = 4; g <= 50; ++g)
        if (hyperelliptic_moduli_dim(g) != 7 * (g - 3)) return fail(cat("g = ", g));
    try {
        hyperelliptic_moduli_dim(3);
        return fail("g = 3 accepted");
    } catch (const std::invalid_argument&) {
    }
    return pass("(g−3)(g+5) − (g−3)(g−2) = 7(g−3) for 4 ≤ g ≤ 50");
}

CheckOutcome genus_bookkeeping(const CheckContext&) {
    int n = 0;
    for (std::int64_t g = 3; g <= 50; ++g)
        for (std::int64_t d = 0; d <= g + 2; ++d) {
            const auto r = genus_suite(TrigonalData(g, d));
            if (!r.ok()) return fail(cat("Riemann–Hurwitz mismatch at (g, δ) = (", g, ", ", d, ")"));
            if (r.cyclic != (d == g + 2)) return fail("cyclic flag");
            ++n;
        }
    const auto r = genus_suite(TrigonalData(4, 0));
    if (r.covers[2].closed_genus != 13 || r.covers[1].closed_genus != 5 || r.covers[3].closed_genus != 49)
        return fail("genera at (4, 0)");
    if (genus_suite(TrigonalData(4, 6)).galois_closure_components != 2) return fail("cyclic closure should split");
    return pass(cat(n, " pairs; genera 3g+1−δ, g+1−δ, 12g+1−4δ confirmed"));
}

CheckOutcome recillas_unramified(const CheckContext&) {
    for (std::int64_t g = 3; g <= 30; ++g)
        for (std::int64_t d = 0; d <= g + 1; ++d) {
            const TrigonalData t(g, d);
            if (!recillas_unramified_check(t)) return fail(cat("(g, δ) = (", g, ", ", d, ")"));
            if (recillas_unramified_check(t, 12 * g + 2 - 4 * d)) return fail("perturbed genus accepted");
        }
    return pass("χ(𝒢(R_η)) = 4χ(𝒢(C)) on the grid; perturbed genus rejected");
}

// --------------------------------------------------------------- schottky

CheckOutcome s4_action(const CheckContext&) {
    const auto l = recillas_l(), n = recillas_n();
    const std::vector<LatticeVector> probes{l, n, LatticeVector::of({1, -2, 0, 1})};
    for (const auto& g : S4Perm::all())
        for (const auto& v : probes) {
            if (!(act(g, v).dot(act(g, v)) == v.dot(v))) return fail("inner product not preserved");
            for (const auto& h : S4Perm::all())
                if (!(act(g * h, v) == act(g, act(h, v)))) return fail("not a group action");
            if (g(0) == 0 && !(act(g, l) == l)) return fail("l not fixed by S3");
        }
    const S4Perm phi = S4Perm::phi();
    if (!(act(S4Perm::sigma(), n) == n) || !(act(S4Perm::sigma_prime(), n) == n)) return fail("n not fixed by ⟨σ, σ′⟩");
    if (!(act(phi, n) == -n)) return fail("φ does not negate n");
    if (!(S4Perm::sigma() * S4Perm::sigma_prime() == phi.pow(2))) return fail("σσ′ ≠ φ²");
    if (!(act(phi, l) == LatticeVector::halves({-1, -1, 3, -1}))) return fail(cat("φl = ", act(phi, l)));
    if (!(act(phi.pow(2), l) == LatticeVector::halves({-1, 3, -1, -1}))) return fail(cat("φ²l = ", act(phi.pow(2), l)));
    return pass("group action, invariance of l and n, σσ′ = φ²");
}

CheckOutcome klein_closure(const CheckContext&) {
    const S4Perm phi2 = S4Perm::phi().pow(2);
    std::vector<S4Perm> klein{S4Perm::identity()};
    for (const auto& g : S4Perm::all()) {
        S4Perm k = g * phi2 * g.inverse();
        if (std::find(klein.begin(), klein.end(), k) == klein.end()) klein.push_back(k);
    }
    if (klein.size() != 4) return fail(cat("conjugates of φ² generate ", klein.size(), " elements"));
    const S4Perm tau = S4Perm::tau();
    for (unsigned k = 0; k < 3; ++k) {
        const LatticeVector v = act(tau.pow(k), recillas_n());
        for (const auto& h : klein)
            if (!(act(h, v) == v || act(h, v) == -v)) return fail("Klein orbit of an n-type vector leaves {±v}");
    }
    return pass("Klein group = {1} ∪ conjugates of φ²; preserves each ±τᵏn");
}

CheckOutcome recillas_identity_check(const CheckContext&) {
    const auto r = recillas_identity_values();
    if (!r.ok())
        return fail(cat("(1+φ²)l = ", r.one_plus_phi2_l, ", (1+τ+τ²)n = ", r.tau_orbit_sum_n, ", composite = ", r.composite));
    return pass("(1+φ²)l = n, (1+τ+τ²)n = 2l");
}

CheckOutcome eight_vectors(const CheckContext&) {
    const Splitting lhs = expand_L_side(), rhs = expand_N_side();
    const auto rep = compare_sides(lhs, rhs);
    if (!rep.ok()) return fail(cat("V: ", rep.v, ", S⁺: ", rep.s_plus, ", S⁻: ", rep.s_minus));
    for (const auto* m : {&lhs.v, &lhs.s_plus, &lhs.s_minus})
        if (m->size() != 8 || !m->closed_under_negation()) return fail("multiset not of size 8 or not symmetric");
    const auto a = LatticeVector::of({1, 1, -1, -1}), b = LatticeVector::of({2, -2, 0, 0}), d = LatticeVector::of({0, 0, 2, -2});
    const SummandMultiset listed("ζ′", {a, a, -a, -a, b, -b, d, -d});
    if (!(lhs.v == listed)) return fail("V multiset differs from the listed eight vectors");
    if (compare_sides(lhs, expand_N_side(LatticeVector::of({1, -1, 1, -1}))).v) return fail("negative control matched");
    return pass("V, S⁺, S⁻ agree; negative control differs");
}

}  // namespace

const std::vector<CheckSpec>& check_registry() {
    static const std::vector<CheckSpec> registry{
        {"adjugate-identity", "clifford", "clifford", "adjugate", adjugate_identity},
        {"rankdrop-det", "clifford", "clifford", "mult_matrix", rankdrop_det},
        {"trilinear-symmetry", "clifford", "clifford", "trilinear", trilinear_symmetry},
        {"rho-homomorphism", "clifford", "clifford", "rho", rho_homomorphism},
        {"triality-equivariance", "clifford", "clifford", "rho", triality_equivariance},
        {"center-triples", "clifford", "clifford", "is_triality_triple", center_triples},
        {"octonion-composition", "clifford", "clifford", "oct_mul", octonion_composition},
        {"spinor-pairing", "clifford", "clifford", "spinor_pairing", spinor_pairing_check},
        {"spin-sum", "clifford", "clifford", "spin_sum_dims", spin_sum_check},
        {"isotropic-sampling", "isotropic", "isotropic", "random_isotropic", isotropic_sampling},
        {"ab-spaces", "isotropic", "isotropic", "a_space/b_space", ab_spaces},
        {"prod-zero", "isotropic", "isotropic", "a_space/b_space", prod_zero},
        {"polarity", "isotropic", "isotropic", "a_space", polarity},
        {"ab-subspace-dims", "isotropic", "isotropic", "ab_of_subspace", ab_subspace_dims},
        {"ab1", "isotropic", "isotropic", "ab_of_subspace", ab1},
        {"ab2", "isotropic", "isotropic", "ab_of_subspace", ab2},
        {"ab3", "isotropic", "isotropic", "transform", ab3},
        {"ab-sequences", "isotropic", "isotropic", "a_space/b_space", ab_sequences},
        {"zero-norm", "isotropic", "isotropic", "mu_rank", zero_norm},
        {"root-system", "liealg", "liealg", "root_system", root_system_check},
        {"cartan-action", "liealg", "liealg", "triality_on_cartan", cartan_action},
        {"adjoint-trace", "liealg", "liealg", "adjoint_trace", adjoint_trace_check},
        {"adjoint-decomposition", "liealg", "liealg", "adjoint_decomposition", adjoint_decomposition_check},
        {"positive-root-array", "liealg", "liealg", "positive_root_array_check", positive_root_array},
        {"character-tables", "reps", "reps", "s3_table/s4_table", character_tables},
        {"decompose", "reps", "reps", "decompose", decompose_check},
        {"galois-structures", "reps", "reps", "galois_structure_count", galois_structures},
        {"lefschetz-traces", "lefschetz", "lefschetz", "holo_lefschetz", lefschetz_traces},
        {"moduli-character", "lefschetz", "lefschetz", "galois_moduli_character", moduli_character},
        {"cyclic-dimension", "lefschetz", "lefschetz", "cyclic_moduli_dim", cyclic_dimension},
        {"hodge-decomposition", "lefschetz", "lefschetz", "structure_sheaf_character_S4", hodge_decomposition},
        {"hyperelliptic-dimension", "lefschetz", "lefschetz", "hyperelliptic_moduli_dim", hyperelliptic_dimension},
        {"genus-bookkeeping", "lefschetz", "lefschetz", "genus_suite", genus_bookkeeping},
        {"recillas-unramified", "lefschetz", "lefschetz", "recillas_unramified_check", recillas_unramified},
        {"s4-action", "schottky", "schottky", "act", s4_action},
        {"klein-closure", "schottky", "schottky", "act", klein_closure},
        {"recillas-identities", "schottky", "schottky", "recillas_identities", recillas_identity_check},
        {"eight-vectors", "schottky", "schottky", "verify_eight_vectors", eight_vectors},
    };
    return registry;
}

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& c : check_registry())
        if (std::find(out.begin(), out.end(), c.suite) == out.end()) out.push_back(c.suite);
    return out;
}

bool is_suite(const std::string& name) {
    if (name == "all") return true;
    const auto s = suite_names();
    return std::find(s.begin(), s.end(), name) != s.end();
}

namespace {

CheckReport run_one(const CheckSpec& spec, const CheckContext& ctx) {
    CheckReport r;
    r.check_name = spec.name;
    try {
        r.location = concordance_for(spec.name).location;
    } catch (const std::out_of_range&) {
        r.location = "";
    }
    const auto start = std::chrono::steady_clock::now();
    try {
        CheckOutcome o = spec.run(ctx);
        r.status = o.pass ? CheckStatus::pass : CheckStatus::fail;
        r.detail = std::move(o.detail);
    } catch (const std::exception& e) {
        r.status = CheckStatus::error;
        r.detail = e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace

std::vector<CheckReport> run_checks(const std::string& suite, const CheckContext& ctx, bool parallel) {
    if (!is_suite(suite)) throw std::invalid_argument("unknown suite: " + suite);
    if (ctx.trials < 1) throw std::invalid_argument("trials must be at least 1");
    std::vector<const CheckSpec*> selected;
    for (const auto& c : check_registry())
        if (suite == "all" || c.suite == suite) selected.push_back(&c);

    std::vector<CheckReport> out;
    if (!parallel) {
        for (const auto* c : selected) out.push_back(run_one(*c, ctx));
        return out;
    }
    std::vector<std::future<CheckReport>> futures;
    for (const auto* c : selected) futures.push_back(std::async(std::launch::async, run_one, std::cref(*c), std::cref(ctx)));
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

}  // namespace triality
