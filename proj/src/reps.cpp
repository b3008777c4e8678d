#include "triality/reps.hpp"

#include "triality/linalg.hpp"

namespace triality {

int CharTable::order() const {
    int n = 0;
    for (const auto& c : classes) n += c.size;
    return n;
}

bool CharTable::orthogonal() const {
    const Eisenstein g(order());
    for (std::size_t i = 0; i < irreducibles.size(); ++i)
        for (std::size_t j = 0; j < irreducibles.size(); ++j) {
            Eisenstein s;
            for (std::size_t k = 0; k < classes.size(); ++k)
                s += Eisenstein(classes[k].size) * irreducibles[i].values[k] * irreducibles[j].values[k].conj();
            if (!(s == (i == j ? g : Eisenstein()))) return false;
        }
    return true;
}

std::size_t CharTable::index_of(const std::string& irreducible) const {
    for (std::size_t i = 0; i < irreducibles.size(); ++i)
        if (irreducibles[i].name == irreducible) return i;
    throw std::invalid_argument("no irreducible named " + irreducible + " in " + group);
}

namespace {

std::vector<Eisenstein> row(std::initializer_list<int> xs) {
    std::vector<Eisenstein> out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

CharTable validated(CharTable t) {
    if (!t.orthogonal()) throw std::logic_error(t.group + " character table fails orthogonality");
    return t;
}

}  // namespace

const CharTable& s3_table() {
    static const CharTable t = validated({
        "S3",
        {{"1", 1}, {"σ", 3}, {"τ", 2}},
        {{"1", row({1, 1, 1})}, {"ε", row({1, -1, 1})}, {"ρ", row({2, 0, -1})}},
    });
    return t;
}

const CharTable& s4_table() {
    static const CharTable t = validated({
        "S4",
        {{"1", 1}, {"σ", 6}, {"τ", 8}, {"φ", 6}, {"σσ′", 3}},
        {
            {"1", row({1, 1, 1, 1, 1})},
            {"ε", row({1, -1, 1, -1, 1})},
            {"ρ", row({3, 1, 0, -1, -1})},
            {"ρ⊗ε", row({3, -1, 0, 1, -1})},
            {"2", row({2, 0, -1, 0, 2})},
        },
    });
    return t;
}

ClassFunction::ClassFunction(const CharTable& t, std::vector<Eisenstein> v) : table(&t), values(std::move(v)) {
    if (values.size() != t.classes.size())
        throw std::invalid_argument("class function has " + std::to_string(values.size()) + " values, " + t.group +
                                    " has " + std::to_string(t.classes.size()) + " classes");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    if (table != o.table) throw std::invalid_argument("adding class functions on different tables");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    return *this;
}

ClassFunction operator*(const Eisenstein& k, ClassFunction f) {
    for (auto& v : f.values) v *= k;
    return f;
}

ClassFunction character_of(const CharTable& t, std::size_t irreducible) {
    return ClassFunction(t, t.irreducibles.at(irreducible).values);
}

std::vector<Eisenstein> solve_multiplicities(const ClassFunction& cf) {
    const CharTable& t = *cf.table;
    const std::size_t n = t.classes.size();
    if (t.irreducibles.size() != n) throw InconsistentSystem("character table is not square");
    // Row k: Σ_i m_i χ_i(class k) = cf(class k).
    std::vector<std::vector<Eisenstein>> a(n, std::vector<Eisenstein>(n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) a[k][i] = t.irreducibles[i].values[k];
    try {
        return solve_linear(a, cf.values);
    } catch (const std::domain_error&) {
        throw InconsistentSystem("character table is singular");
    }
}

std::vector<Eisenstein> inner_product_multiplicities(const ClassFunction& cf) {
    const CharTable& t = *cf.table;
    const Eisenstein g(t.order());
    std::vector<Eisenstein> out;
    for (const auto& irr : t.irreducibles) {
        Eisenstein s;
        for (std::size_t k = 0; k < t.classes.size(); ++k)
            s += Eisenstein(t.classes[k].size) * cf.values[k] * irr.values[k].conj();
        out.push_back(s / g);
    }
    return out;
}

std::vector<std::int64_t> decompose(const ClassFunction& cf) {
    const auto solved = solve_multiplicities(cf);
    const auto inner = inner_product_multiplicities(cf);
    if (solved != inner) throw InconsistentSystem("linear solve and inner product disagree");
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < solved.size(); ++i) {
        const Eisenstein& m = solved[i];
        const std::string& name = cf.table->irreducibles[i].name;
        if (!m.is_rational() || !m.real_part().is_integer())
            throw NotGenuineCharacter("multiplicity of " + name + " is " + m.to_string());
        if (m.real_part().sign() < 0) throw NotGenuineCharacter("multiplicity of " + name + " is negative: " + m.to_string());
        out.push_back(m.real_part().to_int64());
    }
    return out;
}

std::uint64_t galois_structure_count(unsigned k) {
    if (k == 0) throw std::invalid_argument("galois_structure_count: k must be at least 1");
    if (k > 64) throw std::out_of_range("galois_structure_count: 2^(k-1) overflows");
    return k == 1 ? 1 : std::uint64_t{1} << (k - 1);
}

}  // namespace triality
