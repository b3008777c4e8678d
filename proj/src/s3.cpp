#include "triality/s3.hpp"

#include <stdexcept>

namespace triality {

S3Element::S3Element(std::array<int, 3> perm) : perm_(perm) {
    std::array<bool, 3> seen{};
    for (int p : perm) {
        if (p < 0 || p > 2 || seen[static_cast<std::size_t>(p)])
            throw std::invalid_argument("not a permutation of {0,1,2}");
        seen[static_cast<std::size_t>(p)] = true;
    }
}

std::vector<S3Element> S3Element::all() {
    return {identity(), sigma(), tau(), tau_squared(), sigma_tau(), sigma_tau_squared()};
}

S3Element S3Element::inverse() const {
    std::array<int, 3> inv{};
    for (int i = 0; i < 3; ++i) inv[static_cast<std::size_t>(perm_[static_cast<std::size_t>(i)])] = i;
    return S3Element(inv);
}

int S3Element::sign() const {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (perm_[static_cast<std::size_t>(i)] > perm_[static_cast<std::size_t>(j)]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

int S3Element::order() const {
    S3Element p = *this;
    int n = 1;
    while (!p.is_identity()) {
        p = p * *this;
        ++n;
    }
    return n;
}

std::string S3Element::name() const {
    if (*this == identity()) return "1";
    if (*this == sigma()) return "σ";
    if (*this == tau()) return "τ";
    if (*this == tau_squared()) return "τ²";
    if (*this == sigma_tau()) return "στ";
    return "στ²";
}

S3Element S3Element::parse(const std::string& name) {
    if (name == "1" || name == "e") return identity();
    if (name == "σ" || name == "s") return sigma();
    if (name == "τ" || name == "t") return tau();
    if (name == "τ²" || name == "t2") return tau_squared();
    if (name == "στ" || name == "st") return sigma_tau();
    if (name == "στ²" || name == "st2") return sigma_tau_squared();
    throw std::invalid_argument("unknown S3 element: " + name);
}

S3Element operator*(const S3Element& u, const S3Element& v) {
    std::array<int, 3> p{};
    for (int i = 0; i < 3; ++i) p[static_cast<std::size_t>(i)] = u(v(i));
    return S3Element(p);
}

}  // namespace triality
