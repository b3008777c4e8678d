#pragma once

#include <array>
#include <string>
#include <vector>

namespace triality {

/// Element of S3, stored as its permutation of the three summands
/// V = 0, S⁺ = 1, S⁻ = 2. Composition is right-to-left: (u*v)(i) = u(v(i)).
///
/// With the labels V, S⁺, S⁻ = 1, 2, 3 the generators are σ = (23) and
/// τ = (123), so τ moves V → S⁺ → S⁻ → V, στ swaps V and S⁻ and στ² swaps
/// V and S⁺.
class S3Element {
public:
    S3Element() : perm_{0, 1, 2} {}
    /// Throws std::invalid_argument unless `perm` is a bijection of {0,1,2}.
    explicit S3Element(std::array<int, 3> perm);

    static S3Element identity() { return {}; }
    static S3Element sigma() { return S3Element({0, 2, 1}); }
    static S3Element tau() { return S3Element({1, 2, 0}); }
    static S3Element tau_squared() { return S3Element({2, 0, 1}); }
    static S3Element sigma_tau() { return S3Element({2, 1, 0}); }
    static S3Element sigma_tau_squared() { return S3Element({1, 0, 2}); }

    /// All six elements in the order 1, σ, τ, τ², στ, στ².
    static std::vector<S3Element> all();

    int operator()(int summand) const { return perm_.at(static_cast<std::size_t>(summand)); }
    const std::array<int, 3>& perm() const { return perm_; }

    S3Element inverse() const;
    int sign() const;
    int order() const;
    bool is_identity() const { return perm_ == std::array<int, 3>{0, 1, 2}; }
    bool is_involution() const { return order() == 2; }

    /// "1", "σ", "τ", "τ²", "στ" or "στ²".
    std::string name() const;
    /// Parses the names above, with ASCII spellings "1", "s", "t", "t2", "st", "st2".
    static S3Element parse(const std::string& name);

    friend S3Element operator*(const S3Element& u, const S3Element& v);
    friend bool operator==(const S3Element&, const S3Element&) = default;

private:
    std::array<int, 3> perm_;
};

}  // namespace triality
