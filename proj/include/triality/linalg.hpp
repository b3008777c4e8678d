#pragma once

#include "triality/exact.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace triality {

using Vec = std::vector<Rational>;

/// Dense row-major matrix over ℚ.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vec>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec column(std::size_t c) const;

    Matrix transpose() const;
    Rational trace() const;
    bool is_zero() const;

    Matrix operator-() const;
    Matrix operator*(const Matrix& o) const;
    Vec operator*(std::span<const Rational> v) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Rational& s) const;

    /// Rows of `below` appended under this matrix.
    Matrix stacked(const Matrix& below) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Rational determinant(const Matrix& m);

/// Linear subspace of ℚⁿ held as its unique reduced-row-echelon basis.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    /// Row space of `rows`.
    static Subspace span(const Matrix& rows);
    static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim) { return span(Matrix::identity(ambient_dim)); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    std::vector<Vec> basis_vectors() const;

    bool contains(std::span<const Rational> v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_;
    Matrix basis_;
};

/// Null space {x : m·x = 0}.
Subspace kernel(const Matrix& m);
/// Column space of m.
Subspace image(const Matrix& m);
/// Throws std::invalid_argument on ambient-dimension mismatch.
Subspace intersect(const Subspace& u, const Subspace& w);
Subspace sum(const Subspace& u, const Subspace& w);

/// Annihilator {x : ⟨b, x⟩ = 0 for every basis vector b}.
Subspace annihilator(const Subspace& u);

/// Solves a·x = b for square, nonsingular a over any exact field.
/// Pivot is the first nonzero entry in the column.
template <class Field>
std::vector<Field> solve_linear(std::vector<std::vector<Field>> a, std::vector<Field> b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve_linear: size mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("solve_linear: matrix not square");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("solve_linear: singular system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        Field inv = Field(1) / a[col][col];
        for (std::size_t k = col; k < n; ++k) a[col][k] = a[col][k] * inv;
        b[col] = b[col] * inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Field f = a[r][col];
            for (std::size_t k = col; k < n; ++k) a[r][k] = a[r][k] - f * a[col][k];
            b[r] = b[r] - f * b[col];
        }
    }
    return b;
}

}  // namespace triality
