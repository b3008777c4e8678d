#include "triality/linalg.hpp"

#include <utility>

namespace triality {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Vec Matrix::row(std::size_t r) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Rational Matrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::operator-() const { return scaled(-1); }

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) p(r, c) += a * o(k, c);
        }
    return p;
}

Vec Matrix::operator*(std::span<const Rational> v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    Matrix s = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::scaled(const Rational& s) const {
    Matrix m = *this;
    for (auto& x : m.data_) x *= s;
    return m;
}

Matrix Matrix::stacked(const Matrix& below) const {
    if (rows_ == 0) return below;
    if (below.rows_ == 0) return *this;
    if (cols_ != below.cols_) throw std::invalid_argument("stacking matrices of different widths");
    Matrix m(rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(),
              m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return m;
}

namespace {

// Gauss–Jordan in place; returns the pivot columns.
std::vector<std::size_t> reduce(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != lead)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(lead, c));
        Rational inv = Rational(1) / m(lead, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(lead, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || m(r, col).is_zero()) continue;
            Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(lead, c);
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

}  // namespace

Matrix rref(const Matrix& m) {
    Matrix r = m;
    reduce(r);
    return r;
}

std::size_t rank(const Matrix& m) {
    Matrix r = m;
    return reduce(r).size();
}

Rational determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            Rational f = a(r, col) / a(col, col);
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

Subspace Subspace::span(const Matrix& rows) {
    Matrix r = rows;
    std::size_t k = reduce(r).size();
    Subspace s(rows.cols());
    Matrix b(k, rows.cols());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < rows.cols(); ++c) b(i, c) = r(i, c);
    s.basis_ = std::move(b);
    return s;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient_dim) {
    return span(Matrix::from_rows(vectors, ambient_dim));
}

std::vector<Vec> Subspace::basis_vectors() const {
    std::vector<Vec> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
}

bool Subspace::contains(std::span<const Rational> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector/subspace dimension mismatch");
    Matrix one(1, ambient_);
    for (std::size_t c = 0; c < ambient_; ++c) one(0, c) = v[c];
    return rank(basis_.stacked(one)) == dim();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("subspace dimension mismatch");
    return rank(basis_.stacked(other.basis_)) == dim();
}

Subspace kernel(const Matrix& m) {
    Matrix r = m;
    std::vector<std::size_t> pivots = reduce(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
        basis.push_back(std::move(v));
    }
    return Subspace::span(basis, m.cols());
}

Subspace image(const Matrix& m) { return Subspace::span(m.transpose()); }

Subspace annihilator(const Subspace& u) {
    if (u.dim() == 0) return Subspace::full(u.ambient_dim());
    return kernel(u.basis());
}

Subspace intersect(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim()) throw std::invalid_argument("intersect: ambient-dimension mismatch");
    // U ∩ W is cut out by the stacked equations of both annihilators.
    Matrix eqs = annihilator(u).basis().stacked(annihilator(w).basis());
    if (eqs.rows() == 0) return Subspace::full(u.ambient_dim());
    return kernel(eqs);
}

Subspace sum(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim()) throw std::invalid_argument("sum: ambient-dimension mismatch");
    return Subspace::span(u.basis().stacked(w.basis()));
}

}  // namespace triality
