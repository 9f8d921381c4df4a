#include "hlya/exactlin.hpp"

#include <algorithm>
#include <utility>

#include "hlya/error.hpp"

namespace hlya {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(ErrorCode::DimMismatch, "matrix entry count does not match shape");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorCode::DimMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::DimMismatch, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::is_zero() const { return hlya::is_zero(entries_); }

Vector Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimMismatch, "matrix-vector shape mismatch");
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) out[r].add_product((*this)(r, c), v[c]);
  }
  return out;
}

Matrix Matrix::power(unsigned k) const {
  if (rows_ != cols_) throw Error(ErrorCode::DimMismatch, "power of a non-square matrix");
  Matrix result = identity(rows_);
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols_ != bottom.cols_) throw Error(ErrorCode::DimMismatch, "vstack column mismatch");
  std::vector<Rational> e = top.entries_;
  e.insert(e.end(), bottom.entries_.begin(), bottom.entries_.end());
  return Matrix(top.rows_ + bottom.rows_, top.cols_, std::move(e));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimMismatch, "matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j).add_product(aik, b(k, j));
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimMismatch, "matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimMismatch, "matrix difference shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix out = m;
  for (auto& e : out.entries_) e *= s;
  return out;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector add(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimMismatch, "vector sum length mismatch");
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vector sub(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimMismatch, "vector difference length mismatch");
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scale(const Rational& s, std::span<const Rational> v) {
  Vector out(v.begin(), v.end());
  for (auto& x : out) x *= s;
  return out;
}

RrefResult rref(Matrix m) {
  if (std::min(m.rows(), m.cols()) <= 6) return rref_direct(std::move(m));
  return rref_multimodular(m);
}

RrefResult rref_direct(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    }
    const Rational inv = Rational(1) / m(r, c);
    for (std::size_t j = c; j < cols; ++j) {
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    }
    // Columns left of c in row r are already zero, so row updates start at c.
    std::vector<std::size_t> support;
    for (std::size_t j = c; j < cols; ++j) {
      if (!m(r, j).is_zero()) support.push_back(j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational factor = -m(i, c);
      for (std::size_t j : support) m(i, j).add_product(factor, m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const auto [reduced, pivots] = rref(std::move(aug));
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = reduced(r, n + c);
  }
  return inv;
}

Subspace::Subspace(std::size_t ambient_dim, const Matrix& spanning_columns) : ambient_dim_(ambient_dim) {
  if (spanning_columns.rows() != ambient_dim) {
    throw Error(ErrorCode::DimMismatch, "spanning set does not live in the ambient space");
  }
  auto [reduced, piv] = rref(spanning_columns.transpose());
  Matrix basis(ambient_dim, piv.size());
  for (std::size_t j = 0; j < piv.size(); ++j) {
    for (std::size_t i = 0; i < ambient_dim; ++i) basis(i, j) = reduced(j, i);
  }
  basis_ = std::move(basis);
  pivots_ = std::move(piv);
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, Matrix(ambient_dim, 0)); }

Subspace Subspace::whole(std::size_t ambient_dim) { return Subspace(ambient_dim, Matrix::identity(ambient_dim)); }

std::optional<Vector> Subspace::coordinates(std::span<const Rational> v) const {
  if (v.size() != ambient_dim_) throw Error(ErrorCode::DimMismatch, "vector is not in the ambient space");
  Vector c(pivots_.size());
  for (std::size_t j = 0; j < pivots_.size(); ++j) c[j] = v[pivots_[j]];
  Vector back = basis_.apply(c);
  for (std::size_t i = 0; i < ambient_dim_; ++i) {
    if (back[i] != v[i]) return std::nullopt;
  }
  return c;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  for (std::size_t j = 0; j < other.dim(); ++j) {
    if (!contains(other.basis_vector(j))) return false;
  }
  return true;
}

Subspace kernel_basis(const Matrix& m) {
  const auto [reduced, pivots] = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> columns;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, free);
    columns.push_back(std::move(v));
  }
  return Subspace(n, Matrix::from_columns(n, columns));
}

Subspace image_basis(const Matrix& m) { return Subspace(m.rows(), m); }

std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimMismatch, "right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto [reduced, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = reduced(i, m.cols());
  return x;
}

std::size_t quotient_dim(const Subspace& z, const Subspace& b) {
  if (z.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::DimMismatch, "quotient of subspaces in different ambient spaces");
  }
  for (std::size_t j = 0; j < b.dim(); ++j) {
    if (!z.contains(b.basis_vector(j))) {
      throw Error(ErrorCode::NotContained, "coboundary basis vector " + std::to_string(j) + " is not a cocycle");
    }
  }
  return z.dim() - b.dim();
}

std::vector<Vector> quotient_representatives(const Subspace& z, const Subspace& b) {
  (void)quotient_dim(z, b);
  // Greedy: walk z's basis, keep a vector when it raises the rank of the span so far.
  std::vector<Vector> chosen;
  std::vector<Vector> span;
  for (std::size_t j = 0; j < b.dim(); ++j) span.push_back(b.basis_vector(j));
  std::size_t current = b.dim();
  for (std::size_t j = 0; j < z.dim(); ++j) {
    Vector candidate = z.basis_vector(j);
    span.push_back(candidate);
    const std::size_t r = rank(Matrix::from_columns(z.ambient_dim(), span));
    if (r > current) {
      chosen.push_back(std::move(candidate));
      current = r;
    } else {
      span.pop_back();
    }
  }
  return chosen;
}

}  // namespace hlya
