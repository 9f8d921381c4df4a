#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hlya/rational.hpp"

namespace hlya {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of rationals.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const std::vector<Rational>& entries() const { return entries_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  [[nodiscard]] Vector row(std::size_t r) const;
  [[nodiscard]] Vector column(std::size_t c) const;
  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] Vector apply(std::span<const Rational> v) const;
  [[nodiscard]] Matrix power(unsigned k) const;

  /// Rows of `top` followed by rows of `bottom`; column counts must agree.
  static Matrix vstack(const Matrix& top, const Matrix& bottom);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

[[nodiscard]] bool is_zero(std::span<const Rational> v);
[[nodiscard]] Vector add(std::span<const Rational> a, std::span<const Rational> b);
[[nodiscard]] Vector sub(std::span<const Rational> a, std::span<const Rational> b);
[[nodiscard]] Vector scale(const Rational& s, std::span<const Rational> v);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, ascending
};

/// Reduced row echelon form, exact. Small matrices are eliminated directly;
/// larger ones go through rref_multimodular.
[[nodiscard]] RrefResult rref(Matrix m);

/// Exact Gauss-Jordan elimination over the rationals.
[[nodiscard]] RrefResult rref_direct(Matrix m);

/// RREF computed modulo word-size primes and lifted by Chinese remaindering
/// and rational reconstruction. The lifted candidate R is accepted only after
/// an exact check that every row of m is the combination of R's rows given by
/// its pivot entries; since rank mod p never exceeds the rational rank, this
/// proves R is the RREF of m. Falls back to rref_direct if no candidate
/// certifies within the prime budget.
[[nodiscard]] RrefResult rref_multimodular(const Matrix& m);

[[nodiscard]] std::size_t rank(const Matrix& m);

/// Inverse of a square matrix, or nullopt when singular.
[[nodiscard]] std::optional<Matrix> inverse(const Matrix& m);

/// Linear subspace of Q^ambient_dim held by a canonical basis.
///
/// The basis matrix (ambient_dim x dim) is column-reduced: for every column j
/// there is a pivot row p_j where column j has a 1 and all other columns have
/// 0, and p_0 < p_1 < ... . Two subspaces are equal iff their basis matrices
/// are equal.
class Subspace {
public:
  Subspace() = default;
  /// Spans the given (not necessarily independent) columns.
  Subspace(std::size_t ambient_dim, const Matrix& spanning_columns);

  static Subspace zero(std::size_t ambient_dim);
  static Subspace whole(std::size_t ambient_dim);

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
  [[nodiscard]] std::size_t dim() const { return basis_.cols(); }
  [[nodiscard]] const Matrix& basis() const { return basis_; }
  [[nodiscard]] const std::vector<std::size_t>& pivot_rows() const { return pivots_; }
  [[nodiscard]] Vector basis_vector(std::size_t j) const { return basis_.column(j); }

  /// Coordinates c with basis * c = v, or nullopt when v is not in the span.
  [[nodiscard]] std::optional<Vector> coordinates(std::span<const Rational> v) const;
  [[nodiscard]] bool contains(std::span<const Rational> v) const { return coordinates(v).has_value(); }
  [[nodiscard]] bool contains(const Subspace& other) const;
  [[nodiscard]] Vector combine(std::span<const Rational> coords) const { return basis_.apply(coords); }

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
  std::size_t ambient_dim_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Basis of {v : m v = 0}.
[[nodiscard]] Subspace kernel_basis(const Matrix& m);

/// Basis of the column space of m.
[[nodiscard]] Subspace image_basis(const Matrix& m);

/// Some x with m x = b, or nullopt when b is not in the image of m.
[[nodiscard]] std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b);

/// dim(z) - dim(b). Throws Error(NotContained) unless span(b) is inside span(z).
[[nodiscard]] std::size_t quotient_dim(const Subspace& z, const Subspace& b);

/// Picks columns of z's basis completing b's basis to a basis of z; these
/// represent the quotient z / b. Requires b inside z.
[[nodiscard]] std::vector<Vector> quotient_representatives(const Subspace& z, const Subspace& b);

}  // namespace hlya
