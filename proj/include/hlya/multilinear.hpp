#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hlya/exactlin.hpp"

namespace hlya {

/// An n-linear map L x ... x L -> L on a d-dimensional space, stored as the
/// full coordinate tensor c[i_1]...[i_n][k] with
///   f(e_{i_1}, ..., e_{i_n}) = sum_k c[i_1]...[i_n][k] e_k.
/// Indices are 0-based; the output index k varies fastest.
class MultilinearMap {
public:
  MultilinearMap() = default;
  MultilinearMap(std::size_t dim, std::size_t arity);
  MultilinearMap(std::size_t dim, std::size_t arity, Vector coords);

  /// The linear map x -> m x as an arity-1 map.
  static MultilinearMap from_matrix(const Matrix& m);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t arity() const { return arity_; }
  [[nodiscard]] std::size_t size() const { return coords_.size(); }
  [[nodiscard]] const Vector& coords() const { return coords_; }
  [[nodiscard]] Vector& coords() { return coords_; }
  [[nodiscard]] bool is_zero() const { return hlya::is_zero(coords_); }

  /// Flat index of (inputs..., output).
  [[nodiscard]] std::size_t index(std::span<const std::size_t> inputs, std::size_t output) const;
  /// Inverse of index(): fills `inputs` (size arity) and returns the output index.
  std::size_t decode(std::size_t flat, std::span<std::size_t> inputs) const;

  const Rational& at(std::span<const std::size_t> inputs, std::size_t output) const {
    return coords_[index(inputs, output)];
  }
  Rational& at(std::span<const std::size_t> inputs, std::size_t output) { return coords_[index(inputs, output)]; }

  /// Value on basis vectors e_{inputs[0]}, ...
  [[nodiscard]] Vector on_basis(std::span<const std::size_t> inputs) const;

  /// Multilinear evaluation on arbitrary vectors.
  [[nodiscard]] Vector evaluate(std::span<const Vector> args) const;

  /// Arity-1 map as a d x d matrix.
  [[nodiscard]] Matrix to_matrix() const;

  /// (x_1..x_n) -> f(.., m x_slot, ..)
  [[nodiscard]] MultilinearMap precompose(std::size_t slot, const Matrix& m) const;
  /// (x_1..x_n) -> m f(x_1..x_n)
  [[nodiscard]] MultilinearMap postcompose(const Matrix& m) const;
  /// Inserts `inner` into argument `slot`:
  ///   (x_<slot, y_1..y_m, x_>slot) -> f(x_<slot, inner(y_1..y_m), x_>slot)
  [[nodiscard]] MultilinearMap substitute(std::size_t slot, const MultilinearMap& inner) const;
  /// g(x_0..x_{n-1}) = f(x_{order[0]}, ..., x_{order[n-1]}).
  [[nodiscard]] MultilinearMap reorder(std::span<const std::size_t> order) const;

  MultilinearMap& operator+=(const MultilinearMap& rhs);
  MultilinearMap& operator-=(const MultilinearMap& rhs);
  /// this += s * rhs
  MultilinearMap& add_scaled(const Rational& s, const MultilinearMap& rhs);

  friend MultilinearMap operator+(MultilinearMap a, const MultilinearMap& b) { return a += b; }
  friend MultilinearMap operator-(MultilinearMap a, const MultilinearMap& b) { return a -= b; }
  friend MultilinearMap operator*(const Rational& s, MultilinearMap a);
  friend bool operator==(const MultilinearMap& a, const MultilinearMap& b) = default;

private:
  void check_same_shape(const MultilinearMap& rhs) const;

  std::size_t dim_ = 0;
  std::size_t arity_ = 0;
  Vector coords_;
};

[[nodiscard]] std::size_t ipow(std::size_t base, std::size_t exp);

}  // namespace hlya
