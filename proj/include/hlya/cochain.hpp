#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>

#include "hlya/algebra.hpp"
#include "hlya/exactlin.hpp"
#include "hlya/multilinear.hpp"

namespace hlya {

/// An n-cochain is stored as the full coordinate tensor of a multilinear map.
using Cochain = MultilinearMap;

/// Which slots of an n-ary map must alternate: the first `pairs` adjacent
/// slot pairs (1,2), (3,4), ... . A standard n-cochain has pairs = floor(n/2).
struct CochainShape {
  std::size_t arity = 0;
  std::size_t pairs = 0;

  static CochainShape standard(std::size_t n) { return {n, n / 2}; }
  friend bool operator==(const CochainShape&, const CochainShape&) = default;
};

/// The subspace of n-linear maps L^n -> L that alternate in each constrained
/// slot pair and commute with alpha slotwise: alpha f(x_1..x_n) = f(alpha x_1, .., alpha x_n).
///
/// Internally a cochain is a linear map W -> L with
/// W = (L ^ L)^(x pairs) (x) L^(x free slots), parametrized by its values on
/// the basis e_i ^ e_j (i < j) of each wedge factor. Equivariance becomes
/// alpha F = F alpha_W, solved directly in that parameter space.
class CochainSpace {
public:
  CochainSpace(const Algebra& a, CochainShape shape);

  [[nodiscard]] const CochainShape& shape() const { return shape_; }
  [[nodiscard]] std::size_t arity() const { return shape_.arity; }
  [[nodiscard]] std::size_t dim_l() const { return d_; }
  /// d^(n+1), the size of the full coordinate tensor.
  [[nodiscard]] std::size_t ambient_dim() const;
  [[nodiscard]] std::size_t dim() const { return params_.dim(); }

  /// Basis of the solution space in parameter coordinates.
  [[nodiscard]] const Subspace& parameter_space() const { return params_; }

  /// Basis element j as a full tensor.
  [[nodiscard]] Cochain basis_cochain(std::size_t j) const;
  /// Full-tensor basis matrix (ambient_dim x dim).
  [[nodiscard]] Matrix basis_matrix() const;

  /// sum_j coords[j] * basis_cochain(j).
  [[nodiscard]] Cochain combine(std::span<const Rational> coords) const;

  /// Coordinates of a full tensor in this space, or nullopt when the map
  /// violates alternation or equivariance.
  [[nodiscard]] std::optional<Vector> coordinates(const Cochain& f) const;
  [[nodiscard]] bool contains(const Cochain& f) const { return coordinates(f).has_value(); }

private:
  [[nodiscard]] Cochain lift(std::span<const Rational> params) const;
  [[nodiscard]] Vector read_params(const Cochain& f) const;

  CochainShape shape_;
  std::size_t d_ = 0;
  std::size_t wedge_ = 0;   // d(d-1)/2
  std::size_t w_size_ = 0;  // dim W
  Subspace params_;         // inside Q^(d * dim W), index k * dim W + w
  // For each input tuple: its position in W and the sign picked up by sorting
  // each alternating pair (0 when a pair repeats an index).
  std::vector<std::size_t> slot_w_;
  std::vector<signed char> slot_sign_;
};

/// HomC^n(L,L) for 1 <= n <= 7. Throws Error(ArityOutOfRange) otherwise.
[[nodiscard]] CochainSpace build_cochain_space(const Algebra& a, std::size_t n);

/// f(args[0], ..). Throws Error(DimMismatch) on wrong arity or lengths.
[[nodiscard]] Vector eval_cochain(const Cochain& f, std::span<const Vector> args);

using Evaluator = std::function<Vector(std::span<const Vector>)>;

/// Tabulates an n-ary map given pointwise by reading off basis evaluations.
/// Multilinearity is spot-checked on seeded random vectors (Error(Validation)
/// if that fails); the result must lie in HomC^n (Error(NotACochain) if not).
[[nodiscard]] Cochain coords_of_map(const Algebra& a, std::size_t n, const Evaluator& evaluator,
                                    unsigned spot_checks = 3);

}  // namespace hlya
