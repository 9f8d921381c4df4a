#pragma once

#include <cstddef>
#include <vector>

#include "hlya/algebra.hpp"
#include "hlya/exactlin.hpp"

namespace hlya {

/// Der_{alpha^k}(L): linear maps D commuting with alpha with
///   D[x,y]   = [alpha^k x, D y] + [D x, alpha^k y]
///   D{x,y,z} = {D x, a y, a z} + {a x, D y, a z} + {a x, a y, D z},  a = alpha^k.
/// Matrices are flattened row-major into Q^(d*d).
class DerivationSpace {
public:
  DerivationSpace(const Algebra& a, unsigned k);

  [[nodiscard]] unsigned k() const { return k_; }
  [[nodiscard]] std::size_t dim() const { return basis_.dim(); }
  [[nodiscard]] const Subspace& subspace() const { return basis_; }
  [[nodiscard]] Matrix element(std::size_t j) const;
  [[nodiscard]] bool contains(const Matrix& d) const;

private:
  unsigned k_ = 0;
  std::size_t d_ = 0;
  Subspace basis_;
};

[[nodiscard]] DerivationSpace derivation_space(const Algebra& a, unsigned k);

/// D1 D2 - D2 D1 for D1 in Der_{alpha^k}, D2 in Der_{alpha^s}. Throws
/// Error(ClosureViolation) unless the commutator lies in `target`, which
/// must be Der_{alpha^(k+s)}.
[[nodiscard]] Matrix der_bracket(const Matrix& d1, const Matrix& d2, const DerivationSpace& target);
[[nodiscard]] Matrix der_bracket(const Algebra& a, const Matrix& d1, unsigned k, const Matrix& d2, unsigned s);

struct DerLieReport {
  unsigned k_max = 0;
  std::vector<std::size_t> dims;  // dims[k] = dim Der_{alpha^k}, k = 0..k_max
  std::size_t brackets_checked = 0;
  /// alpha is nilpotent, so high powers give large degenerate spaces.
  bool alpha_nilpotent = false;
  std::vector<std::vector<Matrix>> bases;

  friend bool operator==(const DerLieReport&, const DerLieReport&) = default;
};

/// Checks [Der_{alpha^k}, Der_{alpha^s}] inside Der_{alpha^(k+s)} on all basis
/// pairs with k + s <= k_max. Throws Error(ClosureViolation) on the first
/// failure and Error(Validation) when k_max < 1.
[[nodiscard]] DerLieReport check_der_is_lie(const Algebra& a, unsigned k_max = 3);

}  // namespace hlya
