#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "hlya/multilinear.hpp"

namespace hlya {

/// Symbolic multilinear expression in variables x_0, x_1, ...: a variable, or
/// a multilinear map applied to sub-expressions, optionally followed by a
/// power of the twist map. Each variable must occur exactly once per term.
///
///   {alpha(x) alpha(y) f(z, u)}  ==  apply(T, {var(0).twist(1), var(1).twist(1), apply(f, {var(2), var(3)})})
///
/// Expressions refer to their maps by pointer; the maps must outlive them.
class Expr {
public:
  static Expr var(std::size_t index);
  static Expr apply(const MultilinearMap& op, std::vector<Expr> args);

  /// alpha^power applied to this expression's value.
  [[nodiscard]] Expr twist(unsigned power) const;

  [[nodiscard]] bool is_var() const { return op_ == nullptr; }
  [[nodiscard]] std::size_t var_index() const { return var_; }
  [[nodiscard]] unsigned twist_power() const { return twist_; }
  [[nodiscard]] const MultilinearMap* op() const { return op_; }
  [[nodiscard]] const std::vector<Expr>& args() const { return args_; }

private:
  std::size_t var_ = 0;
  unsigned twist_ = 0;
  const MultilinearMap* op_ = nullptr;
  std::vector<Expr> args_;
};

struct Term {
  Rational coeff;
  Expr expr;
};

/// Powers alpha^0 .. alpha^max_power of the twist map.
class TwistPowers {
public:
  explicit TwistPowers(const Matrix& alpha, unsigned max_power = 4);
  [[nodiscard]] const Matrix& operator()(unsigned k) const;
  [[nodiscard]] std::size_t dim() const { return powers_.front().rows(); }

private:
  std::vector<Matrix> powers_;
};

/// Coordinate tensor of sum_t coeff_t * expr_t as a map of `arity` variables.
[[nodiscard]] MultilinearMap tabulate(std::span<const Term> terms, std::size_t arity, const TwistPowers& alpha);

/// Sum over the cyclic permutations (x_a, x_b, x_c) -> (x_b, x_c, x_a) -> (x_c, x_a, x_b)
/// of the given variables, leaving all others fixed.
[[nodiscard]] std::vector<Term> cyclic_sum(std::span<const Term> terms, std::size_t a, std::size_t b, std::size_t c);

/// Renames variables: x_i -> x_{mapping[i]}.
[[nodiscard]] Expr rename(const Expr& e, std::span<const std::size_t> mapping);

}  // namespace hlya
