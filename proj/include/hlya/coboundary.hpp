#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hlya/algebra.hpp"
#include "hlya/cochain.hpp"

namespace hlya {

/// Images of the coboundary operators as full tensors. Each takes cochains of
/// the right arities on the algebra `a` and returns the formula's value; no
/// membership check is made on the result.
namespace formula {

struct Pair {
  Cochain first;
  Cochain second;
};

/// (delta1_I f, delta1_II f) for a 1-cochain f.
[[nodiscard]] Pair delta1(const Algebra& a, const Cochain& f);
/// (delta2_I(f, g), delta2_II g) for a 2-cochain f and 3-cochain g.
[[nodiscard]] Pair delta2(const Algebra& a, const Cochain& f, const Cochain& g);
/// (d2_I(f, g), d2_II(f, g)).
[[nodiscard]] Pair d2(const Algebra& a, const Cochain& f, const Cochain& g);
/// (delta3_I(f, g), delta3_II g) for a 4-cochain f and 5-cochain g.
[[nodiscard]] Pair delta3(const Algebra& a, const Cochain& f, const Cochain& g);

/// One argument of a term in the delta3 double sums: either alpha^2 x_var, or
/// the ternary bracket {x_a x_b x_c} in place of x_c.
struct Slot {
  bool bracket = false;
  std::size_t var = 0;
  std::size_t a = 0;
  std::size_t b = 0;
};

/// Argument list of f(alpha^2 x_1, .., ^x_{2k-1}, ^x_{2k}, .., {x_{2k-1} x_{2k} x_i}, .., alpha^2 x_n)
/// with 1-based k and i as written; slots refer to 0-based variables.
[[nodiscard]] std::vector<Slot> omit_pair_insert_bracket(std::size_t n, std::size_t k, std::size_t i);

/// 0-based variables x_1, .., ^x_{2k-1}, ^x_{2k}, .., x_n (1-based k).
[[nodiscard]] std::vector<std::size_t> omit_pair(std::size_t n, std::size_t k);

}  // namespace formula

enum class Level { One, Two, D2, Three };

[[nodiscard]] const char* level_name(Level level);

/// A paired coboundary operator as a matrix from the concatenated coordinates
/// of its domain spaces to the concatenated coordinates of its codomain spaces.
struct CoboundaryMap {
  Level level = Level::One;
  /// Level One has a single domain space (f stands for the pair (f, f)).
  std::vector<const CochainSpace*> domain;
  std::vector<const CochainSpace*> codomain;
  Matrix matrix;

  [[nodiscard]] std::size_t domain_dim() const { return matrix.cols(); }
  [[nodiscard]] std::size_t codomain_dim() const { return matrix.rows(); }
};

/// Cochain spaces and coboundary matrices of one algebra, built on first use.
/// Safe to query from several threads.
///
/// The second component of d2 takes values in 4-ary maps alternating in
/// slots (1,2) only and commuting with alpha; its codomain space has that
/// shape rather than HomC^4.
class CoboundaryComplex {
public:
  explicit CoboundaryComplex(Algebra a);
  ~CoboundaryComplex();
  CoboundaryComplex(CoboundaryComplex&&) noexcept;
  CoboundaryComplex& operator=(CoboundaryComplex&&) noexcept;

  [[nodiscard]] const Algebra& algebra() const { return algebra_; }

  /// HomC^n, 1 <= n <= 7.
  [[nodiscard]] const CochainSpace& space(std::size_t n) const;
  /// Codomain of d2_II.
  [[nodiscard]] const CochainSpace& d2_target() const;

  [[nodiscard]] const CoboundaryMap& delta1() const;
  [[nodiscard]] const CoboundaryMap& delta2() const;
  [[nodiscard]] const CoboundaryMap& d2() const;
  [[nodiscard]] const CoboundaryMap& delta3() const;
  [[nodiscard]] const CoboundaryMap& map(Level level) const;

  /// Concatenated coordinates of (first, second) in the given spaces; throws
  /// Error(NotACochain) when either tensor lies outside its space.
  [[nodiscard]] Vector pair_coordinates(const CochainSpace& s1, const Cochain& first, const CochainSpace& s2,
                                        const Cochain& second) const;

private:
  struct Lazy;
  CoboundaryMap assemble(Level level) const;

  Algebra algebra_;
  std::unique_ptr<Lazy> lazy_;
};

}  // namespace hlya
