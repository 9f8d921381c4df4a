#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hlya/exactlin.hpp"
#include "hlya/multilinear.hpp"
#include "hlya/tensor_expr.hpp"

namespace hlya {

/// A finite-dimensional Hom-Lie-Yamaguti algebra (L, [.,.], {.,.,.}, alpha)
/// given by structure constants on a fixed basis e_0..e_{d-1}.
///
/// The binary bracket is alternating and the ternary bracket alternating in
/// its first two arguments; construction rejects tensors that are not.
/// Construction does not check the HLYA identities: use check_axioms().
class Algebra {
public:
  Algebra(std::string name, MultilinearMap binary, MultilinearMap ternary, Matrix alpha);

  using BinaryRows = std::map<std::array<std::size_t, 2>, Vector>;
  using TernaryRows = std::map<std::array<std::size_t, 3>, Vector>;

  /// Builds from the rows [e_i, e_j] (i < j) and {e_i e_j e_k} (i < j); the
  /// remaining entries follow from antisymmetry. Indices are 0-based.
  static Algebra from_rows(std::string name, std::size_t dim, const BinaryRows& binary, const TernaryRows& ternary,
                           Matrix alpha);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const MultilinearMap& binary() const { return binary_; }
  [[nodiscard]] const MultilinearMap& ternary() const { return ternary_; }
  [[nodiscard]] const Matrix& alpha() const { return alpha_; }
  [[nodiscard]] TwistPowers twist_powers(unsigned max_power = 4) const { return TwistPowers(alpha_, max_power); }

  /// Same structure expressed in the basis given by the columns of `basis`
  /// (must be invertible).
  [[nodiscard]] Algebra change_basis(const Matrix& basis, std::string new_name) const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.dim_ == b.dim_ && a.binary_ == b.binary_ && a.ternary_ == b.ternary_ && a.alpha_ == b.alpha_;
  }

private:
  std::string name_;
  std::size_t dim_;
  MultilinearMap binary_;
  MultilinearMap ternary_;
  Matrix alpha_;
};

[[nodiscard]] Vector eval_binary(const Algebra& a, const Vector& x, const Vector& y);
[[nodiscard]] Vector eval_ternary(const Algebra& a, const Vector& x, const Vector& y, const Vector& z);

/// Outcome of one identity over all basis tuples.
struct IdentityCheck {
  bool pass = true;
  /// First failing basis tuple (0-based), in the variable order of the identity.
  std::vector<std::size_t> tuple;
  /// Residual vector at that tuple.
  Vector residual;

  friend bool operator==(const IdentityCheck&, const IdentityCheck&) = default;
};

/// Per-axiom verdicts for the eight defining identities:
///   1 alpha[x,y] = [alpha x, alpha y]            (x,y)
///   2 alpha{xyz} = {alpha x alpha y alpha z}     (x,y,z)
///   3 [x,x] = 0                                  (x,y): [x,y]+[y,x]
///   4 {x,x,y} = 0                                (x,y,z): {xyz}+{yxz}
///   5 cyc_{x,y,z}([[x,y],alpha z] + {xyz}) = 0   (x,y,z)
///   6 cyc_{x,y,z}{[x,y],alpha z,alpha u} = 0     (x,y,z,u)
///   7 {alpha x,alpha y,[u,v]} = [{xyu},alpha^2 v] + [alpha^2 u,{xyv}]   (x,y,u,v)
///   8 {alpha^2 u,alpha^2 v,{xyz}} = {{uvx},..} + {..,{uvy},..} + {..,{uvz}}   (u,v,x,y,z)
struct AxiomReport {
  std::array<IdentityCheck, 8> axioms;

  [[nodiscard]] bool all_pass() const;
  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

/// Number of variables in identity `eq` (1..8).
[[nodiscard]] std::size_t identity_arity(int eq);

/// Residual of the order-n deformation equation `eq` (1..8) for the graded
/// products f_0..f_N (binary) and g_0..g_N (ternary), as a tensor in the
/// identity's variables. Order 0 with f_0 = [.,.], g_0 = {.,.,.} gives the
/// algebra axioms themselves.
[[nodiscard]] MultilinearMap deformation_residual(int eq, std::size_t n, std::span<const MultilinearMap> f,
                                                  std::span<const MultilinearMap> g, const TwistPowers& alpha);

/// First nonzero residual in lexicographic basis-tuple order.
[[nodiscard]] IdentityCheck first_failure(const MultilinearMap& residual);

[[nodiscard]] AxiomReport check_axioms(const Algebra& a);

/// Hom-Lie algebra (L, [.,.], alpha) viewed as an HLYA with zero ternary
/// bracket. Throws Error(NotHomLie) unless every axiom holds.
[[nodiscard]] Algebra from_lie_algebra(std::string name, const MultilinearMap& bracket, const Matrix& alpha);

/// Lie-Yamaguti algebra of a Lie algebra: alpha = id, {xyz} = [[x,y],z].
/// Throws Error(AxiomFail) when the bracket is not a Lie bracket.
[[nodiscard]] Algebra from_lya_standard(std::string name, const MultilinearMap& bracket);

/// Twist of an algebra with alpha = id by an endomorphism beta:
///   [x,y]' = beta[x,y], {xyz}' = beta^2{xyz}, alpha' = beta.
/// Throws Error(NotMorphism) when beta is not an endomorphism of both
/// brackets and Error(AxiomFail) when the result fails check_axioms.
[[nodiscard]] Algebra yau_twist(const Algebra& a, const Matrix& beta, std::string name);

/// Throws Error(PreconditionFail) with the failing axiom unless check_axioms passes.
void require_hlya(const Algebra& a);

namespace examples {

/// E0: two-dimensional abelian algebra, alpha = id.
[[nodiscard]] Algebra abelian2();
/// E1: aff(1), [e1,e2] = e1, with {xyz} = [[x,y],z] and alpha = id.
[[nodiscard]] Algebra aff1();
/// E2: sl2 with basis h, e, f, {xyz} = [[x,y],z] and alpha = id.
[[nodiscard]] Algebra sl2();
/// E3: Heisenberg [e1,e2] = e3, zero ternary, alpha = diag(1,2,2).
[[nodiscard]] Algebra heisenberg_twisted();

/// The bracket tensors the examples are built from.
[[nodiscard]] MultilinearMap aff1_bracket();
[[nodiscard]] MultilinearMap sl2_bracket();
[[nodiscard]] MultilinearMap heisenberg_bracket();

[[nodiscard]] std::vector<Algebra> bundled();

}  // namespace examples

}  // namespace hlya
