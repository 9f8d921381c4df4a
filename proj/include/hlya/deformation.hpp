#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hlya/algebra.hpp"
#include "hlya/cohomology.hpp"

namespace hlya {

/// Truncated one-parameter deformation f_t = sum f_i t^i, g_t = sum g_i t^i,
/// i = 0..order, with f_0, g_0 the base brackets. Alpha is not deformed.
struct Deformation {
  Algebra base;
  std::size_t order = 0;
  std::vector<Cochain> f;  // order + 1 binary maps
  std::vector<Cochain> g;  // order + 1 ternary maps

  friend bool operator==(const Deformation& a, const Deformation& b);
};

/// Builds a deformation from the higher terms f_1.., g_1.. (missing ones are
/// zero). Throws Error(DimMismatch) on wrong shapes and Error(Validation)
/// when more terms than `order` are given.
[[nodiscard]] Deformation make_deformation(const Algebra& base, std::size_t order, std::vector<Cochain> f_higher,
                                           std::vector<Cochain> g_higher);
[[nodiscard]] Deformation null_deformation(const Algebra& base, std::size_t order);

struct EquationResult {
  int eq = 0;  // 1..8
  std::size_t n = 0;
  IdentityCheck check;

  friend bool operator==(const EquationResult&, const EquationResult&) = default;
};

struct DeformationReport {
  std::vector<EquationResult> results;  // ordered by n, then eq

  [[nodiscard]] bool all_pass() const;
  /// All equations of order <= n hold.
  [[nodiscard]] bool passes_through(std::size_t n) const;
  [[nodiscard]] const EquationResult* first_failure() const;

  friend bool operator==(const DeformationReport&, const DeformationReport&) = default;
};

/// Evaluates the eight deformation equations at every order 0..N on all basis
/// tuples. Order 0 is the base algebra's axiom check.
[[nodiscard]] DeformationReport verify_deformation(const Deformation& d);
/// Only the orders 0..n_max.
[[nodiscard]] DeformationReport verify_deformation(const Deformation& d, std::size_t n_max);

/// (f_1, g_1). Throws Error(PreconditionFail) when the equations fail below
/// order 2 (or the order is 0) and Error(NotCocycle) when the pair is not in
/// HomZ^2 x HomZ^3.
[[nodiscard]] std::pair<Cochain, Cochain> infinitesimal(const Deformation& d, const CoboundaryComplex& c);

/// Truncated series Phi_t = sum phi_i t^i with phi_0 = id, each phi_i
/// commuting with alpha.
struct Gauge {
  std::size_t order = 0;
  std::vector<Matrix> phi;  // order + 1 matrices

  friend bool operator==(const Gauge&, const Gauge&) = default;
};

[[nodiscard]] Gauge identity_gauge(std::size_t dim, std::size_t order);
/// Gauge from phi_1..; missing terms are zero. Throws Error(DimMismatch) on
/// wrong shapes and Error(Validation) when some phi_i does not commute with alpha.
[[nodiscard]] Gauge make_gauge(const Algebra& base, std::size_t order, std::vector<Matrix> phi_higher);

/// phi_0 = id and every term commutes with alpha.
[[nodiscard]] bool is_valid_gauge(const Gauge& p, const Algebra& base);

/// Series inverse mod t^(order+1): psi_0 = id, psi_n = -sum_{i=1..n} phi_i psi_{n-i}.
[[nodiscard]] Gauge inverse(const Gauge& p);
/// Series product p q mod t^(order+1).
[[nodiscard]] Gauge compose(const Gauge& p, const Gauge& q);

/// f' = Phi^-1 f(Phi x, Phi y), g' = Phi^-1 g(Phi x, Phi y, Phi z), truncated.
/// This is a right action: apply_gauge(apply_gauge(d, p), q) = apply_gauge(d, compose(p, q)).
/// Throws Error(BaseMismatch) when dimension or order disagree and
/// Error(Validation) for an invalid gauge.
[[nodiscard]] Deformation apply_gauge(const Deformation& d, const Gauge& p);

/// apply_gauge(d1, p) == d2 coefficientwise and p is a valid gauge. Throws
/// Error(BaseMismatch) when d1, d2 or p disagree on base or order.
[[nodiscard]] bool verify_equivalence(const Deformation& d1, const Deformation& d2, const Gauge& p);

struct TrivializeResult {
  bool obstructed = false;
  /// Accumulated gauge; apply_gauge(d, gauge) is the null deformation when
  /// not obstructed, otherwise it is trivial below `stage`.
  Gauge gauge;
  /// First order r whose term has no coboundary preimage, and that term.
  std::size_t stage = 0;
  std::optional<Cochain> f_class, g_class;
  /// Orders r at which a step id - h_r t^r was applied.
  std::vector<std::size_t> steps;

  friend bool operator==(const TrivializeResult&, const TrivializeResult&) = default;
};

/// Removes the lowest nonzero order with Phi = id - h_r t^r while the term at
/// that order is a coboundary, re-verifying the whole deformation after each
/// step. Throws Error(PreconditionFail) when d fails its equations and
/// Error(NotCocycle) if a leading term is not a cocycle.
[[nodiscard]] TrivializeResult trivialize(const Deformation& d, const CoboundaryComplex& c);

struct ObstructionPair {
  Cochain F;
  Cochain G;
  bool is_cochain_pair = false;
  bool in_z4z5 = false;

  friend bool operator==(const ObstructionPair&, const ObstructionPair&) = default;
};

/// F(x,y,z,u) = f1(g1(x,y,z), a^2 u) + f1(a^2 z, g1(x,y,u)) - g1(a x, a y, f1(z,u))
/// G(u,v,x,y,z) = g1(g1(u,v,x), a^2 y, a^2 z) + g1(a^2 x, g1(u,v,y), a^2 z)
///              + g1(a^2 x, a^2 y, g1(u,v,z)) - g1(a^2 u, a^2 v, g1(x,y,z))
/// Throws Error(NotInZ2Z3) unless (f1, g1) is a 2-cocycle pair.
[[nodiscard]] ObstructionPair obstruction_pair(const CoboundaryComplex& c, const Cochain& f1, const Cochain& g1);

/// Right-hand side required of delta2(f2, g2): Negated is (-F, -G), Direct is
/// (F, G). Under Negated the order-2 residuals of equations 7 and 8 are -2F
/// and -2G, so they vanish only when F = G = 0; Direct makes both zero.
enum class ObstructionSign { Negated, Direct };

/// Some (f2, g2) with (delta2_I, delta2_II)(f2, g2) = -(F, G) (Negated) or (F, G) (Direct), or nullopt.
[[nodiscard]] std::optional<std::pair<Cochain, Cochain>> second_order_candidate(
    const CoboundaryComplex& c, const Cochain& f1, const Cochain& g1, ObstructionSign sign = ObstructionSign::Negated);

struct ProbeReport {
  /// Equations 5..8 at order 2, index eq - 5.
  std::array<IdentityCheck, 4> equations;
  ObstructionPair obstruction;

  friend bool operator==(const ProbeReport&, const ProbeReport&) = default;
};

/// Evaluates equations 5-8 at order 2 for f_t = [,] + f1 t + f2 t^2,
/// g_t = {,,} + g1 t + g2 t^2. Requires (f1, g1) in HomZ^2 x HomZ^3 and
/// delta2(f2, g2) = -(F, G) (or (F, G) for Direct); throws
/// Error(PreconditionFail) otherwise. Failing equations are data, not errors.
[[nodiscard]] ProbeReport second_order_probe(const CoboundaryComplex& c, const Cochain& f1, const Cochain& g1,
                                             const Cochain& f2, const Cochain& g2,
                                             ObstructionSign sign = ObstructionSign::Negated);

}  // namespace hlya
