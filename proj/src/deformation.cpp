#include "hlya/deformation.hpp"

#include <string>

#include "hlya/error.hpp"
#include "hlya/tensor_expr.hpp"

namespace hlya {

namespace {

void check_shape(const Cochain& c, std::size_t d, std::size_t arity, const char* what) {
  if (c.dim() != d || c.arity() != arity) {
    throw Error(ErrorCode::DimMismatch, std::string(what) + " must be " + std::to_string(arity) +
                                            "-linear on dimension " + std::to_string(d));
  }
}

// sum_{b+c=m} terms[b] with slot `slot` precomposed by phi_c.
std::vector<Cochain> precompose_series(const std::vector<Cochain>& terms, std::size_t slot,
                                       const std::vector<Matrix>& phi) {
  const std::size_t n = terms.size();
  std::vector<Cochain> out;
  for (std::size_t m = 0; m < n; ++m) {
    Cochain acc(terms[0].dim(), terms[0].arity());
    for (std::size_t c = 0; c <= m; ++c) {
      if (terms[m - c].is_zero()) continue;
      if (c == 0) {
        acc += terms[m];
      } else if (!phi[c].is_zero()) {
        acc += terms[m - c].precompose(slot, phi[c]);
      }
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<Cochain> gauge_series(const std::vector<Cochain>& terms, const Gauge& p, const Gauge& p_inv) {
  std::vector<Cochain> cur = terms;
  for (std::size_t slot = 0; slot < terms[0].arity(); ++slot) cur = precompose_series(cur, slot, p.phi);
  std::vector<Cochain> out;
  for (std::size_t n = 0; n < cur.size(); ++n) {
    Cochain acc = cur[n];
    for (std::size_t a = 1; a <= n; ++a) {
      if (cur[n - a].is_zero() || p_inv.phi[a].is_zero()) continue;
      acc += cur[n - a].postcompose(p_inv.phi[a]);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

bool pair_is_cochain(const CochainSpace& s2, const CochainSpace& s3, const Cochain& f, const Cochain& g) {
  return s2.contains(f) && s3.contains(g);
}

Expr X(std::size_t i) { return Expr::var(i); }

}  // namespace

bool operator==(const Deformation& a, const Deformation& b) {
  return a.base == b.base && a.order == b.order && a.f == b.f && a.g == b.g;
}

Deformation make_deformation(const Algebra& base, std::size_t order, std::vector<Cochain> f_higher,
                             std::vector<Cochain> g_higher) {
  if (f_higher.size() > order || g_higher.size() > order) {
    throw Error(ErrorCode::Validation, "more deformation terms than the truncation order");
  }
  const std::size_t d = base.dim();
  Deformation out{base, order, {base.binary()}, {base.ternary()}};
  for (std::size_t i = 1; i <= order; ++i) {
    if (i <= f_higher.size()) {
      check_shape(f_higher[i - 1], d, 2, ("f_" + std::to_string(i)).c_str());
      out.f.push_back(std::move(f_higher[i - 1]));
    } else {
      out.f.emplace_back(d, 2);
    }
    if (i <= g_higher.size()) {
      check_shape(g_higher[i - 1], d, 3, ("g_" + std::to_string(i)).c_str());
      out.g.push_back(std::move(g_higher[i - 1]));
    } else {
      out.g.emplace_back(d, 3);
    }
  }
  return out;
}

Deformation null_deformation(const Algebra& base, std::size_t order) { return make_deformation(base, order, {}, {}); }

bool DeformationReport::all_pass() const { return first_failure() == nullptr; }

bool DeformationReport::passes_through(std::size_t n) const {
  for (const auto& r : results) {
    if (r.n <= n && !r.check.pass) return false;
  }
  return true;
}

const EquationResult* DeformationReport::first_failure() const {
  for (const auto& r : results) {
    if (!r.check.pass) return &r;
  }
  return nullptr;
}

DeformationReport verify_deformation(const Deformation& d) { return verify_deformation(d, d.order); }

DeformationReport verify_deformation(const Deformation& d, std::size_t n_max) {
  const TwistPowers tp = d.base.twist_powers(2);
  DeformationReport report;
  for (std::size_t n = 0; n <= std::min(n_max, d.order); ++n)
    for (int eq = 1; eq <= 8; ++eq) {
      report.results.push_back({eq, n, hlya::first_failure(deformation_residual(eq, n, d.f, d.g, tp))});
    }
  return report;
}

std::pair<Cochain, Cochain> infinitesimal(const Deformation& d, const CoboundaryComplex& c) {
  if (d.order < 1) throw Error(ErrorCode::PreconditionFail, "deformation has no first-order term");
  const DeformationReport r = verify_deformation(d, 1);
  if (const auto* fail = r.first_failure()) {
    throw Error(ErrorCode::PreconditionFail, "equation " + std::to_string(fail->eq) + " fails at order " +
                                                 std::to_string(fail->n));
  }
  if (!in_z2z3(c, d.f[1], d.g[1])) throw Error(ErrorCode::NotCocycle, "infinitesimal is not in Z^2 x Z^3");
  return {d.f[1], d.g[1]};
}

Gauge identity_gauge(std::size_t dim, std::size_t order) {
  Gauge p{order, {Matrix::identity(dim)}};
  for (std::size_t i = 1; i <= order; ++i) p.phi.emplace_back(dim, dim);
  return p;
}

Gauge make_gauge(const Algebra& base, std::size_t order, std::vector<Matrix> phi_higher) {
  if (phi_higher.size() > order) throw Error(ErrorCode::Validation, "more gauge terms than the truncation order");
  const std::size_t d = base.dim();
  Gauge p = identity_gauge(d, order);
  for (std::size_t i = 0; i < phi_higher.size(); ++i) {
    if (phi_higher[i].rows() != d || phi_higher[i].cols() != d) {
      throw Error(ErrorCode::DimMismatch, "phi_" + std::to_string(i + 1) + " must be " + std::to_string(d) + "x" +
                                              std::to_string(d));
    }
    p.phi[i + 1] = std::move(phi_higher[i]);
  }
  if (!is_valid_gauge(p, base)) throw Error(ErrorCode::Validation, "gauge terms must commute with alpha");
  return p;
}

bool is_valid_gauge(const Gauge& p, const Algebra& base) {
  const std::size_t d = base.dim();
  if (p.phi.size() != p.order + 1 || !(p.phi[0] == Matrix::identity(d))) return false;
  for (const auto& m : p.phi) {
    if (m.rows() != d || m.cols() != d) return false;
    if (!(m * base.alpha() == base.alpha() * m)) return false;
  }
  return true;
}

Gauge inverse(const Gauge& p) {
  const std::size_t d = p.phi[0].rows();
  Gauge out = identity_gauge(d, p.order);
  for (std::size_t n = 1; n <= p.order; ++n) {
    Matrix acc(d, d);
    for (std::size_t i = 1; i <= n; ++i) acc = acc - p.phi[i] * out.phi[n - i];
    out.phi[n] = acc;
  }
  return out;
}

Gauge compose(const Gauge& p, const Gauge& q) {
  if (p.order != q.order || p.phi[0].rows() != q.phi[0].rows()) {
    throw Error(ErrorCode::BaseMismatch, "gauges differ in order or dimension");
  }
  const std::size_t d = p.phi[0].rows();
  Gauge out{p.order, {}};
  for (std::size_t n = 0; n <= p.order; ++n) {
    Matrix acc(d, d);
    for (std::size_t i = 0; i <= n; ++i) acc = acc + p.phi[i] * q.phi[n - i];
    out.phi.push_back(std::move(acc));
  }
  return out;
}

Deformation apply_gauge(const Deformation& d, const Gauge& p) {
  if (p.order != d.order || p.phi.empty() || p.phi[0].rows() != d.base.dim()) {
    throw Error(ErrorCode::BaseMismatch, "gauge and deformation differ in order or dimension");
  }
  if (!is_valid_gauge(p, d.base)) throw Error(ErrorCode::Validation, "invalid gauge");
  const Gauge p_inv = inverse(p);
  Deformation out{d.base, d.order, gauge_series(d.f, p, p_inv), gauge_series(d.g, p, p_inv)};
  const CochainSpace s2 = build_cochain_space(d.base, 2);
  const CochainSpace s3 = build_cochain_space(d.base, 3);
  for (std::size_t i = 1; i <= d.order; ++i) {
    if (pair_is_cochain(s2, s3, d.f[i], d.g[i]) && !pair_is_cochain(s2, s3, out.f[i], out.g[i])) {
      throw Error(ErrorCode::NotACochain, "gauged term of order " + std::to_string(i) + " left HomC^2 x HomC^3");
    }
  }
  return out;
}

bool verify_equivalence(const Deformation& d1, const Deformation& d2, const Gauge& p) {
  if (!(d1.base == d2.base) || d1.order != d2.order) {
    throw Error(ErrorCode::BaseMismatch, "deformations differ in base or order");
  }
  if (p.order != d1.order || p.phi.empty() || p.phi[0].rows() != d1.base.dim()) {
    throw Error(ErrorCode::BaseMismatch, "gauge differs in order or dimension");
  }
  if (!is_valid_gauge(p, d1.base)) return false;
  return apply_gauge(d1, p) == d2;
}

TrivializeResult trivialize(const Deformation& d, const CoboundaryComplex& c) {
  if (!(c.algebra() == d.base)) throw Error(ErrorCode::BaseMismatch, "complex and deformation have different bases");
  if (const auto* fail = verify_deformation(d).first_failure()) {
    throw Error(ErrorCode::PreconditionFail, "equation " + std::to_string(fail->eq) + " fails at order " +
                                                 std::to_string(fail->n));
  }
  const std::size_t dim = d.base.dim();
  TrivializeResult out;
  out.gauge = identity_gauge(dim, d.order);
  Deformation cur = d;
  for (std::size_t r = 1; r <= d.order; ++r) {
    if (cur.f[r].is_zero() && cur.g[r].is_zero()) continue;
    if (!in_z2z3(c, cur.f[r], cur.g[r])) {
      throw Error(ErrorCode::NotCocycle, "leading term of order " + std::to_string(r) + " is not in Z^2 x Z^3");
    }
    const auto h = is_coboundary_2(c, cur.f[r], cur.g[r]);
    if (!h) {
      out.obstructed = true;
      out.stage = r;
      out.f_class = cur.f[r];
      out.g_class = cur.g[r];
      return out;
    }
    Gauge step = identity_gauge(dim, d.order);
    step.phi[r] = -1 * h->to_matrix();
    cur = apply_gauge(cur, step);
    out.gauge = compose(out.gauge, step);
    out.steps.push_back(r);
    if (!cur.f[r].is_zero() || !cur.g[r].is_zero()) {
      throw Error(ErrorCode::NotCocycle, "gauge step did not remove order " + std::to_string(r));
    }
    if (const auto* fail = verify_deformation(cur).first_failure()) {
      throw Error(ErrorCode::NotCocycle, "gauged deformation fails equation " + std::to_string(fail->eq) +
                                             " at order " + std::to_string(fail->n));
    }
  }
  return out;
}

ObstructionPair obstruction_pair(const CoboundaryComplex& c, const Cochain& f1, const Cochain& g1) {
  if (!in_z2z3(c, f1, g1)) throw Error(ErrorCode::NotInZ2Z3, "(f1, g1) is not in Z^2 x Z^3");
  const TwistPowers tp = c.algebra().twist_powers(2);
  const auto F = [&](Expr a, Expr b) { return Expr::apply(f1, {std::move(a), std::move(b)}); };
  const auto G = [&](Expr a, Expr b, Expr e) { return Expr::apply(g1, {std::move(a), std::move(b), std::move(e)}); };
  // variables x, y, z, u
  const std::vector<Term> fterms{
      {1, F(G(X(0), X(1), X(2)), X(3).twist(2))},
      {1, F(X(2).twist(2), G(X(0), X(1), X(3)))},
      {-1, G(X(0).twist(1), X(1).twist(1), F(X(2), X(3)))},
  };
  // variables u, v, x, y, z
  const std::vector<Term> gterms{
      {1, G(G(X(0), X(1), X(2)), X(3).twist(2), X(4).twist(2))},
      {1, G(X(2).twist(2), G(X(0), X(1), X(3)), X(4).twist(2))},
      {1, G(X(2).twist(2), X(3).twist(2), G(X(0), X(1), X(4)))},
      {-1, G(X(0).twist(2), X(1).twist(2), G(X(2), X(3), X(4)))},
  };
  ObstructionPair out{tabulate(fterms, 4, tp), tabulate(gterms, 5, tp)};
  out.is_cochain_pair = c.space(4).contains(out.F) && c.space(5).contains(out.G);
  out.in_z4z5 = in_z4z5(c, out.F, out.G);
  return out;
}

std::optional<std::pair<Cochain, Cochain>> second_order_candidate(const CoboundaryComplex& c, const Cochain& f1,
                                                                  const Cochain& g1, ObstructionSign sign) {
  const ObstructionPair ob = obstruction_pair(c, f1, g1);
  if (!ob.is_cochain_pair) return std::nullopt;
  Vector target = c.pair_coordinates(c.space(4), ob.F, c.space(5), ob.G);
  if (sign == ObstructionSign::Negated) target = scale(Rational(-1), target);
  const auto x = solve(c.delta2().matrix, target);
  if (!x) return std::nullopt;
  const std::size_t n2 = c.space(2).dim();
  const std::span<const Rational> all(*x);
  return std::pair{c.space(2).combine(all.subspan(0, n2)), c.space(3).combine(all.subspan(n2))};
}

ProbeReport second_order_probe(const CoboundaryComplex& c, const Cochain& f1, const Cochain& g1, const Cochain& f2,
                               const Cochain& g2, ObstructionSign sign) {
  const Algebra& a = c.algebra();
  if (!in_z2z3(c, f1, g1)) throw Error(ErrorCode::PreconditionFail, "(f1, g1) is not in Z^2 x Z^3");
  ProbeReport out;
  out.obstruction = obstruction_pair(c, f1, g1);
  if (!c.space(2).contains(f2) || !c.space(3).contains(g2)) {
    throw Error(ErrorCode::PreconditionFail, "(f2, g2) is not in HomC^2 x HomC^3");
  }
  const Rational s = sign == ObstructionSign::Negated ? Rational(-1) : Rational(1);
  const auto image = formula::delta2(a, f2, g2);
  if (!(image.first == s * out.obstruction.F) || !(image.second == s * out.obstruction.G)) {
    throw Error(ErrorCode::PreconditionFail, sign == ObstructionSign::Negated ? "delta2(f2, g2) differs from (-F, -G)"
                                                                             : "delta2(f2, g2) differs from (F, G)");
  }
  const std::vector<Cochain> f{a.binary(), f1, f2};
  const std::vector<Cochain> g{a.ternary(), g1, g2};
  const TwistPowers tp = a.twist_powers(2);
  for (int eq = 5; eq <= 8; ++eq) out.equations[eq - 5] = first_failure(deformation_residual(eq, 2, f, g, tp));
  return out;
}

}  // namespace hlya
