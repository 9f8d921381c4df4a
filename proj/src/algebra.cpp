#include "hlya/algebra.hpp"

#include <string>
#include <utility>

#include "hlya/error.hpp"

namespace hlya {

namespace {

void require_square(const Matrix& m, std::size_t d, const char* what) {
  if (m.rows() != d || m.cols() != d) {
    throw Error(ErrorCode::DimMismatch, std::string(what) + " must be " + std::to_string(d) + "x" + std::to_string(d));
  }
}

// First slot pair (0,1) must be alternating: c[i][i][..] = 0 and c[i][j][..] = -c[j][i][..].
bool alternating_in_first_pair(const MultilinearMap& m) {
  const std::size_t d = m.dim();
  const std::size_t block = m.size() / (d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const std::size_t a = (i * d + j) * block;
      const std::size_t b = (j * d + i) * block;
      for (std::size_t r = 0; r < block; ++r) {
        if (!(m.coords()[a + r] + m.coords()[b + r]).is_zero()) return false;
      }
    }
  }
  return true;
}

std::string tuple_string(const std::vector<std::size_t>& tuple) {
  std::string s = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(tuple[i] + 1);
  }
  return s + ")";
}

}  // namespace

Algebra::Algebra(std::string name, MultilinearMap binary, MultilinearMap ternary, Matrix alpha)
    : name_(std::move(name)),
      dim_(binary.dim()),
      binary_(std::move(binary)),
      ternary_(std::move(ternary)),
      alpha_(std::move(alpha)) {
  if (binary_.arity() != 2 || ternary_.arity() != 3) {
    throw Error(ErrorCode::Validation, "binary bracket must have arity 2 and ternary bracket arity 3");
  }
  if (ternary_.dim() != dim_) throw Error(ErrorCode::DimMismatch, "brackets live on spaces of different dimension");
  require_square(alpha_, dim_, "alpha");
  if (!alternating_in_first_pair(binary_)) throw Error(ErrorCode::Validation, "binary bracket is not alternating");
  if (!alternating_in_first_pair(ternary_)) {
    throw Error(ErrorCode::Validation, "ternary bracket is not alternating in its first two arguments");
  }
}

Algebra Algebra::from_rows(std::string name, std::size_t dim, const BinaryRows& binary, const TernaryRows& ternary,
                           Matrix alpha) {
  MultilinearMap b(dim, 2);
  MultilinearMap t(dim, 3);
  for (const auto& [idx, row] : binary) {
    const auto [i, j] = idx;
    if (i >= dim || j >= dim || row.size() != dim) throw Error(ErrorCode::DimMismatch, "binary row out of range");
    if (i >= j) throw Error(ErrorCode::Validation, "binary rows must be given for i < j");
    for (std::size_t k = 0; k < dim; ++k) {
      const std::size_t ij[2] = {i, j};
      const std::size_t ji[2] = {j, i};
      b.at(ij, k) = row[k];
      b.at(ji, k) = -row[k];
    }
  }
  for (const auto& [idx, row] : ternary) {
    const auto [i, j, l] = idx;
    if (i >= dim || j >= dim || l >= dim || row.size() != dim) {
      throw Error(ErrorCode::DimMismatch, "ternary row out of range");
    }
    if (i >= j) throw Error(ErrorCode::Validation, "ternary rows must be given for i < j");
    for (std::size_t k = 0; k < dim; ++k) {
      const std::size_t ijl[3] = {i, j, l};
      const std::size_t jil[3] = {j, i, l};
      t.at(ijl, k) = row[k];
      t.at(jil, k) = -row[k];
    }
  }
  return Algebra(std::move(name), std::move(b), std::move(t), std::move(alpha));
}

Algebra Algebra::change_basis(const Matrix& basis, std::string new_name) const {
  require_square(basis, dim_, "basis change");
  const auto inv = inverse(basis);
  if (!inv) throw Error(ErrorCode::Validation, "basis change matrix is singular");
  MultilinearMap b = binary_.precompose(0, basis).precompose(1, basis).postcompose(*inv);
  MultilinearMap t = ternary_.precompose(0, basis).precompose(1, basis).precompose(2, basis).postcompose(*inv);
  return Algebra(std::move(new_name), std::move(b), std::move(t), *inv * alpha_ * basis);
}

Vector eval_binary(const Algebra& a, const Vector& x, const Vector& y) {
  if (x.size() != a.dim() || y.size() != a.dim()) throw Error(ErrorCode::DimMismatch, "eval_binary argument length");
  const Vector args[2] = {x, y};
  return a.binary().evaluate(args);
}

Vector eval_ternary(const Algebra& a, const Vector& x, const Vector& y, const Vector& z) {
  if (x.size() != a.dim() || y.size() != a.dim() || z.size() != a.dim()) {
    throw Error(ErrorCode::DimMismatch, "eval_ternary argument length");
  }
  const Vector args[3] = {x, y, z};
  return a.ternary().evaluate(args);
}

bool AxiomReport::all_pass() const {
  for (const auto& c : axioms) {
    if (!c.pass) return false;
  }
  return true;
}

std::size_t identity_arity(int eq) {
  static constexpr std::size_t arities[8] = {2, 3, 2, 3, 3, 4, 4, 5};
  if (eq < 1 || eq > 8) throw Error(ErrorCode::Validation, "identity number must be 1..8");
  return arities[eq - 1];
}

MultilinearMap deformation_residual(int eq, std::size_t n, std::span<const MultilinearMap> f,
                                    std::span<const MultilinearMap> g, const TwistPowers& alpha) {
  if (n >= f.size() || n >= g.size()) throw Error(ErrorCode::Validation, "deformation order exceeds supplied terms");
  const auto X = [](std::size_t i) { return Expr::var(i); };
  const std::size_t arity = identity_arity(eq);
  std::vector<Term> terms;
  switch (eq) {
    case 1:
      terms.push_back({1, Expr::apply(f[n], {X(0), X(1)}).twist(1)});
      terms.push_back({-1, Expr::apply(f[n], {X(0).twist(1), X(1).twist(1)})});
      break;
    case 2:
      terms.push_back({1, Expr::apply(g[n], {X(0), X(1), X(2)}).twist(1)});
      terms.push_back({-1, Expr::apply(g[n], {X(0).twist(1), X(1).twist(1), X(2).twist(1)})});
      break;
    case 3:
      terms.push_back({1, Expr::apply(f[n], {X(0), X(1)})});
      terms.push_back({1, Expr::apply(f[n], {X(1), X(0)})});
      break;
    case 4:
      terms.push_back({1, Expr::apply(g[n], {X(0), X(1), X(2)})});
      terms.push_back({1, Expr::apply(g[n], {X(1), X(0), X(2)})});
      break;
    case 5: {
      std::vector<Term> base;
      for (std::size_t i = 0; i <= n; ++i) {
        base.push_back({1, Expr::apply(f[i], {Expr::apply(f[n - i], {X(0), X(1)}), X(2).twist(1)})});
      }
      base.push_back({1, Expr::apply(g[n], {X(0), X(1), X(2)})});
      terms = cyclic_sum(base, 0, 1, 2);
      break;
    }
    case 6: {
      std::vector<Term> base;
      for (std::size_t i = 0; i <= n; ++i) {
        base.push_back({1, Expr::apply(g[i], {Expr::apply(f[n - i], {X(0), X(1)}), X(2).twist(1), X(3).twist(1)})});
      }
      terms = cyclic_sum(base, 0, 1, 2);
      break;
    }
    case 7:
      // variables (x, y, u, v)
      for (std::size_t i = 0; i <= n; ++i) {
        const std::size_t j = n - i;
        terms.push_back({1, Expr::apply(g[i], {X(0).twist(1), X(1).twist(1), Expr::apply(f[j], {X(2), X(3)})})});
        terms.push_back({-1, Expr::apply(f[i], {Expr::apply(g[j], {X(0), X(1), X(2)}), X(3).twist(2)})});
        terms.push_back({-1, Expr::apply(f[i], {X(2).twist(2), Expr::apply(g[j], {X(0), X(1), X(3)})})});
      }
      break;
    case 8:
      // variables (u, v, x, y, z)
      for (std::size_t i = 0; i <= n; ++i) {
        const std::size_t j = n - i;
        terms.push_back(
            {1, Expr::apply(g[i], {X(0).twist(2), X(1).twist(2), Expr::apply(g[j], {X(2), X(3), X(4)})})});
        terms.push_back(
            {-1, Expr::apply(g[i], {Expr::apply(g[j], {X(0), X(1), X(2)}), X(3).twist(2), X(4).twist(2)})});
        terms.push_back(
            {-1, Expr::apply(g[i], {X(2).twist(2), Expr::apply(g[j], {X(0), X(1), X(3)}), X(4).twist(2)})});
        terms.push_back(
            {-1, Expr::apply(g[i], {X(2).twist(2), X(3).twist(2), Expr::apply(g[j], {X(0), X(1), X(4)})})});
      }
      break;
    default:
      throw Error(ErrorCode::Validation, "identity number must be 1..8");
  }
  return tabulate(terms, arity, alpha);
}

IdentityCheck first_failure(const MultilinearMap& residual) {
  IdentityCheck out;
  const auto& c = residual.coords();
  for (std::size_t flat = 0; flat < c.size(); ++flat) {
    if (c[flat].is_zero()) continue;
    out.pass = false;
    out.tuple.assign(residual.arity(), 0);
    residual.decode(flat, out.tuple);
    out.residual = residual.on_basis(out.tuple);
    break;
  }
  return out;
}

AxiomReport check_axioms(const Algebra& a) {
  const TwistPowers alpha = a.twist_powers(2);
  const MultilinearMap f[1] = {a.binary()};
  const MultilinearMap g[1] = {a.ternary()};
  AxiomReport report;
  for (int eq = 1; eq <= 8; ++eq) report.axioms[eq - 1] = first_failure(deformation_residual(eq, 0, f, g, alpha));
  return report;
}

namespace {

int first_failing_axiom(const AxiomReport& r) {
  for (int i = 0; i < 8; ++i) {
    if (!r.axioms[i].pass) return i + 1;
  }
  return 0;
}

std::string failure_text(const AxiomReport& r) {
  const int eq = first_failing_axiom(r);
  return "axiom " + std::to_string(eq) + " fails at basis tuple " + tuple_string(r.axioms[eq - 1].tuple);
}

}  // namespace

Algebra from_lie_algebra(std::string name, const MultilinearMap& bracket, const Matrix& alpha) {
  Algebra a(std::move(name), bracket, MultilinearMap(bracket.dim(), 3), alpha);
  const AxiomReport r = check_axioms(a);
  if (!r.all_pass()) throw Error(ErrorCode::NotHomLie, failure_text(r));
  return a;
}

Algebra from_lya_standard(std::string name, const MultilinearMap& bracket) {
  // {xyz} = [[x,y],z]
  MultilinearMap ternary = bracket.substitute(0, bracket);
  Algebra a(std::move(name), bracket, std::move(ternary), Matrix::identity(bracket.dim()));
  const AxiomReport r = check_axioms(a);
  if (!r.all_pass()) throw Error(ErrorCode::AxiomFail, failure_text(r));
  return a;
}

Algebra yau_twist(const Algebra& a, const Matrix& beta, std::string name) {
  if (!(a.alpha() == Matrix::identity(a.dim()))) {
    throw Error(ErrorCode::PreconditionFail, "twisting requires an algebra with alpha = id");
  }
  require_square(beta, a.dim(), "twisting map");
  if (!(a.binary().postcompose(beta) == a.binary().precompose(0, beta).precompose(1, beta))) {
    throw Error(ErrorCode::NotMorphism, "map does not preserve the binary bracket");
  }
  if (!(a.ternary().postcompose(beta) == a.ternary().precompose(0, beta).precompose(1, beta).precompose(2, beta))) {
    throw Error(ErrorCode::NotMorphism, "map does not preserve the ternary bracket");
  }
  Algebra out(std::move(name), a.binary().postcompose(beta), a.ternary().postcompose(beta * beta), beta);
  const AxiomReport r = check_axioms(out);
  if (!r.all_pass()) throw Error(ErrorCode::AxiomFail, failure_text(r));
  return out;
}

void require_hlya(const Algebra& a) {
  const AxiomReport r = check_axioms(a);
  if (!r.all_pass()) throw Error(ErrorCode::PreconditionFail, (a.name().empty() ? "" : a.name() + ": ") + failure_text(r));
}

namespace examples {

namespace {

MultilinearMap bracket_from(std::size_t dim, const Algebra::BinaryRows& rows) {
  return Algebra::from_rows("", dim, rows, {}, Matrix::identity(dim)).binary();
}

Vector unit(std::size_t dim, std::size_t i, Rational c = 1) {
  Vector v(dim);
  v[i] = std::move(c);
  return v;
}

}  // namespace

MultilinearMap aff1_bracket() { return bracket_from(2, {{{0, 1}, unit(2, 0)}}); }

MultilinearMap sl2_bracket() {
  // basis h, e, f
  return bracket_from(3, {{{0, 1}, unit(3, 1, 2)}, {{0, 2}, unit(3, 2, -2)}, {{1, 2}, unit(3, 0)}});
}

MultilinearMap heisenberg_bracket() { return bracket_from(3, {{{0, 1}, unit(3, 2)}}); }

Algebra abelian2() { return from_lie_algebra("E0", MultilinearMap(2, 2), Matrix::identity(2)); }

Algebra aff1() { return from_lya_standard("E1", aff1_bracket()); }

Algebra sl2() { return from_lya_standard("E2", sl2_bracket()); }

Algebra heisenberg_twisted() {
  Matrix alpha(3, 3);
  alpha(0, 0) = 1;
  alpha(1, 1) = 2;
  alpha(2, 2) = 2;
  return from_lie_algebra("E3", heisenberg_bracket(), alpha);
}

std::vector<Algebra> bundled() { return {abelian2(), aff1(), sl2(), heisenberg_twisted()}; }

}  // namespace examples

}  // namespace hlya
