#include "hlya/coboundary.hpp"

#include <array>
#include <optional>
#include <string>

#include "hlya/error.hpp"
#include "hlya/tensor_expr.hpp"

namespace hlya {

namespace formula {

namespace {

Expr X(std::size_t i) { return Expr::var(i); }

std::vector<Expr> vars(std::span<const std::size_t> idx, unsigned twist = 0) {
  std::vector<Expr> out;
  for (auto i : idx) out.push_back(X(i).twist(twist));
  return out;
}

std::vector<Expr> vars(std::initializer_list<std::size_t> idx, unsigned twist = 0) {
  return vars(std::span<const std::size_t>(idx.begin(), idx.size()), twist);
}

void check(const Cochain& c, std::size_t d, std::size_t arity, const char* what) {
  if (c.dim() != d || c.arity() != arity) {
    throw Error(ErrorCode::DimMismatch, std::string(what) + " must be a " + std::to_string(arity) + "-cochain");
  }
}

}  // namespace

std::vector<std::size_t> omit_pair(std::size_t n, std::size_t k) {
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j <= n; ++j) {
    if (j == 2 * k - 1 || j == 2 * k) continue;
    out.push_back(j - 1);
  }
  return out;
}

std::vector<Slot> omit_pair_insert_bracket(std::size_t n, std::size_t k, std::size_t i) {
  if (i <= 2 * k || i > n) throw Error(ErrorCode::Validation, "bracket position must follow the omitted pair");
  std::vector<Slot> out;
  for (std::size_t j : omit_pair(n, k)) {
    if (j == i - 1) {
      out.push_back({true, j, 2 * k - 2, 2 * k - 1});
    } else {
      out.push_back({false, j, 0, 0});
    }
  }
  return out;
}

Pair delta1(const Algebra& a, const Cochain& f) {
  check(f, a.dim(), 1, "f");
  const auto& B = a.binary();
  const auto& T = a.ternary();
  const auto F = [&](Expr e) { return Expr::apply(f, {std::move(e)}); };
  const std::vector<Term> first{
      {1, Expr::apply(B, {X(0), F(X(1))})},
      {1, Expr::apply(B, {F(X(0)), X(1)})},
      {-1, F(Expr::apply(B, {X(0), X(1)}))},
  };
  const std::vector<Term> second{
      {1, Expr::apply(T, {F(X(0)), X(1), X(2)})},
      {1, Expr::apply(T, {X(0), F(X(1)), X(2)})},
      {1, Expr::apply(T, {X(0), X(1), F(X(2))})},
      {-1, F(Expr::apply(T, {X(0), X(1), X(2)}))},
  };
  const TwistPowers tp = a.twist_powers(0);
  return {tabulate(first, 2, tp), tabulate(second, 3, tp)};
}

Pair delta2(const Algebra& a, const Cochain& f, const Cochain& g) {
  check(f, a.dim(), 2, "f");
  check(g, a.dim(), 3, "g");
  const auto& B = a.binary();
  const auto& T = a.ternary();
  std::vector<Term> first;
  // variables x, y, z, u
  if (!f.is_zero()) {
    first.push_back({1, Expr::apply(T, {X(0).twist(1), X(1).twist(1), Expr::apply(f, vars({2, 3}))})});
    first.push_back({-1, Expr::apply(f, {Expr::apply(T, vars({0, 1, 2})), X(3).twist(2)})});
    first.push_back({-1, Expr::apply(f, {X(2).twist(2), Expr::apply(T, vars({0, 1, 3}))})});
  }
  std::vector<Term> second;
  if (!g.is_zero()) {
    first.push_back({1, Expr::apply(g, {X(0).twist(1), X(1).twist(1), Expr::apply(B, vars({2, 3}))})});
    first.push_back({-1, Expr::apply(B, {X(2).twist(2), Expr::apply(g, vars({0, 1, 3}))})});
    first.push_back({-1, Expr::apply(B, {Expr::apply(g, vars({0, 1, 2})), X(3).twist(2)})});
    // variables x, y, u, v, w
    second.push_back({1, Expr::apply(T, {X(0).twist(2), X(1).twist(2), Expr::apply(g, vars({2, 3, 4}))})});
    second.push_back({-1, Expr::apply(T, {Expr::apply(g, vars({0, 1, 2})), X(3).twist(2), X(4).twist(2)})});
    second.push_back({-1, Expr::apply(T, {X(2).twist(2), Expr::apply(g, vars({0, 1, 3})), X(4).twist(2)})});
    second.push_back({-1, Expr::apply(T, {X(2).twist(2), X(3).twist(2), Expr::apply(g, vars({0, 1, 4}))})});
    second.push_back({1, Expr::apply(g, {X(0).twist(2), X(1).twist(2), Expr::apply(T, vars({2, 3, 4}))})});
    second.push_back({-1, Expr::apply(g, {Expr::apply(T, vars({0, 1, 2})), X(3).twist(2), X(4).twist(2)})});
    second.push_back({-1, Expr::apply(g, {X(2).twist(2), Expr::apply(T, vars({0, 1, 3})), X(4).twist(2)})});
    second.push_back({-1, Expr::apply(g, {X(2).twist(2), X(3).twist(2), Expr::apply(T, vars({0, 1, 4}))})});
  }
  const TwistPowers tp = a.twist_powers(2);
  return {tabulate(first, 4, tp), tabulate(second, 5, tp)};
}

Pair d2(const Algebra& a, const Cochain& f, const Cochain& g) {
  check(f, a.dim(), 2, "f");
  check(g, a.dim(), 3, "g");
  const auto& B = a.binary();
  const auto& T = a.ternary();
  std::vector<Term> first;
  std::vector<Term> second;
  if (!f.is_zero()) {
    first.push_back({1, Expr::apply(B, {Expr::apply(f, vars({0, 1})), X(2).twist(1)})});
    first.push_back({1, Expr::apply(f, {Expr::apply(B, vars({0, 1})), X(2).twist(1)})});
    second.push_back({1, Expr::apply(T, {Expr::apply(f, vars({0, 1})), X(2).twist(1), X(3).twist(1)})});
  }
  if (!g.is_zero()) {
    first.push_back({1, Expr::apply(g, vars({0, 1, 2}))});
    second.push_back({1, Expr::apply(g, {Expr::apply(B, vars({0, 1})), X(2).twist(1), X(3).twist(1)})});
  }
  const TwistPowers tp = a.twist_powers(1);
  return {tabulate(cyclic_sum(first, 0, 1, 2), 3, tp), tabulate(cyclic_sum(second, 0, 1, 2), 4, tp)};
}

namespace {

Expr slot_expr(const Slot& s, const MultilinearMap& T) {
  if (s.bracket) return Expr::apply(T, {X(s.a), X(s.b), X(s.var)});
  return X(s.var).twist(2);
}

// sum_k sum_{i=2k+1}^{n} (-1)^k c(alpha^2 x_1, .., {x_{2k-1} x_{2k} x_i}, .., alpha^2 x_n)
void double_sum(std::vector<Term>& terms, const Cochain& c, std::size_t n, std::size_t k_max,
                const MultilinearMap& T) {
  for (std::size_t k = 1; k <= k_max; ++k) {
    const Rational sign = k % 2 == 0 ? 1 : -1;
    for (std::size_t i = 2 * k + 1; i <= n; ++i) {
      std::vector<Expr> args;
      for (const auto& s : omit_pair_insert_bracket(n, k, i)) args.push_back(slot_expr(s, T));
      terms.push_back({sign, Expr::apply(c, std::move(args))});
    }
  }
}

}  // namespace

Pair delta3(const Algebra& a, const Cochain& f, const Cochain& g) {
  check(f, a.dim(), 4, "f");
  check(g, a.dim(), 5, "g");
  const auto& B = a.binary();
  const auto& T = a.ternary();
  std::vector<Term> first;
  std::vector<Term> second;
  if (!f.is_zero()) {
    first.push_back({1, Expr::apply(T, {X(0).twist(3), X(1).twist(3), Expr::apply(f, vars({2, 3, 4, 5}))})});
    first.push_back({-1, Expr::apply(T, {X(2).twist(3), X(3).twist(3), Expr::apply(f, vars({0, 1, 4, 5}))})});
    double_sum(first, f, 6, 2, T);
  }
  if (!g.is_zero()) {
    std::vector<Expr> args = vars({0, 1, 2, 3}, 1);
    args.push_back(Expr::apply(B, vars({4, 5})));
    first.push_back({-1, Expr::apply(g, std::move(args))});
    first.push_back({1, Expr::apply(B, {X(4).twist(4), Expr::apply(g, vars({0, 1, 2, 3, 5}))})});
    first.push_back({1, Expr::apply(B, {Expr::apply(g, vars({0, 1, 2, 3, 4})), X(5).twist(4)})});

    for (std::size_t k = 1; k <= 3; ++k) {
      const Rational sign = k % 2 == 1 ? 1 : -1;
      second.push_back({sign, Expr::apply(T, {X(2 * k - 2).twist(4), X(2 * k - 1).twist(4),
                                              Expr::apply(g, vars(omit_pair(7, k)))})});
    }
    double_sum(second, g, 7, 3, T);
    second.push_back({1, Expr::apply(T, {Expr::apply(g, vars({0, 1, 2, 3, 4})), X(5).twist(4), X(6).twist(4)})});
    second.push_back({-1, Expr::apply(T, {Expr::apply(g, vars({0, 1, 2, 3, 5})), X(4).twist(4), X(6).twist(4)})});
  }
  const TwistPowers tp = a.twist_powers(4);
  return {tabulate(first, 6, tp), tabulate(second, 7, tp)};
}

}  // namespace formula

const char* level_name(Level level) {
  switch (level) {
    case Level::One:
      return "1";
    case Level::Two:
      return "2";
    case Level::D2:
      return "d2";
    case Level::Three:
      return "3";
  }
  return "?";
}

struct CoboundaryComplex::Lazy {
  std::array<std::once_flag, 8> space_once;
  std::array<std::optional<CochainSpace>, 8> spaces;  // index n for HomC^n; index 0 holds the d2 target
  std::array<std::once_flag, 4> map_once;
  std::array<std::optional<CoboundaryMap>, 4> maps;
};

CoboundaryComplex::CoboundaryComplex(Algebra a) : algebra_(std::move(a)), lazy_(std::make_unique<Lazy>()) {}
CoboundaryComplex::~CoboundaryComplex() = default;
CoboundaryComplex::CoboundaryComplex(CoboundaryComplex&&) noexcept = default;
CoboundaryComplex& CoboundaryComplex::operator=(CoboundaryComplex&&) noexcept = default;

const CochainSpace& CoboundaryComplex::space(std::size_t n) const {
  if (n < 1 || n > 7) throw Error(ErrorCode::ArityOutOfRange, "cochain arity must be 1..7, got " + std::to_string(n));
  std::call_once(lazy_->space_once[n], [&] { lazy_->spaces[n].emplace(build_cochain_space(algebra_, n)); });
  return *lazy_->spaces[n];
}

const CochainSpace& CoboundaryComplex::d2_target() const {
  std::call_once(lazy_->space_once[0], [&] { lazy_->spaces[0].emplace(algebra_, CochainShape{4, 1}); });
  return *lazy_->spaces[0];
}

const CoboundaryMap& CoboundaryComplex::map(Level level) const {
  const auto i = static_cast<std::size_t>(level);
  std::call_once(lazy_->map_once[i], [&] { lazy_->maps[i].emplace(assemble(level)); });
  return *lazy_->maps[i];
}

const CoboundaryMap& CoboundaryComplex::delta1() const { return map(Level::One); }
const CoboundaryMap& CoboundaryComplex::delta2() const { return map(Level::Two); }
const CoboundaryMap& CoboundaryComplex::d2() const { return map(Level::D2); }
const CoboundaryMap& CoboundaryComplex::delta3() const { return map(Level::Three); }

Vector CoboundaryComplex::pair_coordinates(const CochainSpace& s1, const Cochain& first, const CochainSpace& s2,
                                           const Cochain& second) const {
  auto c1 = s1.coordinates(first);
  auto c2 = s2.coordinates(second);
  if (!c1 || !c2) {
    throw Error(ErrorCode::NotACochain, std::string("image is not a ") + std::to_string(c1 ? s2.arity() : s1.arity()) +
                                            "-cochain");
  }
  c1->insert(c1->end(), c2->begin(), c2->end());
  return *c1;
}

CoboundaryMap CoboundaryComplex::assemble(Level level) const {
  const Algebra& a = algebra_;
  CoboundaryMap out;
  out.level = level;
  std::vector<Vector> columns;
  switch (level) {
    case Level::One: {
      out.domain = {&space(1)};
      out.codomain = {&space(2), &space(3)};
      for (std::size_t j = 0; j < space(1).dim(); ++j) {
        auto img = formula::delta1(a, space(1).basis_cochain(j));
        columns.push_back(pair_coordinates(space(2), img.first, space(3), img.second));
      }
      break;
    }
    case Level::Two:
    case Level::D2:
    case Level::Three: {
      const std::size_t lo = level == Level::Three ? 4 : 2;
      const CochainSpace& s1 = space(lo);
      const CochainSpace& s2 = space(lo + 1);
      out.domain = {&s1, &s2};
      const CochainSpace& t1 = level == Level::D2 ? space(3) : space(lo + 2);
      const CochainSpace& t2 = level == Level::D2 ? d2_target() : space(lo + 3);
      out.codomain = {&t1, &t2};
      const auto apply = [&](const Cochain& f, const Cochain& g) {
        switch (level) {
          case Level::Two:
            return formula::delta2(a, f, g);
          case Level::D2:
            return formula::d2(a, f, g);
          default:
            return formula::delta3(a, f, g);
        }
      };
      const Cochain zero1(a.dim(), lo);
      const Cochain zero2(a.dim(), lo + 1);
      for (std::size_t j = 0; j < s1.dim(); ++j) {
        auto img = apply(s1.basis_cochain(j), zero2);
        columns.push_back(pair_coordinates(t1, img.first, t2, img.second));
      }
      for (std::size_t j = 0; j < s2.dim(); ++j) {
        auto img = apply(zero1, s2.basis_cochain(j));
        columns.push_back(pair_coordinates(t1, img.first, t2, img.second));
      }
      break;
    }
  }
  std::size_t rows = 0;
  for (const auto* s : out.codomain) rows += s->dim();
  out.matrix = Matrix::from_columns(rows, columns);
  return out;
}

}  // namespace hlya
