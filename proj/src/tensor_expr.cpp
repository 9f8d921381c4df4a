#include "hlya/tensor_expr.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "hlya/error.hpp"

namespace hlya {

Expr Expr::var(std::size_t index) {
  Expr e;
  e.var_ = index;
  return e;
}

Expr Expr::apply(const MultilinearMap& op, std::vector<Expr> args) {
  if (args.size() != op.arity()) {
    throw Error(ErrorCode::DimMismatch, "expression applies an arity-" + std::to_string(op.arity()) + " map to " +
                                            std::to_string(args.size()) + " arguments");
  }
  Expr e;
  e.op_ = &op;
  e.args_ = std::move(args);
  return e;
}

Expr Expr::twist(unsigned power) const {
  Expr e = *this;
  e.twist_ += power;
  return e;
}

TwistPowers::TwistPowers(const Matrix& alpha, unsigned max_power) {
  if (alpha.rows() != alpha.cols()) throw Error(ErrorCode::DimMismatch, "twist map must be square");
  powers_.push_back(Matrix::identity(alpha.rows()));
  for (unsigned k = 1; k <= max_power; ++k) powers_.push_back(powers_.back() * alpha);
}

const Matrix& TwistPowers::operator()(unsigned k) const {
  if (k >= powers_.size()) throw Error(ErrorCode::DimMismatch, "twist power " + std::to_string(k) + " not prepared");
  return powers_[k];
}

namespace {

struct Compiled {
  MultilinearMap map;
  std::vector<std::size_t> vars;
};

Compiled compile(const Expr& e, const TwistPowers& alpha) {
  if (e.is_var()) {
    return {MultilinearMap::from_matrix(alpha(e.twist_power())), {e.var_index()}};
  }
  Compiled out{*e.op(), {}};
  // Right to left, so expanding slot s leaves the indices of slots < s intact.
  for (std::size_t s = e.args().size(); s-- > 0;) {
    const Expr& child = e.args()[s];
    if (child.is_var()) {
      if (child.twist_power() > 0) out.map = out.map.precompose(s, alpha(child.twist_power()));
      out.vars.insert(out.vars.begin(), child.var_index());
    } else {
      Compiled inner = compile(child, alpha);
      out.map = out.map.substitute(s, inner.map);
      out.vars.insert(out.vars.begin(), inner.vars.begin(), inner.vars.end());
    }
  }
  if (e.twist_power() > 0) out.map = out.map.postcompose(alpha(e.twist_power()));
  return out;
}

}  // namespace

MultilinearMap tabulate(std::span<const Term> terms, std::size_t arity, const TwistPowers& alpha) {
  MultilinearMap total(alpha.dim(), arity);
  for (const auto& term : terms) {
    if (term.coeff.is_zero()) continue;
    Compiled c = compile(term.expr, alpha);
    if (c.vars.size() != arity) {
      throw Error(ErrorCode::DimMismatch, "term has " + std::to_string(c.vars.size()) + " variables, expected " +
                                              std::to_string(arity));
    }
    std::vector<bool> seen(arity, false);
    for (auto v : c.vars) {
      if (v >= arity || seen[v]) throw Error(ErrorCode::DimMismatch, "term is not multilinear in its variables");
      seen[v] = true;
    }
    total.add_scaled(term.coeff, c.map.reorder(c.vars));
  }
  return total;
}

Expr rename(const Expr& e, std::span<const std::size_t> mapping) {
  if (e.is_var()) return Expr::var(mapping[e.var_index()]).twist(e.twist_power());
  std::vector<Expr> args;
  args.reserve(e.args().size());
  for (const auto& a : e.args()) args.push_back(rename(a, mapping));
  return Expr::apply(*e.op(), std::move(args)).twist(e.twist_power());
}

std::vector<Term> cyclic_sum(std::span<const Term> terms, std::size_t a, std::size_t b, std::size_t c) {
  std::size_t max_var = std::max({a, b, c});
  std::vector<Term> out;
  // Largest variable index appearing anywhere bounds the mapping size.
  std::function<void(const Expr&)> scan = [&](const Expr& e) {
    if (e.is_var()) {
      max_var = std::max(max_var, e.var_index());
      return;
    }
    for (const auto& x : e.args()) scan(x);
  };
  for (const auto& t : terms) scan(t.expr);
  std::vector<std::size_t> id(max_var + 1);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::size_t> shift1 = id;
  shift1[a] = b;
  shift1[b] = c;
  shift1[c] = a;
  std::vector<std::size_t> shift2 = id;
  shift2[a] = c;
  shift2[b] = a;
  shift2[c] = b;
  for (const auto& t : terms) {
    out.push_back(t);
    out.push_back({t.coeff, rename(t.expr, shift1)});
    out.push_back({t.coeff, rename(t.expr, shift2)});
  }
  return out;
}

}  // namespace hlya
