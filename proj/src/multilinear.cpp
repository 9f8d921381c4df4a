#include "hlya/multilinear.hpp"

#include <string>

#include "hlya/error.hpp"

namespace hlya {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

MultilinearMap::MultilinearMap(std::size_t dim, std::size_t arity)
    : dim_(dim), arity_(arity), coords_(ipow(dim, arity + 1)) {}

MultilinearMap::MultilinearMap(std::size_t dim, std::size_t arity, Vector coords)
    : dim_(dim), arity_(arity), coords_(std::move(coords)) {
  if (coords_.size() != ipow(dim, arity + 1)) {
    throw Error(ErrorCode::DimMismatch, "coordinate count " + std::to_string(coords_.size()) +
                                            " does not match d^(n+1) for d=" + std::to_string(dim) +
                                            ", n=" + std::to_string(arity));
  }
}

MultilinearMap MultilinearMap::from_matrix(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimMismatch, "linear map must be square");
  const std::size_t d = m.rows();
  MultilinearMap f(d, 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) f.coords_[i * d + k] = m(k, i);
  }
  return f;
}

std::size_t MultilinearMap::index(std::span<const std::size_t> inputs, std::size_t output) const {
  if (inputs.size() != arity_) throw Error(ErrorCode::DimMismatch, "wrong number of arguments");
  std::size_t flat = 0;
  for (auto i : inputs) {
    if (i >= dim_) throw Error(ErrorCode::DimMismatch, "basis index out of range");
    flat = flat * dim_ + i;
  }
  if (output >= dim_) throw Error(ErrorCode::DimMismatch, "output index out of range");
  return flat * dim_ + output;
}

std::size_t MultilinearMap::decode(std::size_t flat, std::span<std::size_t> inputs) const {
  const std::size_t out = flat % dim_;
  flat /= dim_;
  for (std::size_t s = arity_; s-- > 0;) {
    inputs[s] = flat % dim_;
    flat /= dim_;
  }
  return out;
}

Vector MultilinearMap::on_basis(std::span<const std::size_t> inputs) const {
  const std::size_t base = index(inputs, 0);
  return Vector(coords_.begin() + static_cast<std::ptrdiff_t>(base),
                coords_.begin() + static_cast<std::ptrdiff_t>(base + dim_));
}

Vector MultilinearMap::evaluate(std::span<const Vector> args) const {
  if (args.size() != arity_) throw Error(ErrorCode::DimMismatch, "wrong number of arguments");
  for (const auto& a : args) {
    if (a.size() != dim_) throw Error(ErrorCode::DimMismatch, "argument vector has wrong length");
  }
  // Contract the first slot repeatedly: partial has shape d^(remaining slots + 1).
  Vector partial = coords_;
  for (std::size_t s = 0; s < arity_; ++s) {
    const std::size_t block = partial.size() / dim_;
    Vector next(block);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (args[s][i].is_zero()) continue;
      for (std::size_t r = 0; r < block; ++r) next[r].add_product(args[s][i], partial[i * block + r]);
    }
    partial = std::move(next);
  }
  return partial;
}

Matrix MultilinearMap::to_matrix() const {
  if (arity_ != 1) throw Error(ErrorCode::DimMismatch, "to_matrix needs an arity-1 map");
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) m(k, i) = coords_[i * dim_ + k];
  }
  return m;
}

MultilinearMap MultilinearMap::precompose(std::size_t slot, const Matrix& m) const {
  if (slot >= arity_) throw Error(ErrorCode::DimMismatch, "slot out of range");
  const std::size_t stride = ipow(dim_, arity_ - slot);
  MultilinearMap out(dim_, arity_);
  for (std::size_t flat = 0; flat < coords_.size(); ++flat) {
    const Rational& v = coords_[flat];
    if (v.is_zero()) continue;
    const std::size_t j = (flat / stride) % dim_;
    const std::size_t base = flat - j * stride;
    // f(.., m e_i, ..) = sum_j m(j, i) f(.., e_j, ..)
    for (std::size_t i = 0; i < dim_; ++i) {
      const Rational& mji = m(j, i);
      if (!mji.is_zero()) out.coords_[base + i * stride].add_product(v, mji);
    }
  }
  return out;
}

MultilinearMap MultilinearMap::postcompose(const Matrix& m) const {
  MultilinearMap out(dim_, arity_);
  for (std::size_t flat = 0; flat < coords_.size(); ++flat) {
    const Rational& v = coords_[flat];
    if (v.is_zero()) continue;
    const std::size_t j = flat % dim_;
    const std::size_t base = flat - j;
    for (std::size_t o = 0; o < dim_; ++o) {
      const Rational& moj = m(o, j);
      if (!moj.is_zero()) out.coords_[base + o].add_product(moj, v);
    }
  }
  return out;
}

MultilinearMap MultilinearMap::substitute(std::size_t slot, const MultilinearMap& inner) const {
  if (slot >= arity_) throw Error(ErrorCode::DimMismatch, "slot out of range");
  if (inner.dim_ != dim_) throw Error(ErrorCode::DimMismatch, "substituted map has a different dimension");
  const std::size_t d = dim_;
  const std::size_t inner_inputs = ipow(d, inner.arity_);
  // Nonzeros of inner grouped by output coordinate.
  std::vector<std::vector<std::pair<std::size_t, const Rational*>>> by_output(d);
  for (std::size_t flat = 0; flat < inner.coords_.size(); ++flat) {
    if (!inner.coords_[flat].is_zero()) by_output[flat % d].emplace_back(flat / d, &inner.coords_[flat]);
  }
  const std::size_t stride = ipow(d, arity_ - slot);
  MultilinearMap out(d, arity_ - 1 + inner.arity_);
  for (std::size_t flat = 0; flat < coords_.size(); ++flat) {
    const Rational& v = coords_[flat];
    if (v.is_zero()) continue;
    const std::size_t l = (flat / stride) % d;
    const std::size_t prefix = flat / (stride * d);
    const std::size_t suffix = flat % stride;
    for (const auto& [inputs, w] : by_output[l]) {
      out.coords_[(prefix * inner_inputs + inputs) * stride + suffix].add_product(v, *w);
    }
  }
  return out;
}

MultilinearMap MultilinearMap::reorder(std::span<const std::size_t> order) const {
  if (order.size() != arity_) throw Error(ErrorCode::DimMismatch, "reorder needs one entry per slot");
  std::vector<bool> seen(arity_, false);
  for (auto o : order) {
    if (o >= arity_ || seen[o]) throw Error(ErrorCode::DimMismatch, "reorder is not a permutation");
    seen[o] = true;
  }
  MultilinearMap out(dim_, arity_);
  std::vector<std::size_t> src(arity_);
  std::vector<std::size_t> dst(arity_);
  for (std::size_t flat = 0; flat < coords_.size(); ++flat) {
    if (coords_[flat].is_zero()) continue;
    const std::size_t o = decode(flat, src);
    // Slot k of f receives variable order[k].
    for (std::size_t k = 0; k < arity_; ++k) dst[order[k]] = src[k];
    out.coords_[out.index(dst, o)] = coords_[flat];
  }
  return out;
}

void MultilinearMap::check_same_shape(const MultilinearMap& rhs) const {
  if (dim_ != rhs.dim_ || arity_ != rhs.arity_) {
    throw Error(ErrorCode::DimMismatch, "multilinear maps of different shape");
  }
}

MultilinearMap& MultilinearMap::operator+=(const MultilinearMap& rhs) {
  check_same_shape(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!rhs.coords_[i].is_zero()) coords_[i] += rhs.coords_[i];
  }
  return *this;
}

MultilinearMap& MultilinearMap::operator-=(const MultilinearMap& rhs) {
  check_same_shape(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!rhs.coords_[i].is_zero()) coords_[i] -= rhs.coords_[i];
  }
  return *this;
}

MultilinearMap& MultilinearMap::add_scaled(const Rational& s, const MultilinearMap& rhs) {
  check_same_shape(rhs);
  if (s.is_zero()) return *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i].add_product(s, rhs.coords_[i]);
  return *this;
}

MultilinearMap operator*(const Rational& s, MultilinearMap a) {
  for (auto& c : a.coords_) {
    if (!c.is_zero()) c *= s;
  }
  return a;
}

}  // namespace hlya
