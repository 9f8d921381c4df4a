#include "hlya/cochain.hpp"

#include <random>
#include <string>

#include "hlya/error.hpp"

namespace hlya {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

// Index of e_a ^ e_b (a < b) in lexicographic order.
std::size_t wedge_index(std::size_t a, std::size_t b, std::size_t d) { return a * d - a * (a + 1) / 2 + (b - a - 1); }

// Matrix of alpha ^ alpha on the basis e_a ^ e_b, a < b.
Matrix wedge_square(const Matrix& alpha) {
  const std::size_t d = alpha.rows();
  const std::size_t m = d * (d - 1) / 2;
  Matrix out(m, m);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t e = c + 1; e < d; ++e) {
          out(wedge_index(c, e, d), wedge_index(a, b, d)) = alpha(c, a) * alpha(e, b) - alpha(e, a) * alpha(c, b);
        }
  return out;
}

struct SlotMap {
  std::size_t w = 0;
  int sign = 0;  // 0: the tuple repeats an index inside an alternating pair
};

// Position in W and sign for every input tuple of a map with the given shape.
std::vector<SlotMap> slot_maps(std::size_t d, const CochainShape& shape) {
  const std::size_t n = shape.arity;
  const std::size_t m = d * (d - 1) / 2;
  const std::size_t tuples = ipow(d, n);
  std::vector<SlotMap> out(tuples);
  std::vector<std::size_t> idx(n);
  for (std::size_t t = 0; t < tuples; ++t) {
    std::size_t rest = t;
    for (std::size_t s = n; s-- > 0;) {
      idx[s] = rest % d;
      rest /= d;
    }
    SlotMap sm{0, 1};
    for (std::size_t p = 0; p < shape.pairs && sm.sign != 0; ++p) {
      std::size_t a = idx[2 * p], b = idx[2 * p + 1];
      if (a == b) {
        sm.sign = 0;
        break;
      }
      if (a > b) {
        std::swap(a, b);
        sm.sign = -sm.sign;
      }
      sm.w = sm.w * m + wedge_index(a, b, d);
    }
    if (sm.sign == 0) {
      out[t] = {0, 0};
      continue;
    }
    for (std::size_t s = 2 * shape.pairs; s < n; ++s) sm.w = sm.w * d + idx[s];
    out[t] = sm;
  }
  return out;
}

}  // namespace

CochainSpace::CochainSpace(const Algebra& a, CochainShape shape) : shape_(shape), d_(a.dim()) {
  if (shape_.arity < 1 || 2 * shape_.pairs > shape_.arity) {
    throw Error(ErrorCode::ArityOutOfRange, "invalid cochain shape");
  }
  wedge_ = d_ * (d_ - 1) / 2;
  const std::size_t free = shape_.arity - 2 * shape_.pairs;
  w_size_ = ipow(wedge_, shape_.pairs) * ipow(d_, free);
  for (const auto& sm : slot_maps(d_, shape_)) {
    slot_w_.push_back(sm.w);
    slot_sign_.push_back(static_cast<signed char>(sm.sign));
  }
  const std::size_t unknowns = d_ * w_size_;
  if (unknowns == 0) {
    params_ = Subspace::zero(0);
    return;
  }
  const Matrix& alpha = a.alpha();
  if (alpha == Matrix::identity(d_)) {
    params_ = Subspace::whole(unknowns);
    return;
  }
  Matrix aw = Matrix::identity(1);
  const Matrix w2 = wedge_square(alpha);
  for (std::size_t p = 0; p < shape_.pairs; ++p) aw = kron(aw, w2);
  for (std::size_t s = 0; s < free; ++s) aw = kron(aw, alpha);
  // rows (k, w): sum_m alpha[k][m] F[m][w] - sum_v F[k][v] A_W[v][w]
  Matrix constraints(unknowns, unknowns);
  for (std::size_t k = 0; k < d_; ++k)
    for (std::size_t w = 0; w < w_size_; ++w) {
      const std::size_t row = k * w_size_ + w;
      for (std::size_t m = 0; m < d_; ++m) constraints(row, m * w_size_ + w) += alpha(k, m);
      for (std::size_t v = 0; v < w_size_; ++v) constraints(row, k * w_size_ + v) -= aw(v, w);
    }
  params_ = kernel_basis(constraints);
}

std::size_t CochainSpace::ambient_dim() const { return ipow(d_, shape_.arity + 1); }

Cochain CochainSpace::lift(std::span<const Rational> params) const {
  Cochain out(d_, shape_.arity);
  for (std::size_t t = 0; t < slot_w_.size(); ++t) {
    if (slot_sign_[t] == 0) continue;
    for (std::size_t k = 0; k < d_; ++k) {
      const Rational& v = params[k * w_size_ + slot_w_[t]];
      if (v.is_zero()) continue;
      out.coords()[t * d_ + k] = slot_sign_[t] > 0 ? v : -v;
    }
  }
  return out;
}

Vector CochainSpace::read_params(const Cochain& f) const {
  Vector params(d_ * w_size_);
  for (std::size_t t = 0; t < slot_w_.size(); ++t) {
    if (slot_sign_[t] <= 0) continue;
    for (std::size_t k = 0; k < d_; ++k) params[k * w_size_ + slot_w_[t]] = f.coords()[t * d_ + k];
  }
  return params;
}

Cochain CochainSpace::basis_cochain(std::size_t j) const { return lift(params_.basis_vector(j)); }

Matrix CochainSpace::basis_matrix() const {
  Matrix out(ambient_dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    const Cochain c = basis_cochain(j);
    for (std::size_t i = 0; i < c.size(); ++i) out(i, j) = c.coords()[i];
  }
  return out;
}

Cochain CochainSpace::combine(std::span<const Rational> coords) const {
  if (coords.size() != dim()) throw Error(ErrorCode::DimMismatch, "cochain coordinate count mismatch");
  return lift(params_.combine(coords));
}

std::optional<Vector> CochainSpace::coordinates(const Cochain& f) const {
  if (f.dim() != d_ || f.arity() != shape_.arity) throw Error(ErrorCode::DimMismatch, "cochain shape mismatch");
  Vector params = read_params(f);
  if (!(lift(params) == f)) return std::nullopt;
  return params_.coordinates(params);
}

CochainSpace build_cochain_space(const Algebra& a, std::size_t n) {
  if (n < 1 || n > 7) throw Error(ErrorCode::ArityOutOfRange, "cochain arity must be 1..7, got " + std::to_string(n));
  return CochainSpace(a, CochainShape::standard(n));
}

Vector eval_cochain(const Cochain& f, std::span<const Vector> args) {
  if (args.size() != f.arity()) throw Error(ErrorCode::DimMismatch, "wrong number of cochain arguments");
  for (const auto& v : args) {
    if (v.size() != f.dim()) throw Error(ErrorCode::DimMismatch, "cochain argument length mismatch");
  }
  return f.evaluate(args);
}

Cochain coords_of_map(const Algebra& a, std::size_t n, const Evaluator& evaluator, unsigned spot_checks) {
  const CochainSpace space = build_cochain_space(a, n);
  const std::size_t d = a.dim();
  Cochain out(d, n);
  std::vector<Vector> args(n, Vector(d));
  std::vector<std::size_t> idx(n);
  const std::size_t tuples = ipow(d, n);
  for (std::size_t t = 0; t < tuples; ++t) {
    std::size_t rest = t;
    for (std::size_t s = n; s-- > 0;) {
      idx[s] = rest % d;
      rest /= d;
    }
    for (std::size_t s = 0; s < n; ++s) {
      std::fill(args[s].begin(), args[s].end(), Rational(0));
      args[s][idx[s]] = 1;
    }
    const Vector v = evaluator(args);
    if (v.size() != d) throw Error(ErrorCode::DimMismatch, "evaluator returned a vector of the wrong length");
    for (std::size_t k = 0; k < d; ++k) out.coords()[t * d + k] = v[k];
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (unsigned c = 0; c < spot_checks; ++c) {
    for (auto& v : args)
      for (auto& x : v) x = coef(rng);
    if (!(evaluator(args) == out.evaluate(args))) {
      throw Error(ErrorCode::Validation, "evaluator is not multilinear");
    }
  }
  if (!space.contains(out)) throw Error(ErrorCode::NotACochain, "tabulated map is not a " + std::to_string(n) + "-cochain");
  return out;
}

}  // namespace hlya
