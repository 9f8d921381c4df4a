#include "hlya/derivations.hpp"

#include <string>

#include "hlya/error.hpp"

namespace hlya {

namespace {

Vector flatten(const Matrix& m) { return m.entries(); }

// Residual of the derivation conditions, linear in D.
Vector residual(const Algebra& a, const Matrix& ak, const Matrix& d) {
  Vector out = flatten(d * a.alpha() - a.alpha() * d);
  const MultilinearMap& b = a.binary();
  MultilinearMap rb = b.postcompose(d);
  rb -= b.precompose(0, ak).precompose(1, d);
  rb -= b.precompose(0, d).precompose(1, ak);
  out.insert(out.end(), rb.coords().begin(), rb.coords().end());
  const MultilinearMap& t = a.ternary();
  MultilinearMap rt = t.postcompose(d);
  rt -= t.precompose(0, d).precompose(1, ak).precompose(2, ak);
  rt -= t.precompose(0, ak).precompose(1, d).precompose(2, ak);
  rt -= t.precompose(0, ak).precompose(1, ak).precompose(2, d);
  out.insert(out.end(), rt.coords().begin(), rt.coords().end());
  return out;
}

}  // namespace

DerivationSpace::DerivationSpace(const Algebra& a, unsigned k) : k_(k), d_(a.dim()) {
  const Matrix ak = a.alpha().power(k);
  std::vector<Vector> columns;
  for (std::size_t j = 0; j < d_ * d_; ++j) {
    Matrix unit(d_, d_);
    unit(j / d_, j % d_) = 1;
    columns.push_back(residual(a, ak, unit));
  }
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  basis_ = kernel_basis(Matrix::from_columns(rows, columns));
}

Matrix DerivationSpace::element(std::size_t j) const { return Matrix(d_, d_, basis_.basis_vector(j)); }

bool DerivationSpace::contains(const Matrix& d) const {
  if (d.rows() != d_ || d.cols() != d_) throw Error(ErrorCode::DimMismatch, "derivation must be a square matrix");
  return basis_.contains(flatten(d));
}

DerivationSpace derivation_space(const Algebra& a, unsigned k) { return DerivationSpace(a, k); }

Matrix der_bracket(const Matrix& d1, const Matrix& d2, const DerivationSpace& target) {
  Matrix c = d1 * d2 - d2 * d1;
  if (!target.contains(c)) {
    throw Error(ErrorCode::ClosureViolation,
                "commutator is not an alpha^" + std::to_string(target.k()) + "-derivation");
  }
  return c;
}

Matrix der_bracket(const Algebra& a, const Matrix& d1, unsigned k, const Matrix& d2, unsigned s) {
  return der_bracket(d1, d2, derivation_space(a, k + s));
}

DerLieReport check_der_is_lie(const Algebra& a, unsigned k_max) {
  if (k_max < 1) throw Error(ErrorCode::Validation, "k-max must be at least 1");
  DerLieReport report;
  report.k_max = k_max;
  report.alpha_nilpotent = a.alpha().power(static_cast<unsigned>(a.dim())).is_zero();
  std::vector<DerivationSpace> spaces;
  for (unsigned k = 0; k <= k_max; ++k) {
    spaces.push_back(derivation_space(a, k));
    report.dims.push_back(spaces.back().dim());
    std::vector<Matrix> basis;
    for (std::size_t j = 0; j < spaces.back().dim(); ++j) basis.push_back(spaces.back().element(j));
    report.bases.push_back(std::move(basis));
  }
  for (unsigned k = 0; k <= k_max; ++k)
    for (unsigned s = 0; k + s <= k_max; ++s)
      for (const auto& d1 : report.bases[k])
        for (const auto& d2 : report.bases[s]) {
          (void)der_bracket(d1, d2, spaces[k + s]);
          ++report.brackets_checked;
        }
  return report;
}

}  // namespace hlya
