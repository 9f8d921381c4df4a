#include "hlya/cohomology.hpp"

#include "hlya/error.hpp"

namespace hlya {

namespace {

CohomologyLevel level(Subspace z, Subspace b) {
  CohomologyLevel out;
  out.h_dim = quotient_dim(z, b);
  out.representatives = quotient_representatives(z, b);
  out.z = std::move(z);
  out.b = std::move(b);
  return out;
}

std::vector<Vector> columns(const Subspace& s) {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < s.dim(); ++j) out.push_back(s.basis_vector(j));
  return out;
}

std::optional<Vector> pair_coords(const CochainSpace& s1, const Cochain& f, const CochainSpace& s2, const Cochain& g) {
  auto c1 = s1.coordinates(f);
  auto c2 = s2.coordinates(g);
  if (!c1 || !c2) return std::nullopt;
  c1->insert(c1->end(), c2->begin(), c2->end());
  return c1;
}

}  // namespace

Subspace h1(const CoboundaryComplex& c) { return kernel_basis(c.delta1().matrix); }

CohomologyLevel h2h3(const CoboundaryComplex& c) {
  const Matrix stacked = Matrix::vstack(c.delta2().matrix, c.d2().matrix);
  return level(kernel_basis(stacked), image_basis(c.delta1().matrix));
}

CohomologyLevel h4h5(const CoboundaryComplex& c) {
  return level(kernel_basis(c.delta3().matrix), image_basis(c.delta2().matrix));
}

std::optional<Cochain> is_coboundary_2(const CoboundaryComplex& c, const Cochain& f, const Cochain& g) {
  const Vector target = c.pair_coordinates(c.space(2), f, c.space(3), g);
  const auto h = solve(c.delta1().matrix, target);
  if (!h) return std::nullopt;
  return c.space(1).combine(*h);
}

bool in_z2z3(const CoboundaryComplex& c, const Cochain& f, const Cochain& g) {
  const auto x = pair_coords(c.space(2), f, c.space(3), g);
  return x && is_zero(c.delta2().matrix.apply(*x)) && is_zero(c.d2().matrix.apply(*x));
}

bool in_z4z5(const CoboundaryComplex& c, const Cochain& f, const Cochain& g) {
  const auto x = pair_coords(c.space(4), f, c.space(5), g);
  return x && is_zero(c.delta3().matrix.apply(*x));
}

CohomologyReport cohomology_report(const CoboundaryComplex& c) {
  CohomologyReport r;
  r.c1 = c.space(1).dim();
  r.c2 = c.space(2).dim();
  r.c3 = c.space(3).dim();
  r.c4 = c.space(4).dim();
  r.c5 = c.space(5).dim();
  const Subspace z1 = h1(c);
  r.z1 = z1.dim();
  r.z1_basis = columns(z1);
  const CohomologyLevel two = h2h3(c);
  r.z23 = two.z.dim();
  r.b23 = two.b.dim();
  r.h23 = two.h_dim;
  r.z23_basis = columns(two.z);
  r.b23_basis = columns(two.b);
  const CohomologyLevel four = h4h5(c);
  r.z45 = four.z.dim();
  r.b45 = four.b.dim();
  r.h45 = four.h_dim;
  r.z45_basis = columns(four.z);
  r.b45_basis = columns(four.b);
  return r;
}

}  // namespace hlya
