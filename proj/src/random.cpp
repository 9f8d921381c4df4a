#include "hlya/random.hpp"

#include <functional>
#include <string>
#include <vector>

#include "hlya/error.hpp"

namespace hlya::random {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Vector unit(std::size_t d, std::size_t i, Rational c = 1) {
  Vector v(d);
  v[i] = std::move(c);
  return v;
}

Matrix diag(std::initializer_list<Rational> entries) {
  Matrix m(entries.size(), entries.size());
  std::size_t i = 0;
  for (const auto& x : entries) {
    m(i, i) = x;
    ++i;
  }
  return m;
}

Rational nonzero(std::mt19937_64& rng) {
  Rational r;
  while (r.is_zero()) r = rational(rng);
  return r;
}

struct Family {
  const char* name;
  std::size_t dim;
  Algebra::BinaryRows rows;
  // Draws an endomorphism of the bracket.
  std::function<Matrix(std::mt19937_64&)> morphism;
};

std::vector<Family> families() {
  std::vector<Family> out;
  for (std::size_t d = 1; d <= 3; ++d) {
    out.push_back({"abelian", d, {}, [d](std::mt19937_64& rng) {
                     Matrix m(d, d);
                     for (std::size_t i = 0; i < d; ++i)
                       for (std::size_t j = 0; j < d; ++j) m(i, j) = rational(rng);
                     return m;
                   }});
  }
  // [e1,e2] = e1: beta e1 = a e1, beta e2 = b e1 + e2, or beta e2 = b e1 + c e2 when a = 0.
  out.push_back({"aff1", 2, {{{0, 1}, unit(2, 0)}}, [](std::mt19937_64& rng) {
                   Matrix m(2, 2);
                   if (pick(rng, 0, 3) == 0) {
                     m(0, 1) = rational(rng);
                     m(1, 1) = rational(rng);
                   } else {
                     m(0, 0) = rational(rng);
                     m(0, 1) = rational(rng);
                     m(1, 1) = 1;
                   }
                   return m;
                 }});
  // [e1,e2] = e3: any map on span(e1,e2) plus e3 components, e3 -> det e3.
  out.push_back({"heisenberg", 3, {{{0, 1}, unit(3, 2)}}, [](std::mt19937_64& rng) {
                   Matrix m(3, 3);
                   for (std::size_t i = 0; i < 3; ++i)
                     for (std::size_t j = 0; j < 2; ++j) m(i, j) = rational(rng);
                   m(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
                   return m;
                 }});
  // basis h, e, f: diag(1, l, 1/l) composed with exp(c ad_e).
  out.push_back({"sl2", 3, {{{0, 1}, unit(3, 1, 2)}, {{0, 2}, unit(3, 2, -2)}, {{1, 2}, unit(3, 0)}},
                 [](std::mt19937_64& rng) {
                   const Rational l = nonzero(rng);
                   const Rational c = rational(rng);
                   Matrix ex = Matrix::identity(3);
                   ex(1, 0) = -2 * c;   // h -> h - 2c e
                   ex(0, 2) = c;        // f -> f + c h - c^2 e
                   ex(1, 2) = -(c * c);
                   return diag({1, l, Rational(1) / l}) * ex;
                 }});
  // [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2: rational rotations about a coordinate axis.
  out.push_back({"so3", 3, {{{0, 1}, unit(3, 2)}, {{1, 2}, unit(3, 0)}, {{0, 2}, unit(3, 1, -1)}},
                 [](std::mt19937_64& rng) {
                   const int p = pick(rng, 1, 3), q = pick(rng, 1, 3);
                   const Rational den(p * p + q * q);
                   const Rational c = Rational(p * p - q * q) / den, s = Rational(2 * p * q) / den;
                   Matrix m = Matrix::identity(3);
                   const std::size_t axis = static_cast<std::size_t>(pick(rng, 0, 2));
                   const std::size_t i = (axis + 1) % 3, j = (axis + 2) % 3;
                   m(i, i) = c;
                   m(i, j) = -s;
                   m(j, i) = s;
                   m(j, j) = c;
                   return m;
                 }});
  // [e1,e2] = e2, [e1,e3] = l e3: diag(1, b, c).
  out.push_back({"r3", 3, {{{0, 1}, unit(3, 1)}, {{0, 2}, unit(3, 2, Rational(2, 3))}}, [](std::mt19937_64& rng) {
                   return diag({1, rational(rng), rational(rng)});
                 }});
  // [e3,e1] = e2, [e3,e2] = -e1: scaled rational rotation of span(e1,e2), e3 fixed.
  out.push_back({"e2", 3, {{{0, 2}, unit(3, 1, -1)}, {{1, 2}, unit(3, 0)}}, [](std::mt19937_64& rng) {
                   const int p = pick(rng, 1, 3), q = pick(rng, 0, 3);
                   const Rational den(p * p + q * q);
                   const Rational s = rational(rng);
                   const Rational c = s * Rational(p * p - q * q) / den, sn = s * Rational(2 * p * q) / den;
                   Matrix m = Matrix::identity(3);
                   m(0, 0) = c;
                   m(0, 1) = -sn;
                   m(1, 0) = sn;
                   m(1, 1) = c;
                   return m;
                 }});
  return out;
}

}  // namespace

Rational rational(std::mt19937_64& rng, int range) { return Rational(pick(rng, -range, range), pick(rng, 1, 3)); }

Matrix invertible(std::mt19937_64& rng, std::size_t d) {
  while (true) {
    Matrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = pick(rng, -2, 2);
    if (rank(m) == d) return m;
  }
}

Algebra algebra(std::mt19937_64& rng, std::size_t max_dim) {
  if (max_dim < 1 || max_dim > 3) throw Error(ErrorCode::Validation, "random algebras have dimension 1..3");
  std::vector<Family> fams;
  for (auto& f : families())
    if (f.dim <= max_dim) fams.push_back(std::move(f));
  while (true) {
    const Family& fam = fams[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(fams.size()) - 1))];
    const Matrix id = Matrix::identity(fam.dim);
    const MultilinearMap bracket = Algebra::from_rows("", fam.dim, fam.rows, {}, id).binary();
    const bool standard = pick(rng, 0, 1) == 0;
    Algebra base = standard ? from_lya_standard(fam.name, bracket) : from_lie_algebra(fam.name, bracket, id);
    const int mode = pick(rng, 0, 3);  // 0: untwisted
    std::string name = std::string(fam.name) + (standard ? "-lya" : "-homlie");
    Algebra a = base;
    try {
      if (mode != 0) {
        a = yau_twist(base, fam.morphism(rng), name + "-twisted");
        name += "-twisted";
      }
    } catch (const Error&) {
      continue;
    }
    if (pick(rng, 0, 2) != 0) a = a.change_basis(invertible(rng, fam.dim), name + "-rebased");
    if (!check_axioms(a).all_pass()) continue;
    return a;
  }
}

Cochain cochain(std::mt19937_64& rng, const CochainSpace& space) {
  Vector c(space.dim());
  for (auto& x : c) x = rational(rng);
  return space.combine(c);
}

Vector combination(std::mt19937_64& rng, const Subspace& space) {
  Vector c(space.dim());
  for (auto& x : c) x = rational(rng);
  return space.combine(c);
}

}  // namespace hlya::random
