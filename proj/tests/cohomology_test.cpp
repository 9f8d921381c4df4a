#include <random>

#include <gtest/gtest.h>

#include "hlya/cohomology.hpp"
#include "hlya/derivations.hpp"
#include "hlya/error.hpp"
#include "hlya/random.hpp"
#include "oracle/coboundary.hpp"
#include "oracle/oracle.hpp"

using hlya::Algebra;
using hlya::Cochain;
using hlya::CoboundaryComplex;
using hlya::Matrix;
using hlya::Rational;
using hlya::Vector;

namespace {

oracle::Vec concat(const oracle::Map& a, const oracle::Map& b) {
  oracle::Vec out = a.c;
  out.insert(out.end(), b.c.begin(), b.c.end());
  return out;
}

// Cocycle and coboundary dimensions from pointwise-tabulated images of the
// basis cochains, reduced by the oracle's own rank routine.
struct OracleDims {
  std::size_t z1, z23, b23, z45, b45;
};

OracleDims oracle_dims(const CoboundaryComplex& c) {
  const oracle::Alg o = oracle::from(c.algebra());
  const std::size_t d = o.d;
  std::vector<oracle::Vec> d1, d2, d3;
  for (std::size_t j = 0; j < c.space(1).dim(); ++j) {
    const auto f = oracle::map_of(c.space(1).basis_cochain(j));
    d1.push_back(concat(oracle::tabulate(d, 2, [&](const oracle::Args& x) { return oracle::delta1_I(o, f, x); }),
                        oracle::tabulate(d, 3, [&](const oracle::Args& x) { return oracle::delta1_II(o, f, x); })));
  }
  const oracle::Map zero2{d, 2, oracle::Vec(hlya::ipow(d, 3))};
  const oracle::Map zero3{d, 3, oracle::Vec(hlya::ipow(d, 4))};
  const oracle::Map zero4{d, 4, oracle::Vec(hlya::ipow(d, 5))};
  const oracle::Map zero5{d, 5, oracle::Vec(hlya::ipow(d, 6))};
  auto level2 = [&](const oracle::Map& f, const oracle::Map& g) {
    oracle::Vec v = concat(oracle::tabulate(d, 4, [&](const oracle::Args& x) { return oracle::delta2_I(o, f, g, x); }),
                           oracle::tabulate(d, 5, [&](const oracle::Args& x) { return oracle::delta2_II(o, g, x); }));
    const oracle::Vec w = concat(oracle::tabulate(d, 3, [&](const oracle::Args& x) { return oracle::d2_I(o, f, g, x); }),
                                 oracle::tabulate(d, 4, [&](const oracle::Args& x) { return oracle::d2_II(o, f, g, x); }));
    return std::pair{v, w};
  };
  std::vector<oracle::Vec> stacked;
  for (std::size_t j = 0; j < c.space(2).dim(); ++j) {
    auto [v, w] = level2(oracle::map_of(c.space(2).basis_cochain(j)), zero3);
    d2.push_back(v);
    v.insert(v.end(), w.begin(), w.end());
    stacked.push_back(v);
  }
  for (std::size_t j = 0; j < c.space(3).dim(); ++j) {
    auto [v, w] = level2(zero2, oracle::map_of(c.space(3).basis_cochain(j)));
    d2.push_back(v);
    v.insert(v.end(), w.begin(), w.end());
    stacked.push_back(v);
  }
  auto level3 = [&](const oracle::Map& f, const oracle::Map& g) {
    return concat(oracle::tabulate(d, 6, [&](const oracle::Args& x) { return oracle::delta3_I(o, f, g, x); }),
                  oracle::tabulate(d, 7, [&](const oracle::Args& x) { return oracle::delta3_II(o, g, x); }));
  };
  for (std::size_t j = 0; j < c.space(4).dim(); ++j) d3.push_back(level3(oracle::map_of(c.space(4).basis_cochain(j)), zero5));
  for (std::size_t j = 0; j < c.space(5).dim(); ++j) d3.push_back(level3(zero4, oracle::map_of(c.space(5).basis_cochain(j))));
  const std::size_t n1 = c.space(1).dim();
  const std::size_t n23 = c.space(2).dim() + c.space(3).dim();
  const std::size_t n45 = c.space(4).dim() + c.space(5).dim();
  const std::size_t r1 = oracle::rank(d1);
  return {n1 - r1, n23 - oracle::rank(stacked), r1, n45 - oracle::rank(d3), oracle::rank(d2)};
}

void expect_matches_oracle(const Algebra& a) {
  const CoboundaryComplex c(a);
  const auto r = hlya::cohomology_report(c);
  const auto o = oracle_dims(c);
  EXPECT_EQ(r.z1, o.z1) << a.name();
  EXPECT_EQ(r.z23, o.z23) << a.name();
  EXPECT_EQ(r.b23, o.b23) << a.name();
  EXPECT_EQ(r.z45, o.z45) << a.name();
  EXPECT_EQ(r.b45, o.b45) << a.name();
  EXPECT_EQ(r.h23, r.z23 - r.b23);
  EXPECT_EQ(r.h45, r.z45 - r.b45);
}

Matrix permutation(const std::vector<std::size_t>& p) {
  Matrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(p[i], i) = 1;
  return m;
}

}  // namespace

TEST(Cohomology, AbelianExamples) {
  const CoboundaryComplex c(hlya::examples::abelian2());
  EXPECT_EQ(hlya::h1(c).dim(), 4u);
  const auto two = hlya::h2h3(c);
  EXPECT_EQ(two.b.dim(), 0u);
  EXPECT_EQ(two.h_dim, two.z.dim());
  // On a plane d2 vanishes, so every cochain pair is a cocycle.
  EXPECT_EQ(two.z.dim(), c.space(2).dim() + c.space(3).dim());
  const auto four = hlya::h4h5(c);
  EXPECT_EQ(four.z.dim(), c.space(4).dim() + c.space(5).dim());
  EXPECT_EQ(four.b.dim(), 0u);
}

TEST(Cohomology, AgreesWithOracleOnSmallAlgebras) {
  for (const auto& a : hlya::examples::bundled()) {
    if (a.dim() <= 2 || a.name() == "E3") expect_matches_oracle(a);
  }
  std::mt19937_64 rng(41);
  int done = 0;
  while (done < 6) {
    const Algebra a = hlya::random::algebra(rng, 2);
    expect_matches_oracle(a);
    ++done;
  }
}

TEST(Cohomology, SmallExampleDims) {
  const auto r1 = hlya::cohomology_report(CoboundaryComplex(hlya::examples::aff1()));
  EXPECT_EQ(r1.z1, 2u);
  EXPECT_EQ(r1.h23, 1u);
  const auto r2 = hlya::cohomology_report(CoboundaryComplex(hlya::examples::sl2()));
  EXPECT_EQ(r2.z1, 3u);
  EXPECT_EQ(r2.b23, 6u);
}

TEST(CohomologyProperty, BoundariesAreCocycles) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const CoboundaryComplex c(hlya::random::algebra(rng));
    const auto two = hlya::h2h3(c);
    const auto four = hlya::h4h5(c);
    EXPECT_TRUE(two.z.contains(two.b));
    EXPECT_TRUE(four.z.contains(four.b));
    EXPECT_EQ(two.representatives.size(), two.h_dim);
    EXPECT_EQ(four.representatives.size(), four.h_dim);
  }
}

TEST(CohomologyProperty, H1MatchesDerivations) {
  std::mt19937_64 rng(47);
  std::vector<Algebra> algebras = hlya::examples::bundled();
  for (int i = 0; i < 10; ++i) algebras.push_back(hlya::random::algebra(rng));
  for (const auto& a : algebras) {
    const CoboundaryComplex c(a);
    const auto z1 = hlya::h1(c);
    const auto der = hlya::derivation_space(a, 0);
    ASSERT_EQ(z1.dim(), der.dim()) << a.name();
    for (std::size_t j = 0; j < z1.dim(); ++j) {
      EXPECT_TRUE(der.contains(c.space(1).combine(z1.basis_vector(j)).to_matrix())) << a.name();
    }
  }
}

TEST(CohomologyProperty, InvariantUnderBasisPermutation) {
  std::mt19937_64 rng(53);
  std::vector<Algebra> algebras = hlya::examples::bundled();
  for (int i = 0; i < 4; ++i) algebras.push_back(hlya::random::algebra(rng));
  for (const auto& a : algebras) {
    std::vector<std::size_t> p(a.dim());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = (i + 1) % p.size();
    const auto r = hlya::cohomology_report(CoboundaryComplex(a));
    const auto s = hlya::cohomology_report(CoboundaryComplex(a.change_basis(permutation(p), "permuted")));
    EXPECT_EQ(r.z1, s.z1);
    EXPECT_EQ(r.h23, s.h23);
    EXPECT_EQ(r.z23, s.z23);
    EXPECT_EQ(r.h45, s.h45);
    EXPECT_EQ(r.z45, s.z45);
  }
}

TEST(IsCoboundary, Examples) {
  const CoboundaryComplex e0(hlya::examples::abelian2());
  const auto zero = hlya::is_coboundary_2(e0, Cochain(2, 2), Cochain(2, 3));
  ASSERT_TRUE(zero.has_value());
  EXPECT_TRUE(hlya::formula::delta1(e0.algebra(), *zero).first.is_zero());
  EXPECT_FALSE(hlya::is_coboundary_2(e0, hlya::examples::aff1_bracket(), Cochain(2, 3)).has_value());

  const CoboundaryComplex e1(hlya::examples::aff1());
  std::mt19937_64 rng(59);
  for (int t = 0; t < 10; ++t) {
    const Cochain f = hlya::random::cochain(rng, e1.space(1));
    const auto img = hlya::formula::delta1(e1.algebra(), f);
    const auto h = hlya::is_coboundary_2(e1, img.first, img.second);
    ASSERT_TRUE(h.has_value());
    const auto back = hlya::formula::delta1(e1.algebra(), *h);
    EXPECT_EQ(back.first, img.first);
    EXPECT_EQ(back.second, img.second);
  }
  Cochain bad(2, 2);
  bad.coords()[0] = 1;  // [e1, e1] != 0
  EXPECT_THROW((void)hlya::is_coboundary_2(e1, bad, Cochain(2, 3)), hlya::Error);
}

TEST(IsCoboundaryProperty, WitnessIffRankUnchanged) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 8; ++trial) {
    const CoboundaryComplex c(hlya::random::algebra(rng));
    const auto two = hlya::h2h3(c);
    for (int t = 0; t < 4; ++t) {
      const Vector x = hlya::random::combination(rng, two.z);
      const std::size_t n2 = c.space(2).dim();
      const std::span<const Rational> all(x);
      const Cochain f = c.space(2).combine(all.subspan(0, n2));
      const Cochain g = c.space(3).combine(all.subspan(n2));
      std::vector<Vector> cols;
      for (std::size_t j = 0; j < two.b.dim(); ++j) cols.push_back(two.b.basis_vector(j));
      const std::size_t rb = hlya::rank(Matrix::from_columns(x.size(), cols));
      cols.push_back(x);
      const bool in_b = hlya::rank(Matrix::from_columns(x.size(), cols)) == rb;
      EXPECT_EQ(hlya::is_coboundary_2(c, f, g).has_value(), in_b);
      EXPECT_TRUE(hlya::in_z2z3(c, f, g));
    }
  }
}
