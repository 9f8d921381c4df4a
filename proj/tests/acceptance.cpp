// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hlya/deformation.hpp"
#include "hlya/derivations.hpp"
#include "hlya/error.hpp"
#include "hlya/random.hpp"
#include "oracle/oracle.hpp"

using hlya::Algebra;
using hlya::Cochain;
using hlya::CoboundaryComplex;
using hlya::Rational;

namespace {

constexpr std::uint64_t kSeed = 20261016;
constexpr int kRandomAlgebras = 20;

struct Verdict {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::pair<Cochain, Cochain> split(const CoboundaryComplex& c, const hlya::Vector& x) {
  const std::size_t n2 = c.space(2).dim();
  const std::span<const Rational> all(x);
  return {c.space(2).combine(all.subspan(0, n2)), c.space(3).combine(all.subspan(n2))};
}

std::pair<Cochain, Cochain> random_cocycle(std::mt19937_64& rng, const CoboundaryComplex& c) {
  return split(c, hlya::random::combination(rng, hlya::h2h3(c).z));
}

struct Pool {
  std::vector<Algebra> bundled;
  std::vector<Algebra> all;  // bundled first, then random
  std::vector<std::unique_ptr<CoboundaryComplex>> complexes;

  Pool() {
    bundled = hlya::examples::bundled();
    all = bundled;
    std::mt19937_64 rng(kSeed);
    for (int i = 0; i < kRandomAlgebras; ++i) all.push_back(hlya::random::algebra(rng));
    for (const auto& a : all) complexes.push_back(std::make_unique<CoboundaryComplex>(a));
  }
  const CoboundaryComplex& complex(std::size_t i) const { return *complexes[i]; }
};

Verdict composition(const Pool& pool) {
  std::size_t products = 0;
  std::string bad;
  for (std::size_t i = 0; i < pool.all.size(); ++i) {
    const auto& c = pool.complex(i);
    const std::pair<const char*, hlya::Matrix> checks[] = {
        {"delta2 delta1", c.delta2().matrix * c.delta1().matrix},
        {"d2 delta1", c.d2().matrix * c.delta1().matrix},
        {"delta3 delta2", c.delta3().matrix * c.delta2().matrix},
    };
    for (const auto& [name, m] : checks) {
      ++products;
      if (!m.is_zero()) bad += " " + pool.all[i].name() + ":" + name;
    }
  }
  return {bad.empty(), std::to_string(pool.all.size()) + " algebras, " + std::to_string(products) +
                           " operator products" + (bad.empty() ? " all zero" : ", nonzero:" + bad)};
}

// Images of basis cochains under each operator, tested against HomC^n.
Verdict well_defined(const Pool& pool) {
  std::size_t images = 0, strict_bad = 0, d2ii_bad = 0;
  std::string d2ii_where;
  for (std::size_t i = 0; i < pool.all.size(); ++i) {
    const auto& c = pool.complex(i);
    const Algebra& a = c.algebra();
    auto check = [&](const Cochain& x, std::size_t n) {
      ++images;
      return c.space(n).contains(x);
    };
    for (std::size_t j = 0; j < c.space(1).dim(); ++j) {
      const auto p = hlya::formula::delta1(a, c.space(1).basis_cochain(j));
      strict_bad += !check(p.first, 2) + !check(p.second, 3);
    }
    std::size_t bad_here = 0;
    auto pairs = [&](std::size_t n1, std::size_t n2, auto&& apply) {
      for (std::size_t j = 0; j < c.space(n1).dim(); ++j) apply(c.space(n1).basis_cochain(j), Cochain(a.dim(), n2));
      for (std::size_t j = 0; j < c.space(n2).dim(); ++j) apply(Cochain(a.dim(), n1), c.space(n2).basis_cochain(j));
    };
    pairs(2, 3, [&](const Cochain& f, const Cochain& g) {
      const auto p = hlya::formula::delta2(a, f, g);
      strict_bad += !check(p.first, 4) + !check(p.second, 5);
      const auto q = hlya::formula::d2(a, f, g);
      strict_bad += !check(q.first, 3);
      bad_here += !check(q.second, 4);
    });
    pairs(4, 5, [&](const Cochain& f, const Cochain& g) {
      const auto p = hlya::formula::delta3(a, f, g);
      strict_bad += !check(p.first, 6) + !check(p.second, 7);
    });
    if (bad_here > 0) d2ii_where += " " + a.name() + "(" + std::to_string(bad_here) + ")";
    d2ii_bad += bad_here;
  }
  std::ostringstream s;
  s << images << " basis images; delta1, delta2, delta3, d2_I outside HomC: " << strict_bad
    << "; d2_II outside HomC^4: " << d2ii_bad;
  if (d2ii_bad > 0) s << " [" << d2ii_where.substr(1) << "], alternation in slots (3,4) fails";
  return {strict_bad == 0 && d2ii_bad == 0, s.str()};
}

Verdict h1_derivations(const Pool& pool) {
  std::string bad;
  for (std::size_t i = 0; i < pool.all.size(); ++i) {
    const std::size_t h1 = hlya::h1(pool.complex(i)).dim();
    const std::size_t der = hlya::derivation_space(pool.all[i], 0).dim();
    if (h1 != der) bad += " " + pool.all[i].name() + "(" + std::to_string(h1) + " vs " + std::to_string(der) + ")";
  }
  return {bad.empty(), std::to_string(pool.all.size()) + " algebras" + (bad.empty() ? ", dims agree" : ", differ:" + bad)};
}

Verdict der_closure(const Pool& pool) {
  std::size_t brackets = 0;
  std::string bad;
  for (const auto& a : pool.all) {
    std::vector<hlya::DerivationSpace> spaces;
    for (unsigned k = 0; k <= 6; ++k) spaces.push_back(hlya::derivation_space(a, k));
    for (unsigned k = 0; k <= 3; ++k)
      for (unsigned s = 0; s <= 3; ++s)
        for (std::size_t i = 0; i < spaces[k].dim(); ++i)
          for (std::size_t j = 0; j < spaces[s].dim(); ++j) {
            ++brackets;
            try {
              (void)hlya::der_bracket(spaces[k].element(i), spaces[s].element(j), spaces[k + s]);
            } catch (const hlya::Error& e) {
              if (e.code() != hlya::ErrorCode::ClosureViolation) throw;
              bad += " " + a.name() + "(k=" + std::to_string(k) + ",s=" + std::to_string(s) + ")";
            }
          }
  }
  return {bad.empty(), std::to_string(brackets) + " basis commutators for k, s <= 3" +
                           (bad.empty() ? " all in Der_alpha^(k+s)" : ", violations:" + bad)};
}

Verdict infinitesimal(const Pool& pool) {
  std::mt19937_64 rng(kSeed + 5);
  std::size_t draws = 0, passing = 0, mismatches = 0, basis_checked = 0, basis_bad = 0;
  std::bernoulli_distribution from_z(0.5);
  for (int round = 0; draws < 120; ++round) {
    const std::size_t i = static_cast<std::size_t>(round) % pool.all.size();
    const auto& c = pool.complex(i);
    Cochain f1, g1;
    if (from_z(rng)) {
      std::tie(f1, g1) = random_cocycle(rng, c);
    } else {
      f1 = hlya::random::cochain(rng, c.space(2));
      g1 = hlya::random::cochain(rng, c.space(3));
    }
    ++draws;
    const hlya::Deformation d = hlya::make_deformation(c.algebra(), 1, {f1}, {g1});
    const bool passes = hlya::verify_deformation(d).all_pass();
    if (!passes) {
      mismatches += hlya::in_z2z3(c, f1, g1);
      continue;
    }
    ++passing;
    try {
      (void)hlya::infinitesimal(d, c);
    } catch (const hlya::Error&) {
      ++mismatches;
    }
  }
  for (std::size_t i = 0; i < pool.all.size(); ++i) {
    const auto& c = pool.complex(i);
    const auto z = hlya::h2h3(c).z;
    for (std::size_t j = 0; j < z.dim(); ++j) {
      const auto [f1, g1] = split(c, z.basis_vector(j));
      ++basis_checked;
      basis_bad += !hlya::verify_deformation(hlya::make_deformation(c.algebra(), 1, {f1}, {g1})).all_pass();
    }
  }
  std::ostringstream s;
  s << draws << " draws (" << passing << " pass n=1), verdict mismatches " << mismatches << "; " << basis_checked
    << " Z-basis elements, " << basis_bad << " fail n=1";
  return {mismatches == 0 && basis_bad == 0 && passing > 0 && passing < draws, s.str()};
}

Verdict equivalence(const Pool& pool) {
  std::mt19937_64 rng(kSeed + 6);
  std::size_t pairs = 0, bad = 0;
  for (int round = 0; pairs < 60; ++round) {
    const auto& c = pool.complex(static_cast<std::size_t>(round) % pool.all.size());
    const auto [f1, g1] = random_cocycle(rng, c);
    const hlya::Deformation d = hlya::make_deformation(c.algebra(), 1, {f1}, {g1});
    const hlya::Gauge p = hlya::make_gauge(c.algebra(), 1, {hlya::random::cochain(rng, c.space(1)).to_matrix()});
    const hlya::Deformation e = hlya::apply_gauge(d, p);
    ++pairs;
    Cochain df = d.f[1], dg = d.g[1];
    df -= e.f[1];
    dg -= e.g[1];
    const auto h = hlya::is_coboundary_2(c, df, dg);
    bool ok = h.has_value() && hlya::verify_deformation(e).all_pass();
    if (ok) {
      const auto back = hlya::formula::delta1(c.algebra(), *h);
      ok = back.first == df && back.second == dg;
    }
    bad += !ok;
  }
  return {bad == 0, std::to_string(pairs) + " (deformation, gauge) pairs, " + std::to_string(bad) + " without a verified witness"};
}

Verdict rigidity(const Pool& pool) {
  std::mt19937_64 rng(kSeed + 7);
  std::size_t runs = 0, bad = 0;
  double worst = 0;
  const std::size_t n_algebras = pool.bundled.size() + 8;
  for (std::size_t i = 0; i < n_algebras; ++i) {
    const auto& c = pool.complex(i);
    const Algebra& a = c.algebra();
    const auto t0 = Clock::now();
    std::vector<hlya::Matrix> phi;
    for (int k = 0; k < 4; ++k) phi.push_back(hlya::random::cochain(rng, c.space(1)).to_matrix());
    const hlya::Gauge p = hlya::make_gauge(a, 4, phi);
    const hlya::Deformation null = hlya::null_deformation(a, 4);
    const hlya::Deformation d = hlya::apply_gauge(null, p);
    const auto r = hlya::trivialize(d, c);
    ++runs;
    bad += r.obstructed || !hlya::verify_equivalence(d, null, r.gauge);
    worst = std::max(worst, seconds_since(t0));
  }
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << runs << " algebras at N=4, " << bad << " not trivialized; slowest " << worst << " s";
  return {bad == 0 && worst < 120, s.str()};
}

Verdict obstruction(const Pool& pool) {
  std::mt19937_64 rng(kSeed + 8);
  std::size_t draws = 0, bad = 0, nonzero = 0;
  for (std::size_t i = 0; i < pool.bundled.size(); ++i) {
    const auto& c = pool.complex(i);
    for (int t = 0; t < 25; ++t) {
      const auto [f1, g1] = random_cocycle(rng, c);
      const auto ob = hlya::obstruction_pair(c, f1, g1);
      ++draws;
      bad += !(ob.is_cochain_pair && ob.in_z4z5);
      nonzero += !(ob.F.is_zero() && ob.G.is_zero());
    }
  }
  std::ostringstream s;
  s << draws << " cocycles on the bundled algebras (" << nonzero << " with (F,G) != 0), " << bad
    << " outside Z^4 x Z^5";
  return {bad == 0 && draws >= 100, s.str()};
}

Verdict probe(const Pool& pool) {
  std::mt19937_64 rng(kSeed + 9);
  struct Tally {
    std::size_t probes = 0, no_candidate = 0, pass[4] = {0, 0, 0, 0};
  };
  Tally negated, direct;
  std::size_t nonzero_f = 0;
  for (int round = 0; round < 60; ++round) {
    const auto& c = pool.complex(static_cast<std::size_t>(round) % pool.all.size());
    const auto [f1, g1] = random_cocycle(rng, c);
    nonzero_f += !hlya::obstruction_pair(c, f1, g1).F.is_zero();
    for (auto [sign, tally] : {std::pair{hlya::ObstructionSign::Negated, &negated}, std::pair{hlya::ObstructionSign::Direct, &direct}}) {
      const auto cand = hlya::second_order_candidate(c, f1, g1, sign);
      if (!cand) {
        ++tally->no_candidate;
        continue;
      }
      const auto r = hlya::second_order_probe(c, f1, g1, cand->first, cand->second, sign);
      ++tally->probes;
      for (int e = 0; e < 4; ++e) tally->pass[e] += r.equations[e].pass;
    }
  }
  auto line = [](const Tally& t) {
    std::ostringstream s;
    s << t.probes << " probes, eq 7/8 pass " << t.pass[2] << "/" << t.pass[3] << ", eq 5/6 pass " << t.pass[0]
      << "/" << t.pass[1] << " (reported)";
    return s.str();
  };
  const bool ok = negated.probes > 0 && negated.pass[2] == negated.probes && negated.pass[3] == negated.probes;
  std::ostringstream s;
  s << "delta2(f2,g2) = (-F,-G): " << line(negated) << "; with (F,G): " << line(direct) << "; " << nonzero_f
    << " of 60 cocycles have F != 0";
  return {ok, s.str()};
}

Verdict oracle_dims(const Pool& pool) {
  std::size_t compared = 0;
  std::string bad;
  for (const auto& a : pool.bundled) {
    const oracle::Alg oa = oracle::from(a);
    const bool untwisted = a.alpha() == hlya::Matrix::identity(a.dim());
    const std::size_t d = a.dim();
    for (std::size_t n = 1; n <= 7; ++n) {
      const std::size_t main = hlya::build_cochain_space(a, n).dim();
      ++compared;
      if (main != oracle::cochain_dim(oa, n)) bad += " " + a.name() + "/C" + std::to_string(n);
      if (untwisted) {
        std::size_t closed = d;
        for (std::size_t p = 0; p < n / 2; ++p) closed *= d * (d - 1) / 2;
        if (n % 2 == 1) closed *= d;
        if (main != closed) bad += " " + a.name() + "/C" + std::to_string(n) + "(closed form)";
      }
    }
  }
  const std::size_t e0[3] = {hlya::build_cochain_space(pool.bundled[0], 1).dim(),
                             hlya::build_cochain_space(pool.bundled[0], 2).dim(),
                             hlya::build_cochain_space(pool.bundled[0], 3).dim()};
  if (e0[0] != 4 || e0[1] != 2 || e0[2] != 4) bad += " E0 C1..C3";
  return {bad.empty(), std::to_string(compared) + " dims against the brute-force kernel, n <= 7; E0 C1..C3 = " +
                           std::to_string(e0[0]) + "," + std::to_string(e0[1]) + "," + std::to_string(e0[2]) +
                           (bad.empty() ? "" : "; mismatch:" + bad)};
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  const Pool pool;
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict(const Pool&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "composition identities", composition},
      {2, "well-definedness", well_defined},
      {3, "H1 and derivations", h1_derivations},
      {4, "Der(L) closure", der_closure},
      {5, "infinitesimal cocycle", infinitesimal},
      {6, "equivalence classes", equivalence},
      {7, "rigidity round-trip", rigidity},
      {8, "obstruction pair", obstruction},
      {9, "second-order probe", probe},
      {10, "oracle cochain dims", oracle_dims},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t = Clock::now();
    Verdict v;
    try {
      v = c.run(pool);
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("%s criterion %d (%s): %s [%.1f s]\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(),
                seconds_since(t));
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass, %.1f s total\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
              seconds_since(t0));
  return failed == 0 ? 0 : 1;
}
