#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "hlya/exactlin.hpp"

namespace hlya {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::size_t kPrimeBudget = 400;

const std::vector<u64>& primes() {
  static const std::vector<u64> list = [] {
    std::vector<u64> out;
    mpz_class p = mpz_class(1) << 62;
    for (std::size_t i = 0; i < kPrimeBudget; ++i) {
      mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
      out.push_back(p.get_ui());
    }
    return out;
  }();
  return list;
}

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

struct ModRref {
  std::vector<u64> reduced;  // rows x cols, first pivots.size() rows meaningful
  std::vector<std::size_t> pivots;
};

ModRref rref_mod(std::vector<u64> a, std::size_t rows, std::size_t cols, u64 p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    }
    const u64 inv = powmod(a[r * cols + c], p - 2, p);
    std::vector<std::size_t> support;
    for (std::size_t j = c; j < cols; ++j) {
      u64& e = a[r * cols + j];
      if (e == 0) continue;
      e = mulmod(e, inv, p);
      support.push_back(j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const u64 f = a[i * cols + c];
      if (f == 0) continue;
      const u64 neg = p - f;
      for (std::size_t j : support) {
        u64& e = a[i * cols + j];
        e = (e + mulmod(neg, a[r * cols + j], p)) % p;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

// (rank, pivots) ordering: more pivots is better, then lexicographically smaller.
bool better(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

std::optional<mpq_class> reconstruct(const mpz_class& a, const mpz_class& m) {
  if (a == 0) return mpq_class(0);
  mpz_class bound = sqrt(mpz_class(m / 2));
  mpz_class r0 = m, r1 = a, t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    mpz_class t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  if (gcd(r1, t1) != 1) return std::nullopt;
  mpq_class out(r1, t1);
  out.canonicalize();
  return out;
}

bool certify(const Matrix& m, const Matrix& r, const std::vector<std::size_t>& pivots) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vector combo(m.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      const Rational& coef = m(i, pivots[k]);
      if (coef.is_zero()) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!r(k, j).is_zero()) combo[j].add_product(coef, r(k, j));
      }
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (combo[j] != m(i, j)) return false;
    }
  }
  return true;
}

}  // namespace

RrefResult rref_multimodular(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (m.is_zero()) return {Matrix(rows, cols), {}};

  // Row scaling leaves the RREF unchanged; clear denominators row by row.
  std::vector<mpz_class> ints(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      if (m(i, j).is_zero() || m(i, j).is_integer()) continue;
      mpz_class den = m(i, j).to_mpq().get_den();
      l = lcm(l, den);
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (m(i, j).is_zero()) continue;
      const mpq_class q = m(i, j).to_mpq();
      ints[i * cols + j] = q.get_num() * (l / q.get_den());
    }
  }

  std::vector<std::size_t> best;
  std::vector<mpz_class> crt;
  mpz_class modulus;
  std::optional<Matrix> previous;
  std::vector<u64> residues(rows * cols);
  for (u64 p : primes()) {
    for (std::size_t e = 0; e < ints.size(); ++e) {
      residues[e] = ints[e] == 0 ? 0 : mpz_fdiv_ui(ints[e].get_mpz_t(), p);
    }
    ModRref mod = rref_mod(residues, rows, cols, p);
    const std::size_t rank = mod.pivots.size();
    if (crt.empty() || better(mod.pivots, best)) {
      best = mod.pivots;
      crt.assign(rank * cols, mpz_class(0));
      for (std::size_t e = 0; e < rank * cols; ++e) crt[e] = mod.reduced[e];
      modulus = p;
      previous.reset();
    } else if (mod.pivots != best) {
      continue;
    } else {
      // x' = x + M * ((r - x) * M^-1 mod p)
      const u64 minv = powmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p - 2, p);
      for (std::size_t e = 0; e < rank * cols; ++e) {
        const u64 x = mpz_fdiv_ui(crt[e].get_mpz_t(), p);
        const u64 diff = (mod.reduced[e] + p - x) % p;
        const u64 k = mulmod(diff, minv, p);
        if (k != 0) crt[e] += modulus * k;
      }
      modulus *= p;
    }
    // Lift to a rational candidate.
    Matrix candidate(rows, cols);
    bool ok = true;
    for (std::size_t i = 0; i < rank && ok; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        const auto q = reconstruct(crt[i * cols + j], modulus);
        if (!q) {
          ok = false;
          break;
        }
        if (*q != 0) candidate(i, j) = Rational(*q);
      }
    }
    if (!ok) {
      previous.reset();
      continue;
    }
    // Only certify once the lift is stable across two moduli.
    if (previous && *previous == candidate && certify(m, candidate, best)) {
      return {std::move(candidate), best};
    }
    previous = std::move(candidate);
  }
  return rref_direct(m);
}

}  // namespace hlya
