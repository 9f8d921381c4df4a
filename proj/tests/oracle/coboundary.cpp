#include "oracle/coboundary.hpp"

namespace oracle {

namespace {

Vec add(Vec acc, const Q& s, const Vec& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += s * v[i];
  return acc;
}

// sum_k sum_{i>2k} (-1)^k c(alpha^2 x_1, .. omit x_{2k-1}, x_{2k} .., {x_{2k-1} x_{2k} x_i} at i, ..)
// Summed over i in the outer loop when `i_outer` is set.
Vec bracket_sum(const Alg& a, const Map& c, const Args& x, std::size_t k_max, bool i_outer) {
  const std::size_t n = x.size();
  std::vector<std::pair<std::size_t, std::size_t>> order;
  if (i_outer) {
    for (std::size_t i = 3; i <= n; ++i)
      for (std::size_t k = 1; k <= k_max && 2 * k < i; ++k) order.emplace_back(k, i);
  } else {
    for (std::size_t k = 1; k <= k_max; ++k)
      for (std::size_t i = 2 * k + 1; i <= n; ++i) order.emplace_back(k, i);
  }
  Vec acc(a.d);
  for (auto [k, i] : order) {
    const Q sign = k % 2 == 0 ? 1 : -1;
    Args args;
    for (std::size_t j = 1; j <= n; ++j) {
      if (j == 2 * k - 1 || j == 2 * k) continue;
      if (j == i) {
        args.push_back(tr(a, x[2 * k - 2], x[2 * k - 1], x[i - 1]));
      } else {
        args.push_back(tw(a, x[j - 1], 2));
      }
    }
    acc = add(acc, sign, c(args));
  }
  return acc;
}

}  // namespace

Vec delta1_I(const Alg& a, const Map& f, const Args& x) {
  const Vec &p = x[0], &q = x[1];
  return minus(plus(br(a, p, f({q})), br(a, f({p}), q)), f({br(a, p, q)}));
}

Vec delta1_II(const Alg& a, const Map& f, const Args& x) {
  const Vec &p = x[0], &q = x[1], &r = x[2];
  Vec out = plus(tr(a, f({p}), q, r), tr(a, p, f({q}), r));
  out = plus(out, tr(a, p, q, f({r})));
  return minus(out, f({tr(a, p, q, r)}));
}

Vec delta2_I(const Alg& a, const Map& f, const Map& g, const Args& v) {
  const Vec &x = v[0], &y = v[1], &z = v[2], &u = v[3];
  Vec out(a.d);
  out = add(out, 1, tr(a, tw(a, x, 1), tw(a, y, 1), f({z, u})));
  out = add(out, -1, f({tr(a, x, y, z), tw(a, u, 2)}));
  out = add(out, -1, f({tw(a, z, 2), tr(a, x, y, u)}));
  out = add(out, 1, g({tw(a, x, 1), tw(a, y, 1), br(a, z, u)}));
  out = add(out, -1, br(a, tw(a, z, 2), g({x, y, u})));
  out = add(out, -1, br(a, g({x, y, z}), tw(a, u, 2)));
  return out;
}

Vec delta2_II(const Alg& a, const Map& g, const Args& v) {
  const Vec &x = v[0], &y = v[1], &u = v[2], &vv = v[3], &w = v[4];
  Vec out(a.d);
  out = add(out, 1, tr(a, tw(a, x, 2), tw(a, y, 2), g({u, vv, w})));
  out = add(out, -1, tr(a, g({x, y, u}), tw(a, vv, 2), tw(a, w, 2)));
  out = add(out, -1, tr(a, tw(a, u, 2), g({x, y, vv}), tw(a, w, 2)));
  out = add(out, -1, tr(a, tw(a, u, 2), tw(a, vv, 2), g({x, y, w})));
  out = add(out, 1, g({tw(a, x, 2), tw(a, y, 2), tr(a, u, vv, w)}));
  out = add(out, -1, g({tr(a, x, y, u), tw(a, vv, 2), tw(a, w, 2)}));
  out = add(out, -1, g({tw(a, u, 2), tr(a, x, y, vv), tw(a, w, 2)}));
  out = add(out, -1, g({tw(a, u, 2), tw(a, vv, 2), tr(a, x, y, w)}));
  return out;
}

Vec d2_I(const Alg& a, const Map& f, const Map& g, const Args& v) {
  Vec out(a.d);
  for (int c = 0; c < 3; ++c) {
    const Vec &x = v[c % 3], &y = v[(c + 1) % 3], &z = v[(c + 2) % 3];
    out = add(out, 1, br(a, f({x, y}), tw(a, z, 1)));
    out = add(out, 1, f({br(a, x, y), tw(a, z, 1)}));
    out = add(out, 1, g({x, y, z}));
  }
  return out;
}

Vec d2_II(const Alg& a, const Map& f, const Map& g, const Args& v) {
  const Vec& u = v[3];
  Vec out(a.d);
  for (int c = 0; c < 3; ++c) {
    const Vec &x = v[c % 3], &y = v[(c + 1) % 3], &z = v[(c + 2) % 3];
    out = add(out, 1, tr(a, f({x, y}), tw(a, z, 1), tw(a, u, 1)));
    out = add(out, 1, g({br(a, x, y), tw(a, z, 1), tw(a, u, 1)}));
  }
  return out;
}

Vec delta3_I(const Alg& a, const Map& f, const Map& g, const Args& x, bool i_outer) {
  Vec out(a.d);
  out = add(out, 1, tr(a, tw(a, x[0], 3), tw(a, x[1], 3), f({x[2], x[3], x[4], x[5]})));
  out = add(out, -1, tr(a, tw(a, x[2], 3), tw(a, x[3], 3), f({x[0], x[1], x[4], x[5]})));
  out = add(out, 1, bracket_sum(a, f, x, 2, i_outer));
  out = add(out, -1, g({tw(a, x[0], 1), tw(a, x[1], 1), tw(a, x[2], 1), tw(a, x[3], 1), br(a, x[4], x[5])}));
  out = add(out, 1, br(a, tw(a, x[4], 4), g({x[0], x[1], x[2], x[3], x[5]})));
  out = add(out, 1, br(a, g({x[0], x[1], x[2], x[3], x[4]}), tw(a, x[5], 4)));
  return out;
}

Vec delta3_II(const Alg& a, const Map& g, const Args& x, bool i_outer) {
  Vec out(a.d);
  for (std::size_t k = 1; k <= 3; ++k) {
    Args rest;
    for (std::size_t j = 1; j <= 7; ++j)
      if (j != 2 * k - 1 && j != 2 * k) rest.push_back(x[j - 1]);
    out = add(out, k % 2 == 1 ? 1 : -1, tr(a, tw(a, x[2 * k - 2], 4), tw(a, x[2 * k - 1], 4), g(rest)));
  }
  out = add(out, 1, bracket_sum(a, g, x, 3, i_outer));
  out = add(out, 1, tr(a, g({x[0], x[1], x[2], x[3], x[4]}), tw(a, x[5], 4), tw(a, x[6], 4)));
  out = add(out, -1, tr(a, g({x[0], x[1], x[2], x[3], x[5]}), tw(a, x[4], 4), tw(a, x[6], 4)));
  return out;
}

}  // namespace oracle
