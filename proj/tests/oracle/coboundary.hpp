#pragma once

// Pointwise evaluation of the coboundary formulas, written term by term from
// their definitions on top of the mpq oracle algebra.

#include <vector>

#include "oracle/oracle.hpp"

namespace oracle {

using Args = std::vector<Vec>;

Vec delta1_I(const Alg& a, const Map& f, const Args& x);
Vec delta1_II(const Alg& a, const Map& f, const Args& x);
Vec delta2_I(const Alg& a, const Map& f, const Map& g, const Args& x);
Vec delta2_II(const Alg& a, const Map& g, const Args& x);
Vec d2_I(const Alg& a, const Map& f, const Map& g, const Args& x);
Vec d2_II(const Alg& a, const Map& f, const Map& g, const Args& x);
// The double sums run over k then i, or over i then k when `i_outer` is set.
Vec delta3_I(const Alg& a, const Map& f, const Map& g, const Args& x, bool i_outer = false);
Vec delta3_II(const Alg& a, const Map& g, const Args& x, bool i_outer = false);

}  // namespace oracle
