#pragma once

#include <cstddef>
#include <random>

#include "hlya/algebra.hpp"
#include "hlya/cochain.hpp"

namespace hlya::random {

/// Small rational with numerator in [-range, range] and denominator in 1..3.
[[nodiscard]] Rational rational(std::mt19937_64& rng, int range = 3);

/// Invertible d x d integer matrix with small entries.
[[nodiscard]] Matrix invertible(std::mt19937_64& rng, std::size_t d);

/// A verified HLYA of dimension <= max_dim (at most 3): a small Lie algebra
/// (abelian, aff(1), Heisenberg, sl2, so3, r3, e(2)) made into either its
/// standard Lie-Yamaguti algebra or a Hom-Lie algebra, twisted by a random
/// endomorphism and written in a random basis.
[[nodiscard]] Algebra algebra(std::mt19937_64& rng, std::size_t max_dim = 3);

/// Random element of a cochain space.
[[nodiscard]] Cochain cochain(std::mt19937_64& rng, const CochainSpace& space);

/// Random linear combination of the given basis vectors.
[[nodiscard]] Vector combination(std::mt19937_64& rng, const Subspace& space);

}  // namespace hlya::random
