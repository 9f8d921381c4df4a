#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hlya/coboundary.hpp"

namespace hlya {

/// Cocycles and coboundaries at one level, as subspaces of the concatenated
/// coordinates of the level's cochain pair.
struct CohomologyLevel {
  Subspace z;
  Subspace b;
  std::size_t h_dim = 0;
  /// Columns of z's basis completing b's basis; they represent H = Z/B.
  std::vector<Vector> representatives;
};

/// HomZ^1 = HomH^1: kernel of delta1 in HomC^1 coordinates.
[[nodiscard]] Subspace h1(const CoboundaryComplex& c);

/// Z = ker [delta2; d2], B = im delta1, in HomC^2 x HomC^3 coordinates.
/// Throws Error(NotContained) if B is not inside Z.
[[nodiscard]] CohomologyLevel h2h3(const CoboundaryComplex& c);

/// Z = ker delta3, B = im delta2, in HomC^4 x HomC^5 coordinates.
/// Throws Error(NotContained) if B is not inside Z.
[[nodiscard]] CohomologyLevel h4h5(const CoboundaryComplex& c);

/// Some 1-cochain h with delta1 h = (f, g), or nullopt. Throws
/// Error(NotACochain) when (f, g) is not in HomC^2 x HomC^3.
[[nodiscard]] std::optional<Cochain> is_coboundary_2(const CoboundaryComplex& c, const Cochain& f, const Cochain& g);

/// Whether (f, g) lies in HomZ^2 x HomZ^3 (false when not even a cochain pair).
[[nodiscard]] bool in_z2z3(const CoboundaryComplex& c, const Cochain& f, const Cochain& g);

/// Whether (F, G) lies in HomZ^4 x HomZ^5 (false when not even a cochain pair).
[[nodiscard]] bool in_z4z5(const CoboundaryComplex& c, const Cochain& f, const Cochain& g);

struct CohomologyReport {
  std::size_t c1 = 0, c2 = 0, c3 = 0, c4 = 0, c5 = 0;
  std::size_t z1 = 0;
  std::size_t z23 = 0, b23 = 0, h23 = 0;
  std::size_t z45 = 0, b45 = 0, h45 = 0;
  /// Bases as coordinate vectors in the cochain spaces (see h1, h2h3, h4h5).
  std::vector<Vector> z1_basis, z23_basis, b23_basis, z45_basis, b45_basis;

  friend bool operator==(const CohomologyReport&, const CohomologyReport&) = default;
};

[[nodiscard]] CohomologyReport cohomology_report(const CoboundaryComplex& c);

}  // namespace hlya
