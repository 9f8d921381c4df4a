#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hlya/algebra.hpp"
#include "hlya/coboundary.hpp"
#include "hlya/cohomology.hpp"
#include "hlya/deformation.hpp"
#include "hlya/derivations.hpp"

/// JSON formats. Basis indices in files are 1-based; rationals are strings
/// "p/q" (plain integers are accepted on input). Parsing errors are
/// Error(Parse) and name the offending field.
namespace hlya::io {

using json = nlohmann::json;

[[nodiscard]] json to_json(const Rational& r);
[[nodiscard]] Rational rational_from_json(const json& j, const std::string& field);

[[nodiscard]] json to_json(const Vector& v);
[[nodiscard]] Vector vector_from_json(const json& j, const std::string& field);

/// Dense row-major array of rows.
[[nodiscard]] json to_json(const Matrix& m);
[[nodiscard]] Matrix matrix_from_json(const json& j, const std::string& field);

/// Sparse list [[i_1, .., i_n, k, "p/q"], ..] of the nonzero coordinates
/// f(e_i1, .., e_in) = .. + c e_k.
[[nodiscard]] json cochain_to_json(const Cochain& f);
[[nodiscard]] Cochain cochain_from_json(const json& j, std::size_t dim, std::size_t arity, const std::string& field);

/// { "name", "dim", "binary": [[i, j, [c..]]..] (i < j), "ternary": [[i, j, k, [c..]]..] (i < j), "alpha" }.
[[nodiscard]] json to_json(const Algebra& a);
[[nodiscard]] Algebra algebra_from_json(const json& j);

/// { "base": algebra object or path, "order": N, "f": [[i, cochain]..], "g": [[i, cochain]..] }.
/// A string base is resolved against `dir`. Every term must lie in HomC^2
/// or HomC^3 (Error(Validation) otherwise).
[[nodiscard]] json to_json(const Deformation& d);
[[nodiscard]] Deformation deformation_from_json(const json& j, const std::filesystem::path& dir = {});

/// { "order": N, "phi": [[i, matrix]..] } for the terms phi_1.., phi_0 = id.
[[nodiscard]] json to_json(const Gauge& p);
[[nodiscard]] Gauge gauge_from_json(const json& j, const Algebra& base);

/// Indented output with arrays of scalars, and arrays of those, kept on one line.
[[nodiscard]] std::string dump(const json& j);

/// Reads a file and parses it; Error(Parse) carries the line of a syntax error.
[[nodiscard]] json read_json_file(const std::filesystem::path& path);

[[nodiscard]] json to_json(const IdentityCheck& c);
[[nodiscard]] IdentityCheck identity_check_from_json(const json& j);

[[nodiscard]] json to_json(const AxiomReport& r);
[[nodiscard]] AxiomReport axiom_report_from_json(const json& j);

[[nodiscard]] json to_json(const CohomologyReport& r);
[[nodiscard]] CohomologyReport cohomology_report_from_json(const json& j);

[[nodiscard]] json to_json(const DerLieReport& r);
[[nodiscard]] DerLieReport der_lie_report_from_json(const json& j);

[[nodiscard]] json to_json(const DeformationReport& r);
[[nodiscard]] DeformationReport deformation_report_from_json(const json& j);

/// Needs the algebra dimension to rebuild the class cochains.
[[nodiscard]] json to_json(const TrivializeResult& r);
[[nodiscard]] TrivializeResult trivialize_result_from_json(const json& j, std::size_t dim);

[[nodiscard]] json to_json(const ObstructionPair& p);
[[nodiscard]] ObstructionPair obstruction_pair_from_json(const json& j, std::size_t dim);

[[nodiscard]] json to_json(const ProbeReport& r);
[[nodiscard]] ProbeReport probe_report_from_json(const json& j, std::size_t dim);

/// { "level", "rows", "cols", "domain": [dims], "codomain": [dims], "entries": [[r, c, "p/q"]..] }, 1-based.
[[nodiscard]] json to_json(const CoboundaryMap& m);

}  // namespace hlya::io
