#include "hlya/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hlya/error.hpp"

namespace hlya::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::Parse, "field '" + field + "': " + what);
}

const json& member(const json& j, const char* key, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(field.empty() ? key : field + "." + key, "missing");
  return *it;
}

std::string sub(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }
std::string key(const std::string& field, const char* name) { return field.empty() ? name : field + "." + name; }

std::size_t size_from_json(const json& j, const std::string& field) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    fail(field, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

bool bool_from_json(const json& j, const std::string& field) {
  if (!j.is_boolean()) fail(field, "expected a boolean");
  return j.get<bool>();
}

const json& array_of(const json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array");
  return j;
}

// 1-based index in [1, dim], returned 0-based.
std::size_t index_from_json(const json& j, std::size_t dim, const std::string& field) {
  const std::size_t i = size_from_json(j, field);
  if (i < 1 || i > dim) fail(field, "index " + std::to_string(i) + " out of range 1.." + std::to_string(dim));
  return i - 1;
}

Vector row_from_json(const json& j, std::size_t dim, const std::string& field) {
  Vector v = vector_from_json(j, field);
  if (v.size() != dim) fail(field, "expected " + std::to_string(dim) + " entries");
  return v;
}

json indices_to_json(const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (std::size_t i : idx) out.push_back(i + 1);
  return out;
}

std::vector<std::size_t> indices_from_json(const json& j, const std::string& field) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < array_of(j, field).size(); ++i) {
    const std::size_t v = size_from_json(j[i], sub(field, i));
    if (v < 1) fail(sub(field, i), "indices are 1-based");
    out.push_back(v - 1);
  }
  return out;
}

json vectors_to_json(const std::vector<Vector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

std::vector<Vector> vectors_from_json(const json& j, const std::string& field) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < array_of(j, field).size(); ++i) out.push_back(vector_from_json(j[i], sub(field, i)));
  return out;
}

// [[i, payload]..] with 1 <= i <= order, each i at most once.
template <class Parse>
void graded_terms(const json& j, std::size_t order, const std::string& field, Parse&& parse) {
  std::vector<bool> seen(order + 1, false);
  for (std::size_t t = 0; t < array_of(j, field).size(); ++t) {
    const std::string f = sub(field, t);
    if (!j[t].is_array() || j[t].size() != 2) fail(f, "expected [order, value]");
    const std::size_t i = size_from_json(j[t][0], sub(f, 0));
    if (i < 1 || i > order) fail(sub(f, 0), "term order " + std::to_string(i) + " outside 1.." + std::to_string(order));
    if (seen[i]) fail(sub(f, 0), "term order " + std::to_string(i) + " given twice");
    seen[i] = true;
    parse(i, j[t][1], sub(f, 1));
  }
}

json graded_cochains(const std::vector<Cochain>& terms) {
  json out = json::array();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (!terms[i].is_zero()) out.push_back(json::array({i, cochain_to_json(terms[i])}));
  }
  return out;
}

json optional_cochain(const std::optional<Cochain>& c) { return c ? cochain_to_json(*c) : json(nullptr); }

std::optional<Cochain> optional_cochain_from_json(const json& j, std::size_t dim, std::size_t arity,
                                                  const std::string& field) {
  if (j.is_null()) return std::nullopt;
  return cochain_from_json(j, dim, arity, field);
}

json equation_to_json(int eq, std::size_t n, const IdentityCheck& c) {
  json out = to_json(c);
  out["eq"] = eq;
  out["n"] = n;
  return out;
}

bool flat(const json& j, int depth) {
  if (!j.is_structured()) return true;
  if (!j.is_array() || depth == 0) return false;
  return std::all_of(j.begin(), j.end(), [&](const json& e) { return flat(e, depth - 1); });
}

void dump_into(const json& j, std::size_t indent, std::string& out) {
  if (flat(j, 2)) {
    out += j.dump();
    return;
  }
  const std::string pad(indent + 2, ' ');
  const bool obj = j.is_object();
  out += obj ? "{\n" : "[\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (obj) out += json(it.key()).dump() + ": ";
    dump_into(*it, indent + 2, out);
  }
  out += "\n" + std::string(indent, ' ') + (obj ? "}" : "]");
}

}  // namespace

std::string dump(const json& j) {
  std::string out;
  dump_into(j, 0, out);
  return out + "\n";
}

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j, const std::string& field) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
      fail(field, e.what());
    }
  }
  if (j.is_number_integer()) {
    return Rational::parse(j.is_number_unsigned() ? std::to_string(j.get<unsigned long long>())
                                                  : std::to_string(j.get<long long>()));
  }
  fail(field, "expected a rational string such as \"-3/4\"");
}

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Vector vector_from_json(const json& j, const std::string& field) {
  Vector out;
  for (std::size_t i = 0; i < array_of(j, field).size(); ++i) out.push_back(rational_from_json(j[i], sub(field, i)));
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Matrix matrix_from_json(const json& j, const std::string& field) {
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < array_of(j, field).size(); ++r) {
    rows.push_back(vector_from_json(j[r], sub(field, r)));
    if (rows.back().size() != rows.front().size()) fail(sub(field, r), "ragged matrix row");
  }
  return Matrix::from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

json cochain_to_json(const Cochain& f) {
  json out = json::array();
  std::vector<std::size_t> inputs(f.arity());
  for (std::size_t flat = 0; flat < f.size(); ++flat) {
    if (f.coords()[flat].is_zero()) continue;
    const std::size_t k = f.decode(flat, inputs);
    json entry = indices_to_json(inputs);
    entry.push_back(k + 1);
    entry.push_back(to_json(f.coords()[flat]));
    out.push_back(std::move(entry));
  }
  return out;
}

Cochain cochain_from_json(const json& j, std::size_t dim, std::size_t arity, const std::string& field) {
  Cochain out(dim, arity);
  std::vector<bool> seen(out.size(), false);
  std::vector<std::size_t> inputs(arity);
  for (std::size_t e = 0; e < array_of(j, field).size(); ++e) {
    const std::string f = sub(field, e);
    if (!j[e].is_array() || j[e].size() != arity + 2) {
      fail(f, "expected " + std::to_string(arity) + " input indices, an output index and a coefficient");
    }
    for (std::size_t s = 0; s < arity; ++s) inputs[s] = index_from_json(j[e][s], dim, sub(f, s));
    const std::size_t k = index_from_json(j[e][arity], dim, sub(f, arity));
    const std::size_t flat = out.index(inputs, k);
    if (seen[flat]) fail(f, "entry given twice");
    seen[flat] = true;
    out.coords()[flat] = rational_from_json(j[e][arity + 1], sub(f, arity + 1));
  }
  return out;
}

json to_json(const Algebra& a) {
  const std::size_t d = a.dim();
  json binary = json::array();
  json ternary = json::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vector row(d);
      for (std::size_t k = 0; k < d; ++k) row[k] = a.binary().at(std::array<std::size_t, 2>{i, j}, k);
      if (!is_zero(row)) binary.push_back(json::array({i + 1, j + 1, to_json(row)}));
      for (std::size_t l = 0; l < d; ++l) {
        for (std::size_t k = 0; k < d; ++k) row[k] = a.ternary().at(std::array<std::size_t, 3>{i, j, l}, k);
        if (!is_zero(row)) ternary.push_back(json::array({i + 1, j + 1, l + 1, to_json(row)}));
      }
    }
  return {{"name", a.name()}, {"dim", d}, {"binary", binary}, {"ternary", ternary}, {"alpha", to_json(a.alpha())}};
}

Algebra algebra_from_json(const json& j) {
  if (!j.is_object()) fail("", "expected an algebra object");
  std::string name;
  if (const auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) fail("name", "expected a string");
    name = it->get<std::string>();
  }
  const std::size_t d = size_from_json(member(j, "dim", ""), "dim");
  if (d == 0) fail("dim", "must be positive");
  Algebra::BinaryRows binary;
  if (const auto it = j.find("binary"); it != j.end()) {
    for (std::size_t r = 0; r < array_of(*it, "binary").size(); ++r) {
      const std::string f = sub("binary", r);
      const json& row = (*it)[r];
      if (!row.is_array() || row.size() != 3) fail(f, "expected [i, j, [c_1..c_d]]");
      const std::size_t a = index_from_json(row[0], d, sub(f, 0));
      const std::size_t b = index_from_json(row[1], d, sub(f, 1));
      if (a >= b) fail(f, "rows must have i < j");
      if (binary.contains({a, b})) fail(f, "row given twice");
      binary[{a, b}] = row_from_json(row[2], d, sub(f, 2));
    }
  }
  Algebra::TernaryRows ternary;
  if (const auto it = j.find("ternary"); it != j.end()) {
    for (std::size_t r = 0; r < array_of(*it, "ternary").size(); ++r) {
      const std::string f = sub("ternary", r);
      const json& row = (*it)[r];
      if (!row.is_array() || row.size() != 4) fail(f, "expected [i, j, k, [c_1..c_d]]");
      const std::size_t a = index_from_json(row[0], d, sub(f, 0));
      const std::size_t b = index_from_json(row[1], d, sub(f, 1));
      const std::size_t c = index_from_json(row[2], d, sub(f, 2));
      if (a >= b) fail(f, "rows must have i < j");
      if (ternary.contains({a, b, c})) fail(f, "row given twice");
      ternary[{a, b, c}] = row_from_json(row[3], d, sub(f, 3));
    }
  }
  Matrix alpha = Matrix::identity(d);
  if (const auto it = j.find("alpha"); it != j.end()) {
    alpha = matrix_from_json(*it, "alpha");
    if (alpha.rows() != d || alpha.cols() != d) fail("alpha", "expected a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
  }
  return Algebra::from_rows(std::move(name), d, binary, ternary, std::move(alpha));
}

json to_json(const Deformation& d) {
  return {{"base", to_json(d.base)}, {"order", d.order}, {"f", graded_cochains(d.f)}, {"g", graded_cochains(d.g)}};
}

Deformation deformation_from_json(const json& j, const std::filesystem::path& dir) {
  const json& base_j = member(j, "base", "");
  Algebra base = [&] {
    if (base_j.is_string()) {
      std::filesystem::path p = base_j.get<std::string>();
      if (p.is_relative()) p = dir / p;
      return algebra_from_json(read_json_file(p));
    }
    try {
      return algebra_from_json(base_j);
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, std::string("in base: ") + e.what());
    }
  }();
  const std::size_t order = size_from_json(member(j, "order", ""), "order");
  const std::size_t d = base.dim();
  std::vector<Cochain> f(order, Cochain(d, 2)), g(order, Cochain(d, 3));
  const CochainSpace c2 = build_cochain_space(base, 2);
  const CochainSpace c3 = build_cochain_space(base, 3);
  if (const auto it = j.find("f"); it != j.end()) {
    graded_terms(*it, order, "f", [&](std::size_t i, const json& v, const std::string& field) {
      f[i - 1] = cochain_from_json(v, d, 2, field);
      if (!c2.contains(f[i - 1])) throw Error(ErrorCode::Validation, "f_" + std::to_string(i) + " is not a 2-cochain");
    });
  }
  if (const auto it = j.find("g"); it != j.end()) {
    graded_terms(*it, order, "g", [&](std::size_t i, const json& v, const std::string& field) {
      g[i - 1] = cochain_from_json(v, d, 3, field);
      if (!c3.contains(g[i - 1])) throw Error(ErrorCode::Validation, "g_" + std::to_string(i) + " is not a 3-cochain");
    });
  }
  return make_deformation(base, order, std::move(f), std::move(g));
}

json to_json(const Gauge& p) {
  json phi = json::array();
  for (std::size_t i = 1; i < p.phi.size(); ++i) {
    if (!p.phi[i].is_zero()) phi.push_back(json::array({i, to_json(p.phi[i])}));
  }
  return {{"order", p.order}, {"phi", phi}};
}

Gauge gauge_from_json(const json& j, const Algebra& base) {
  const std::size_t order = size_from_json(member(j, "order", ""), "order");
  const std::size_t d = base.dim();
  std::vector<Matrix> phi(order, Matrix(d, d));
  if (const auto it = j.find("phi"); it != j.end()) {
    graded_terms(*it, order, "phi", [&](std::size_t i, const json& v, const std::string& field) {
      phi[i - 1] = matrix_from_json(v, field);
      if (phi[i - 1].rows() != d || phi[i - 1].cols() != d) fail(field, "expected a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
    });
  }
  return make_gauge(base, order, std::move(phi));
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw Error(ErrorCode::Parse, path.string() + ":" + std::to_string(line) + ": " + e.what());
  }
}

json to_json(const IdentityCheck& c) {
  return {{"pass", c.pass}, {"tuple", indices_to_json(c.tuple)}, {"residual", to_json(c.residual)}};
}

IdentityCheck identity_check_from_json(const json& j) {
  IdentityCheck c;
  c.pass = bool_from_json(member(j, "pass", ""), "pass");
  c.tuple = indices_from_json(member(j, "tuple", ""), "tuple");
  c.residual = vector_from_json(member(j, "residual", ""), "residual");
  return c;
}

json to_json(const AxiomReport& r) {
  json axioms = json::array();
  for (std::size_t i = 0; i < r.axioms.size(); ++i) {
    json a = to_json(r.axioms[i]);
    a["eq"] = i + 1;
    axioms.push_back(std::move(a));
  }
  return {{"all_pass", r.all_pass()}, {"axioms", axioms}};
}

AxiomReport axiom_report_from_json(const json& j) {
  const json& axioms = array_of(member(j, "axioms", ""), "axioms");
  AxiomReport r;
  if (axioms.size() != r.axioms.size()) fail("axioms", "expected 8 entries");
  for (std::size_t i = 0; i < axioms.size(); ++i) r.axioms[i] = identity_check_from_json(axioms[i]);
  return r;
}

json to_json(const CohomologyReport& r) {
  return {{"C1", r.c1},   {"C2", r.c2},   {"C3", r.c3},   {"C4", r.c4},   {"C5", r.c5},
          {"Z1", r.z1},   {"H1", r.z1},   {"Z23", r.z23}, {"B23", r.b23}, {"H23", r.h23},
          {"Z45", r.z45}, {"B45", r.b45}, {"H45", r.h45},
          {"bases",
           {{"Z1", vectors_to_json(r.z1_basis)},
            {"Z23", vectors_to_json(r.z23_basis)},
            {"B23", vectors_to_json(r.b23_basis)},
            {"Z45", vectors_to_json(r.z45_basis)},
            {"B45", vectors_to_json(r.b45_basis)}}}};
}

CohomologyReport cohomology_report_from_json(const json& j) {
  CohomologyReport r;
  auto num = [&](const char* key) { return size_from_json(member(j, key, ""), key); };
  r.c1 = num("C1");
  r.c2 = num("C2");
  r.c3 = num("C3");
  r.c4 = num("C4");
  r.c5 = num("C5");
  r.z1 = num("Z1");
  r.z23 = num("Z23");
  r.b23 = num("B23");
  r.h23 = num("H23");
  r.z45 = num("Z45");
  r.b45 = num("B45");
  r.h45 = num("H45");
  const json& bases = member(j, "bases", "");
  auto basis = [&](const char* name) { return vectors_from_json(member(bases, name, "bases"), key("bases", name)); };
  r.z1_basis = basis("Z1");
  r.z23_basis = basis("Z23");
  r.b23_basis = basis("B23");
  r.z45_basis = basis("Z45");
  r.b45_basis = basis("B45");
  return r;
}

json to_json(const DerLieReport& r) {
  json bases = json::array();
  for (const auto& level : r.bases) {
    json ms = json::array();
    for (const auto& m : level) ms.push_back(to_json(m));
    bases.push_back(std::move(ms));
  }
  return {{"k_max", r.k_max},
          {"dims", r.dims},
          {"brackets_checked", r.brackets_checked},
          {"alpha_nilpotent", r.alpha_nilpotent},
          {"bases", bases}};
}

DerLieReport der_lie_report_from_json(const json& j) {
  DerLieReport r;
  r.k_max = static_cast<unsigned>(size_from_json(member(j, "k_max", ""), "k_max"));
  const json& dims = array_of(member(j, "dims", ""), "dims");
  for (std::size_t i = 0; i < dims.size(); ++i) r.dims.push_back(size_from_json(dims[i], sub("dims", i)));
  r.brackets_checked = size_from_json(member(j, "brackets_checked", ""), "brackets_checked");
  r.alpha_nilpotent = bool_from_json(member(j, "alpha_nilpotent", ""), "alpha_nilpotent");
  const json& bases = array_of(member(j, "bases", ""), "bases");
  for (std::size_t k = 0; k < bases.size(); ++k) {
    std::vector<Matrix> level;
    for (std::size_t i = 0; i < array_of(bases[k], sub("bases", k)).size(); ++i) {
      level.push_back(matrix_from_json(bases[k][i], sub(sub("bases", k), i)));
    }
    r.bases.push_back(std::move(level));
  }
  return r;
}

json to_json(const DeformationReport& r) {
  json results = json::array();
  for (const auto& e : r.results) results.push_back(equation_to_json(e.eq, e.n, e.check));
  return {{"all_pass", r.all_pass()}, {"results", results}};
}

DeformationReport deformation_report_from_json(const json& j) {
  DeformationReport r;
  const json& results = array_of(member(j, "results", ""), "results");
  for (std::size_t i = 0; i < results.size(); ++i) {
    const std::string f = sub("results", i);
    EquationResult e;
    e.eq = static_cast<int>(size_from_json(member(results[i], "eq", f), key(f, "eq")));
    e.n = size_from_json(member(results[i], "n", f), key(f, "n"));
    e.check = identity_check_from_json(results[i]);
    r.results.push_back(std::move(e));
  }
  return r;
}

json to_json(const TrivializeResult& r) {
  return {{"obstructed", r.obstructed},
          {"stage", r.stage},
          {"steps", r.steps},
          {"gauge", to_json(r.gauge)},
          {"f_class", optional_cochain(r.f_class)},
          {"g_class", optional_cochain(r.g_class)}};
}

TrivializeResult trivialize_result_from_json(const json& j, std::size_t dim) {
  TrivializeResult r;
  r.obstructed = bool_from_json(member(j, "obstructed", ""), "obstructed");
  r.stage = size_from_json(member(j, "stage", ""), "stage");
  const json& steps = array_of(member(j, "steps", ""), "steps");
  for (std::size_t i = 0; i < steps.size(); ++i) r.steps.push_back(size_from_json(steps[i], sub("steps", i)));
  // The gauge carries no algebra; rebuild it without the commutation check.
  const json& g = member(j, "gauge", "");
  r.gauge = identity_gauge(dim, size_from_json(member(g, "order", "gauge"), "gauge.order"));
  graded_terms(member(g, "phi", "gauge"), r.gauge.order, "gauge.phi",
               [&](std::size_t i, const json& v, const std::string& field) { r.gauge.phi[i] = matrix_from_json(v, field); });
  r.f_class = optional_cochain_from_json(member(j, "f_class", ""), dim, 2, "f_class");
  r.g_class = optional_cochain_from_json(member(j, "g_class", ""), dim, 3, "g_class");
  return r;
}

json to_json(const ObstructionPair& p) {
  return {{"F", cochain_to_json(p.F)},
          {"G", cochain_to_json(p.G)},
          {"is_cochain_pair", p.is_cochain_pair},
          {"in_z4z5", p.in_z4z5}};
}

ObstructionPair obstruction_pair_from_json(const json& j, std::size_t dim) {
  ObstructionPair p;
  p.F = cochain_from_json(member(j, "F", ""), dim, 4, "F");
  p.G = cochain_from_json(member(j, "G", ""), dim, 5, "G");
  p.is_cochain_pair = bool_from_json(member(j, "is_cochain_pair", ""), "is_cochain_pair");
  p.in_z4z5 = bool_from_json(member(j, "in_z4z5", ""), "in_z4z5");
  return p;
}

json to_json(const ProbeReport& r) {
  json eqs = json::array();
  for (std::size_t i = 0; i < r.equations.size(); ++i) eqs.push_back(equation_to_json(static_cast<int>(i) + 5, 2, r.equations[i]));
  return {{"equations", eqs}, {"obstruction", to_json(r.obstruction)}};
}

ProbeReport probe_report_from_json(const json& j, std::size_t dim) {
  ProbeReport r;
  const json& eqs = array_of(member(j, "equations", ""), "equations");
  if (eqs.size() != r.equations.size()) fail("equations", "expected 4 entries");
  for (std::size_t i = 0; i < eqs.size(); ++i) r.equations[i] = identity_check_from_json(eqs[i]);
  r.obstruction = obstruction_pair_from_json(member(j, "obstruction", ""), dim);
  return r;
}

json to_json(const CoboundaryMap& m) {
  json domain = json::array();
  json codomain = json::array();
  for (const auto* s : m.domain) domain.push_back(s->dim());
  for (const auto* s : m.codomain) codomain.push_back(s->dim());
  json entries = json::array();
  for (std::size_t r = 0; r < m.matrix.rows(); ++r)
    for (std::size_t c = 0; c < m.matrix.cols(); ++c) {
      if (!m.matrix(r, c).is_zero()) entries.push_back(json::array({r + 1, c + 1, to_json(m.matrix(r, c))}));
    }
  return {{"level", level_name(m.level)},
          {"rows", m.matrix.rows()},
          {"cols", m.matrix.cols()},
          {"domain", domain},
          {"codomain", codomain},
          {"entries", entries}};
}

}  // namespace hlya::io
