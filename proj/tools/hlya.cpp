#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hlya/error.hpp"
#include "hlya/io.hpp"
#include "hlya/random.hpp"

namespace {

using hlya::io::json;

struct Config {
  std::string command;
  std::vector<std::string> inputs;
  std::string output;
  std::string format = "json";
  std::string gauge;
  std::string level = "1";
  unsigned k_max = 3;
  std::size_t order = 4;
  std::uint64_t seed = 0;
  std::size_t count = 10;
  std::string sign = "negated";
};

struct Report {
  json data;
  std::string table;
};

hlya::Algebra load_algebra(const std::string& path) { return hlya::io::algebra_from_json(hlya::io::read_json_file(path)); }

hlya::Deformation load_deformation(const std::string& path) {
  const std::filesystem::path p(path);
  return hlya::io::deformation_from_json(hlya::io::read_json_file(p), p.parent_path());
}

std::string yes_no(bool b) { return b ? "pass" : "FAIL"; }

std::string tuple_str(const std::vector<std::size_t>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i] + 1);
  return s + ")";
}

std::string check_str(const hlya::IdentityCheck& c) {
  if (c.pass) return "pass";
  std::string s = "FAIL at e" + tuple_str(c.tuple) + " residual [";
  for (std::size_t i = 0; i < c.residual.size(); ++i) s += (i ? " " : "") + c.residual[i].str();
  return s + "]";
}

Report run_check(const Config& cfg) {
  const hlya::Algebra a = load_algebra(cfg.inputs.at(0));
  const auto r = hlya::check_axioms(a);
  std::ostringstream t;
  t << "algebra " << a.name() << " (dim " << a.dim() << ")\n";
  for (std::size_t i = 0; i < r.axioms.size(); ++i) t << "  axiom " << i + 1 << ": " << check_str(r.axioms[i]) << "\n";
  t << (r.all_pass() ? "all axioms hold\n" : "not a Hom-Lie-Yamaguti algebra\n");
  return {{{"command", "check"}, {"algebra", a.name()}, {"report", hlya::io::to_json(r)}}, t.str()};
}

Report run_cohomology(const Config& cfg) {
  const hlya::Algebra a = load_algebra(cfg.inputs.at(0));
  hlya::require_hlya(a);
  const hlya::CoboundaryComplex c(a);
  const auto r = hlya::cohomology_report(c);
  std::ostringstream t;
  t << "algebra " << a.name() << " (dim " << a.dim() << ")\n";
  t << "  dim C^n, n=1..5: " << r.c1 << " " << r.c2 << " " << r.c3 << " " << r.c4 << " " << r.c5 << "\n";
  t << "  H^1        Z " << r.z1 << "  B 0  H " << r.z1 << "\n";
  t << "  H^2 x H^3  Z " << r.z23 << "  B " << r.b23 << "  H " << r.h23 << "\n";
  t << "  H^4 x H^5  Z " << r.z45 << "  B " << r.b45 << "  H " << r.h45 << "\n";
  return {{{"command", "cohomology"}, {"algebra", a.name()}, {"report", hlya::io::to_json(r)}}, t.str()};
}

Report run_derive(const Config& cfg) {
  const hlya::Algebra a = load_algebra(cfg.inputs.at(0));
  hlya::require_hlya(a);
  const auto r = hlya::check_der_is_lie(a, cfg.k_max);
  std::ostringstream t;
  t << "algebra " << a.name() << "\n";
  for (std::size_t k = 0; k < r.dims.size(); ++k) t << "  dim Der_alpha^" << k << " = " << r.dims[k] << "\n";
  t << "  " << r.brackets_checked << " brackets closed\n";
  if (r.alpha_nilpotent) t << "  alpha is nilpotent\n";
  return {{{"command", "derive"}, {"algebra", a.name()}, {"report", hlya::io::to_json(r)}}, t.str()};
}

Report run_deform_check(const Config& cfg) {
  const hlya::Deformation d = load_deformation(cfg.inputs.at(0));
  const std::size_t through = std::min(cfg.order, d.order);
  const auto r = hlya::verify_deformation(d, through);
  std::ostringstream t;
  t << "deformation of " << d.base.name() << ", order " << d.order << ", checked through " << through << "\n";
  for (const auto& e : r.results) {
    if (!e.check.pass) t << "  eq " << e.eq << " n=" << e.n << ": " << check_str(e.check) << "\n";
  }
  t << (r.all_pass() ? "all equations hold\n" : "equations fail\n");
  json out{{"command", "deform-check"},
           {"algebra", d.base.name()},
           {"order", d.order},
           {"checked_through", through},
           {"report", hlya::io::to_json(r)}};
  return {out, t.str()};
}

Report run_trivialize(const Config& cfg) {
  const hlya::Deformation d = load_deformation(cfg.inputs.at(0));
  const hlya::CoboundaryComplex c(d.base);
  const auto r = hlya::trivialize(d, c);
  const bool verified = !r.obstructed && hlya::verify_equivalence(d, hlya::null_deformation(d.base, d.order), r.gauge);
  std::ostringstream t;
  t << "deformation of " << d.base.name() << ", order " << d.order << "\n";
  t << "  gauge steps at orders:";
  for (auto s : r.steps) t << " " << s;
  t << "\n";
  if (r.obstructed) {
    t << "  order " << r.stage << " term is a nontrivial class\n";
  } else {
    t << "  equivalent to the null deformation: " << (verified ? "verified" : "NOT verified") << "\n";
  }
  json out{{"command", "trivialize"}, {"algebra", d.base.name()}, {"report", hlya::io::to_json(r)}, {"verified", verified}};
  return {out, t.str()};
}

Report run_equiv(const Config& cfg) {
  if (cfg.inputs.size() != 2) throw hlya::Error(hlya::ErrorCode::Validation, "equiv takes two deformation files");
  if (cfg.gauge.empty()) throw hlya::Error(hlya::ErrorCode::Validation, "equiv needs --gauge");
  const hlya::Deformation d1 = load_deformation(cfg.inputs[0]);
  const hlya::Deformation d2 = load_deformation(cfg.inputs[1]);
  const hlya::Gauge p = hlya::io::gauge_from_json(hlya::io::read_json_file(cfg.gauge), d1.base);
  const bool eq = hlya::verify_equivalence(d1, d2, p);
  std::ostringstream t;
  t << "gauge " << (eq ? "maps" : "does not map") << " the first deformation onto the second\n";
  return {{{"command", "equiv"}, {"algebra", d1.base.name()}, {"equivalent", eq}}, t.str()};
}

json probe_entry(const hlya::CoboundaryComplex& c, const hlya::Cochain& f1, const hlya::Cochain& g1,
                 const std::optional<std::pair<hlya::Cochain, hlya::Cochain>>& given, hlya::ObstructionSign sign,
                 std::ostringstream& t) {
  const hlya::Rational s = sign == hlya::ObstructionSign::Negated ? hlya::Rational(-1) : hlya::Rational(1);
  const auto ob = hlya::obstruction_pair(c, f1, g1);
  json out{{"f1", hlya::io::cochain_to_json(f1)}, {"g1", hlya::io::cochain_to_json(g1)}, {"obstruction", hlya::io::to_json(ob)}};
  t << "  obstruction in Z^4 x Z^5: " << yes_no(ob.in_z4z5) << (ob.F.is_zero() && ob.G.is_zero() ? " (zero)" : "")
    << "\n";
  std::optional<std::pair<hlya::Cochain, hlya::Cochain>> second;
  std::string source = "none";
  if (given) {
    const auto d2 = hlya::formula::delta2(c.algebra(), given->first, given->second);
    if (d2.first == s * ob.F && d2.second == s * ob.G) {
      second = given;
      source = "input";
    }
  }
  if (!second) {
    second = hlya::second_order_candidate(c, f1, g1, sign);
    if (second) source = "candidate";
  }
  out["second_order_source"] = source;
  if (!second) {
    out["probe"] = nullptr;
    t << "  no (f2, g2) with delta2(f2, g2) = " << (s == 1 ? "(F, G)" : "(-F, -G)") << "\n";
    return out;
  }
  const auto r = hlya::second_order_probe(c, f1, g1, second->first, second->second, sign);
  out["f2"] = hlya::io::cochain_to_json(second->first);
  out["g2"] = hlya::io::cochain_to_json(second->second);
  out["probe"] = hlya::io::to_json(r);
  t << "  second order from " << source << ":";
  for (std::size_t i = 0; i < r.equations.size(); ++i) t << "  eq " << i + 5 << " " << yes_no(r.equations[i].pass);
  t << "\n";
  return out;
}

Report run_obstruct(const Config& cfg) {
  const auto sign = cfg.sign == "direct" ? hlya::ObstructionSign::Direct : hlya::ObstructionSign::Negated;
  const json in = hlya::io::read_json_file(cfg.inputs.at(0));
  std::ostringstream t;
  json draws = json::array();
  std::string name;
  if (in.is_object() && in.contains("base")) {
    const hlya::Deformation d =
        hlya::io::deformation_from_json(in, std::filesystem::path(cfg.inputs[0]).parent_path());
    if (d.order < 1) throw hlya::Error(hlya::ErrorCode::Validation, "obstruct needs a deformation of order >= 1");
    name = d.base.name();
    hlya::require_hlya(d.base);
    const hlya::CoboundaryComplex c(d.base);
    std::optional<std::pair<hlya::Cochain, hlya::Cochain>> given;
    if (d.order >= 2) given.emplace(d.f[2], d.g[2]);
    t << "first-order data of " << name << "\n";
    draws.push_back(probe_entry(c, d.f[1], d.g[1], given, sign, t));
  } else {
    const hlya::Algebra a = hlya::io::algebra_from_json(in);
    name = a.name();
    hlya::require_hlya(a);
    const hlya::CoboundaryComplex c(a);
    const auto two = hlya::h2h3(c);
    const std::size_t n2 = c.space(2).dim();
    std::mt19937_64 rng(cfg.seed);
    for (std::size_t i = 0; i < cfg.count; ++i) {
      const hlya::Vector x = hlya::random::combination(rng, two.z);
      const std::span<const hlya::Rational> all(x);
      t << "draw " << i + 1 << " of " << cfg.count << "\n";
      draws.push_back(probe_entry(c, c.space(2).combine(all.subspan(0, n2)), c.space(3).combine(all.subspan(n2)),
                                  std::nullopt, sign, t));
    }
  }
  json out{{"command", "obstruct"}, {"algebra", name}, {"sign", cfg.sign}, {"draws", draws}};
  if (!in.contains("base")) {
    out["seed"] = cfg.seed;
    out["count"] = cfg.count;
  }
  return {out, t.str()};
}

Report run_dump_operator(const Config& cfg) {
  const hlya::Algebra a = load_algebra(cfg.inputs.at(0));
  hlya::require_hlya(a);
  const hlya::CoboundaryComplex c(a);
  hlya::Level level;
  if (cfg.level == "1") {
    level = hlya::Level::One;
  } else if (cfg.level == "2") {
    level = hlya::Level::Two;
  } else if (cfg.level == "3") {
    level = hlya::Level::Three;
  } else if (cfg.level == "d2") {
    level = hlya::Level::D2;
  } else {
    throw hlya::Error(hlya::ErrorCode::Validation, "--level must be 1, 2, 3 or d2");
  }
  const auto& m = c.map(level);
  std::ostringstream t;
  t << "operator " << cfg.level << " on " << a.name() << ": " << m.matrix.rows() << " x " << m.matrix.cols() << ", rank "
    << hlya::rank(m.matrix) << "\n";
  for (std::size_t r = 0; r < m.matrix.rows(); ++r) {
    t << " ";
    for (std::size_t col = 0; col < m.matrix.cols(); ++col) t << " " << m.matrix(r, col).str();
    t << "\n";
  }
  return {{{"command", "dump-operator"}, {"algebra", a.name()}, {"operator", hlya::io::to_json(m)}}, t.str()};
}

// "deform check" and friends are spelled as single commands internally.
std::vector<std::string> normalize(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.size() >= 2 && args[0] == "deform") {
    if (args[1] == "check") args[1] = "deform-check";
    if (args[1] == "check" || args[1] == "deform-check" || args[1] == "trivialize" || args[1] == "equiv") {
      args.erase(args.begin());
    }
  } else if (args.size() >= 2 && args[0] == "obstruct" && args[1] == "probe") {
    args.erase(args.begin() + 1);
  }
  std::reverse(args.begin(), args.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Exact cohomology, derivations and deformations of Hom-Lie-Yamaguti algebras"};
  app.require_subcommand(1);
  struct Command {
    const char* name;
    const char* help;
    Report (*run)(const Config&);
  };
  const std::vector<Command> commands = {
      {"check", "verify the eight axioms of an algebra file", run_check},
      {"cohomology", "cochain, cocycle, coboundary and cohomology dimensions", run_cohomology},
      {"derive", "alpha^k-derivation spaces and closure of their brackets", run_derive},
      {"deform-check", "verify the deformation equations order by order", run_deform_check},
      {"trivialize", "gauge a deformation to the null deformation or find the obstructing class", run_trivialize},
      {"equiv", "check that a gauge maps one deformation onto another", run_equiv},
      {"obstruct", "obstruction pair and second-order probe", run_obstruct},
      {"dump-operator", "coboundary operator matrix", run_dump_operator},
  };
  for (const auto& cmd : commands) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->add_option("inputs", cfg.inputs, "input file(s)")->required()->check(CLI::ExistingFile);
    sub->add_option("--output", cfg.output, "write the report here instead of stdout");
    sub->add_option("--format", cfg.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--k-max", cfg.k_max, "largest k + s for derivation brackets")->capture_default_str();
    sub->add_option("--order", cfg.order, "highest order to verify")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "seed for randomized probes")->capture_default_str();
    sub->add_option("--count", cfg.count, "number of random draws")->capture_default_str();
    sub->add_option("--gauge", cfg.gauge, "gauge file")->check(CLI::ExistingFile);
    sub->add_option("--sign", cfg.sign, "right-hand side of delta2(f2, g2): negated (-F, -G) or direct (F, G)")
        ->check(CLI::IsMember({"negated", "direct"}))
        ->capture_default_str();
    sub->add_option("--level", cfg.level, "operator: 1, 2, 3 or d2")->capture_default_str();
    sub->callback([&cfg, name = cmd.name] { cfg.command = name; });
  }
  try {
    app.parse(normalize(argc, argv));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Report report;
    for (const auto& cmd : commands) {
      if (cfg.command == cmd.name) report = cmd.run(cfg);
    }
    const std::string text = cfg.format == "table" ? report.table : hlya::io::dump(report.data);
    if (cfg.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.output);
      if (!out) throw hlya::Error(hlya::ErrorCode::Validation, "cannot write " + cfg.output);
      out << text;
    }
  } catch (const hlya::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hlya::is_theorem_violation(e.code()) ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
