#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "hlya/error.hpp"
#include "hlya/io.hpp"
#include "hlya/random.hpp"

using hlya::io::json;

namespace {

std::string parse_message(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const hlya::Error& e) {
    EXPECT_EQ(e.code(), hlya::ErrorCode::Parse);
    return e.what();
  }
  ADD_FAILURE() << "no error thrown";
  return {};
}

std::filesystem::path data_dir() { return HLYA_DATA_DIR; }

}  // namespace

TEST(Rational, Forms) {
  EXPECT_EQ(hlya::io::rational_from_json(json("-3/6"), "x"), hlya::Rational(-1, 2));
  EXPECT_EQ(hlya::io::rational_from_json(json(7), "x"), hlya::Rational(7));
  EXPECT_EQ(hlya::io::to_json(hlya::Rational(5, -10)), json("-1/2"));
  EXPECT_NE(parse_message([] { (void)hlya::io::rational_from_json(json(0.5), "alpha[0][1]"); }).find("alpha[0][1]"),
            std::string::npos);
  EXPECT_NE(parse_message([] { (void)hlya::io::rational_from_json(json("1/0"), "c"); }).find("'c'"), std::string::npos);
}

TEST(Algebra, RoundTrip) {
  std::mt19937_64 rng(151);
  std::vector<hlya::Algebra> algebras = hlya::examples::bundled();
  for (int i = 0; i < 10; ++i) algebras.push_back(hlya::random::algebra(rng));
  for (const auto& a : algebras) {
    const hlya::Algebra back = hlya::io::algebra_from_json(json::parse(hlya::io::dump(hlya::io::to_json(a))));
    EXPECT_EQ(back, a);
    EXPECT_EQ(back.name(), a.name());
  }
}

TEST(Algebra, GoldensMatchBundledExamples) {
  const char* files[] = {"e0_abelian.json", "e1_aff.json", "e2_sl2.json", "e3_heisenberg.json"};
  const auto bundled = hlya::examples::bundled();
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(hlya::io::algebra_from_json(hlya::io::read_json_file(data_dir() / files[i])), bundled[i]) << files[i];
  }
}

TEST(Algebra, Diagnostics) {
  auto msg = [](const char* text) { return parse_message([&] { (void)hlya::io::algebra_from_json(json::parse(text)); }); };
  EXPECT_NE(msg(R"({"binary": []})").find("'dim'"), std::string::npos);
  EXPECT_NE(msg(R"({"dim": 2, "binary": [[1, 3, ["1", "0"]]]})").find("binary[0][1]"), std::string::npos);
  EXPECT_NE(msg(R"({"dim": 2, "binary": [[1, 2, ["1"]]]})").find("binary[0][2]"), std::string::npos);
  EXPECT_NE(msg(R"({"dim": 2, "ternary": [[2, 1, 1, ["1", "0"]]]})").find("ternary[0]"), std::string::npos);
  EXPECT_NE(msg(R"({"dim": 2, "alpha": [["1"]]})").find("'alpha'"), std::string::npos);
  EXPECT_NE(msg(R"({"dim": 2, "binary": [[1, 2, ["1", "0"]], [1, 2, ["0", "1"]]]})").find("twice"), std::string::npos);
}

TEST(Algebra, OmittedEntriesAreZero) {
  const hlya::Algebra a = hlya::io::algebra_from_json(json::parse(R"({"dim": 3})"));
  EXPECT_TRUE(a.binary().is_zero());
  EXPECT_TRUE(a.ternary().is_zero());
  EXPECT_EQ(a.alpha(), hlya::Matrix::identity(3));
}

TEST(ReadFile, SyntaxErrorCarriesLine) {
  const auto path = std::filesystem::temp_directory_path() / "hlya_io_test_bad.json";
  std::ofstream(path) << "{\n  \"dim\": 2,\n  \"binary\": [[1, 2, [\"1\",]]\n}\n";
  EXPECT_NE(parse_message([&] { (void)hlya::io::read_json_file(path); }).find(":3:"), std::string::npos);
  std::filesystem::remove(path);
  EXPECT_NE(parse_message([] { (void)hlya::io::read_json_file("/nonexistent/x.json"); }).find("cannot open"),
            std::string::npos);
}

TEST(Deformation, GoldenAndRoundTrip) {
  const hlya::Deformation d =
      hlya::io::deformation_from_json(hlya::io::read_json_file(data_dir() / "e0_plus_aff.json"), data_dir());
  EXPECT_EQ(d, hlya::make_deformation(hlya::examples::abelian2(), 2, {hlya::examples::aff1_bracket()}, {}));
  std::mt19937_64 rng(157);
  for (int t = 0; t < 6; ++t) {
    const hlya::CoboundaryComplex c(hlya::random::algebra(rng));
    std::vector<hlya::Cochain> f, g;
    for (int i = 0; i < 3; ++i) {
      f.push_back(hlya::random::cochain(rng, c.space(2)));
      g.push_back(hlya::random::cochain(rng, c.space(3)));
    }
    const hlya::Deformation e = hlya::make_deformation(c.algebra(), 3, f, g);
    EXPECT_EQ(hlya::io::deformation_from_json(json::parse(hlya::io::dump(hlya::io::to_json(e)))), e);
  }
}

TEST(Deformation, RejectsNonCochainTerms) {
  json j = hlya::io::to_json(hlya::null_deformation(hlya::examples::aff1(), 1));
  j["f"] = json::parse(R"([[1, [[1, 1, 1, "1"]]]])");
  try {
    (void)hlya::io::deformation_from_json(j);
    FAIL();
  } catch (const hlya::Error& e) {
    EXPECT_EQ(e.code(), hlya::ErrorCode::Validation);
  }
  j["f"] = json::parse(R"([[2, []]])");
  EXPECT_NE(parse_message([&] { (void)hlya::io::deformation_from_json(j); }).find("f[0][0]"), std::string::npos);
}

TEST(Gauge, RoundTrip) {
  std::mt19937_64 rng(163);
  const hlya::CoboundaryComplex c(hlya::examples::heisenberg_twisted());
  std::vector<hlya::Matrix> phi;
  for (int i = 0; i < 3; ++i) phi.push_back(hlya::random::cochain(rng, c.space(1)).to_matrix());
  const hlya::Gauge p = hlya::make_gauge(c.algebra(), 3, phi);
  EXPECT_EQ(hlya::io::gauge_from_json(hlya::io::to_json(p), c.algebra()), p);
}

TEST(Reports, RoundTrip) {
  std::mt19937_64 rng(167);
  std::vector<hlya::Algebra> algebras = hlya::examples::bundled();
  for (int i = 0; i < 3; ++i) algebras.push_back(hlya::random::algebra(rng));
  // one report with a failing axiom
  hlya::Cochain t = hlya::examples::aff1().ternary();
  t.coords()[t.index(std::vector<std::size_t>{0, 1, 0}, 1)] += 1;
  t.coords()[t.index(std::vector<std::size_t>{1, 0, 0}, 1)] -= 1;
  const hlya::Algebra broken("broken", hlya::examples::aff1_bracket(), t, hlya::Matrix::identity(2));
  const auto axioms = hlya::check_axioms(broken);
  ASSERT_FALSE(axioms.all_pass());
  EXPECT_EQ(hlya::io::axiom_report_from_json(json::parse(hlya::io::dump(hlya::io::to_json(axioms)))), axioms);

  for (const auto& a : algebras) {
    const hlya::CoboundaryComplex c(a);
    const std::size_t d = a.dim();
    auto again = [](const json& j) { return json::parse(hlya::io::dump(j)); };

    const auto ax = hlya::check_axioms(a);
    EXPECT_EQ(hlya::io::axiom_report_from_json(again(hlya::io::to_json(ax))), ax);

    const auto coh = hlya::cohomology_report(c);
    EXPECT_EQ(hlya::io::cohomology_report_from_json(again(hlya::io::to_json(coh))), coh);

    const auto der = hlya::check_der_is_lie(a, 2);
    EXPECT_EQ(hlya::io::der_lie_report_from_json(again(hlya::io::to_json(der))), der);

    const auto two = hlya::h2h3(c);
    const std::size_t n2 = c.space(2).dim();
    const hlya::Vector x = hlya::random::combination(rng, two.z);
    const std::span<const hlya::Rational> all(x);
    const hlya::Cochain f1 = c.space(2).combine(all.subspan(0, n2));
    const hlya::Cochain g1 = c.space(3).combine(all.subspan(n2));

    const auto dep = hlya::make_deformation(a, 2, {f1, hlya::random::cochain(rng, c.space(2))}, {g1});
    const auto vr = hlya::verify_deformation(dep);
    EXPECT_EQ(hlya::io::deformation_report_from_json(again(hlya::io::to_json(vr))), vr);

    const auto tr = hlya::trivialize(hlya::make_deformation(a, 1, {f1}, {g1}), c);
    EXPECT_EQ(hlya::io::trivialize_result_from_json(again(hlya::io::to_json(tr)), d), tr);

    const auto ob = hlya::obstruction_pair(c, f1, g1);
    EXPECT_EQ(hlya::io::obstruction_pair_from_json(again(hlya::io::to_json(ob)), d), ob);

    if (const auto cand = hlya::second_order_candidate(c, f1, g1)) {
      const auto pr = hlya::second_order_probe(c, f1, g1, cand->first, cand->second);
      EXPECT_EQ(hlya::io::probe_report_from_json(again(hlya::io::to_json(pr)), d), pr);
    }
  }
}

TEST(Reports, EmissionIsDeterministic) {
  const hlya::CoboundaryComplex c1(hlya::examples::sl2());
  const hlya::CoboundaryComplex c2(hlya::examples::sl2());
  EXPECT_EQ(hlya::io::dump(hlya::io::to_json(hlya::cohomology_report(c1))),
            hlya::io::dump(hlya::io::to_json(hlya::cohomology_report(c2))));
}

TEST(Operator, Dump) {
  const hlya::CoboundaryComplex c(hlya::examples::aff1());
  const json j = hlya::io::to_json(c.delta1());
  EXPECT_EQ(j["level"], "1");
  EXPECT_EQ(j["rows"], c.delta1().matrix.rows());
  EXPECT_EQ(j["cols"], c.delta1().matrix.cols());
  hlya::Matrix back(j["rows"].get<std::size_t>(), j["cols"].get<std::size_t>());
  for (const auto& e : j["entries"]) {
    back(e[0].get<std::size_t>() - 1, e[1].get<std::size_t>() - 1) = hlya::io::rational_from_json(e[2], "entry");
  }
  EXPECT_EQ(back, c.delta1().matrix);
}
