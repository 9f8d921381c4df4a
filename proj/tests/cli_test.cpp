#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <sys/wait.h>

#include "hlya/io.hpp"

using hlya::io::json;

namespace {

struct Outcome {
  int status = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(HLYA_CLI) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const char* file) { return std::string(HLYA_DATA_DIR) + "/" + file; }

std::string temp_file(const char* name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Cli, CheckSl2) {
  const Outcome r = run("check " + data("e2_sl2.json"));
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(json::parse(r.out)["report"]["all_pass"].get<bool>());
}

TEST(Cli, CohomologyAbelian) {
  const Outcome r = run("cohomology " + data("e0_abelian.json"));
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["report"]["H1"], 4);
}

TEST(Cli, DeformCheckAbelianPlusAff) {
  for (const char* form : {"deform-check ", "deform check "}) {
    const Outcome r = run(form + data("e0_plus_aff.json"));
    ASSERT_EQ(r.status, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["checked_through"], 2);
    EXPECT_TRUE(j["report"]["all_pass"].get<bool>());
  }
}

TEST(Cli, TrivializeReportsTheClass) {
  const Outcome r = run("deform trivialize " + data("e0_plus_aff.json"));
  ASSERT_EQ(r.status, 0);
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["report"]["obstructed"].get<bool>());
  EXPECT_EQ(j["report"]["stage"], 1);
}

TEST(Cli, DeriveAndDump) {
  Outcome r = run("derive " + data("e1_aff.json") + " --k-max 2");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["report"]["dims"].size(), 3u);
  r = run("dump-operator " + data("e2_sl2.json") + " --level d2");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["operator"]["level"], "d2");
  EXPECT_EQ(run("dump-operator " + data("e2_sl2.json") + " --level 4").status, 2);
}

TEST(Cli, ObstructIsSeededAndDeterministic) {
  const Outcome a = run("obstruct probe " + data("e1_aff.json") + " --seed 3 --count 4");
  const Outcome b = run("obstruct " + data("e1_aff.json") + " --seed 3 --count 4");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out)["draws"].size(), 4u);
}

TEST(Cli, Equiv) {
  const std::string d = temp_file("hlya_cli_null.json", R"({"base": ")" + data("e1_aff.json") + R"(", "order": 2})");
  const std::string g = temp_file("hlya_cli_gauge.json", R"({"order": 2, "phi": [[1, [["1", "0"], ["0", "0"]]]]})");
  Outcome r = run("deform equiv " + d + " " + d + " --gauge " + g);
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(json::parse(r.out)["equivalent"].get<bool>());
  // phi_1 = E_21 is not a derivation of aff(1)
  const std::string h = temp_file("hlya_cli_gauge2.json", R"({"order": 2, "phi": [[1, [["0", "0"], ["1", "0"]]]]})");
  r = run("equiv " + d + " " + d + " --gauge " + h);
  ASSERT_EQ(r.status, 0);
  EXPECT_FALSE(json::parse(r.out)["equivalent"].get<bool>());
}

TEST(Cli, OutputFileAndTable) {
  const auto path = (std::filesystem::temp_directory_path() / "hlya_cli_out.json").string();
  ASSERT_EQ(run("cohomology " + data("e1_aff.json") + " --output " + path).status, 0);
  EXPECT_EQ(hlya::io::read_json_file(path)["report"]["H23"], 1);
  const Outcome t = run("cohomology " + data("e1_aff.json") + " --format table");
  EXPECT_NE(t.out.find("H^2 x H^3"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("check /nonexistent.json").status, 2);
  EXPECT_EQ(run("frobnicate " + data("e1_aff.json")).status, 2);
  EXPECT_EQ(run("check " + temp_file("hlya_cli_bad.json", "{\"dim\": 2,")).status, 2);
  const std::string nonh =
      temp_file("hlya_cli_nonh.json", R"({"dim": 2, "binary": [[1, 2, ["1", "0"]]], "ternary": [[1, 2, 1, ["0", "1"]]]})");
  EXPECT_EQ(run("check " + nonh).status, 0);
  EXPECT_EQ(run("cohomology " + nonh).status, 2);
  EXPECT_EQ(run("derive " + data("e1_aff.json") + " --k-max 0").status, 2);
}
