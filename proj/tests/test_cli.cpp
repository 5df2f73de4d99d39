#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "motdt/cli.hpp"
#include "motdt/error.hpp"

using namespace motdt;

namespace {

const std::string kData = MOTDT_DATA_DIR;
const std::string kGolden = MOTDT_GOLDEN_DIR;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "motdt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// MOTDT_UPDATE_GOLDEN=1 rewrites the files instead of comparing.
void expect_golden(const std::string& name, const std::vector<std::string>& args) {
  CliRun r = cli(args);
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string path = kGolden + "/" + name;
  if (std::getenv("MOTDT_UPDATE_GOLDEN")) {
    std::ofstream(path) << r.out;
    return;
  }
  ASSERT_TRUE(std::filesystem::exists(path)) << path;
  EXPECT_EQ(r.out, slurp(path)) << name;
}

std::string temp_path(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST(CliGolden, Outputs) {
  expect_golden("dt_t3_order6.json", {"dt", "--potential", "t^3", "--order", "6", "--format", "json"});
  expect_golden("dt_quartic.txt", {"dt", "--potential", "t^4/4 - t^2/2", "--order", "6"});
  expect_golden("dt_mixed.tex", {"dt", "--potential", "t^4/4 - 2*t^3/3 + t^2/2", "--order", "6", "--format", "latex"});
  expect_golden("resolution_zd4.txt", {"resolution", "--file", kData + "/zd_4.json"});
  expect_golden("resolution_cusp.json", {"resolution", "--file", kData + "/cusp_2_3.json", "--format", "json"});
  expect_golden("sym_mu3.json", {"sym", "--file", kData + "/series_mu3.json", "--format", "json"});
  expect_golden("verify_core.txt", {"verify", "--suite", "core", "--seed", "42"});
  expect_golden("verify_milnor.txt", {"verify", "--suite", "milnor"});
}

TEST(Cli, DtExamples) {
  CliRun r = cli({"dt", "--potential", "t^3", "--order", "6", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"omega_pretty\": \"L^{-1/2}(1-[mu_3])\""), std::string::npos);
  EXPECT_NE(r.out.find("\"chi\": 2"), std::string::npos);
  r = cli({"dt", "--potential", "t^4/4 - t^2/2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("group 3: factor t + 1, g = 1, d = 2"), std::string::npos);
  EXPECT_NE(r.out.find("order 8"), std::string::npos);
}

TEST(Cli, ResolutionExamples) {
  CliRun r = cli({"resolution", "--file", kData + "/zd_4.json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("phi via closed form: q^(-1/4) + 1 + q^(1/4)\n"), std::string::npos);
  r = cli({"resolution", "--file", kData + "/cusp_2_3.json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("phi via value at infinity: q^(-1/6) + q^(1/6)\n"), std::string::npos);
  EXPECT_NE(r.out.find("chi = 2\n"), std::string::npos);
}

TEST(Cli, SymRoundTrip) {
  CliRun r = cli({"sym", "--file", kData + "/series_geometric.json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 + T + T^2 + T^3 + T^4 + T^5 + T^6 + T^7 + T^8\n");
  const std::string mid = temp_path("motdt_sym_mid.json");
  r = cli({"sym", "--file", kData + "/series_mu3.json", "--format", "json", "--out", mid});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  r = cli({"sym", "--inverse", "--file", mid, "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, cli({"sym", "--inverse", "--file", mid, "--format", "json"}).out);
  CliRun orig = cli({"sym", "--inverse", "--file", mid});
  EXPECT_EQ(orig.out, "(-q^(1/3) - q^(2/3))*T\n");
  r = cli({"sym", "--file", kData + "/series_mu3.json"});
  EXPECT_EQ(r.out, "1 + (-q^(1/3) - q^(2/3))*T + q*T^2\n");
  std::filesystem::remove(mid);
}

TEST(Cli, OrderFromEnvironment) {
  setenv("MOTDT_ORDER", "3", 1);
  CliRun r = cli({"sym", "--file", kData + "/series_geometric.json"});
  EXPECT_EQ(r.out, "1 + T + T^2 + T^3\n");
  r = cli({"sym", "--file", kData + "/series_geometric.json", "--order", "2"});
  EXPECT_EQ(r.out, "1 + T + T^2\n");
  setenv("MOTDT_ORDER", "abc", 1);
  EXPECT_EQ(cli({"sym", "--file", kData + "/series_geometric.json"}).code, kExitInput);
  unsetenv("MOTDT_ORDER");
}

TEST(Cli, InputErrorsExitTwo) {
  CliRun r = cli({"dt", "--potential", "t"});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("degree < 2"), std::string::npos);
  r = cli({"dt", "--potential", "2t^2"});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("syntax-error: at column 2"), std::string::npos);
  EXPECT_EQ(cli({"dt"}).code, kExitInput);
  EXPECT_EQ(cli({}).code, kExitInput);
  EXPECT_EQ(cli({"dt", "--potential", "t^2", "--format", "pdf"}).code, kExitInput);
  EXPECT_EQ(cli({"dt", "--potential", "t^2", "--order", "99"}).code, kExitInput);
  EXPECT_EQ(cli({"verify", "--suite", "nope"}).code, kExitInput);
  EXPECT_EQ(cli({"verify", "--suite", "core", "--format", "latex"}).code, kExitInput);

  const std::string bad = temp_path("motdt_bad.json");
  write_file(bad, "{\"dim\": ");
  r = cli({"resolution", "--file", bad});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("schema-violation"), std::string::npos);
  write_file(bad, R"({"dim": 1, "components": [{"id": 1, "m": 2, "nu": 1}], "x0": [[1, 0, 1]], "strata": []})");
  r = cli({"resolution", "--file", bad});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("datum-incomplete"), std::string::npos);
  EXPECT_EQ(cli({"resolution", "--file", temp_path("motdt_missing.json")}).code, kExitInput);

  write_file(bad, R"({"arity": 1, "order": 4, "coeffs": [{"degree": [0], "value": [[1, 0, 1]]}]})");
  r = cli({"sym", "--file", bad});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("not-in-F1"), std::string::npos);
  write_file(bad, R"({"arity": 1, "order": 4, "coeffs": [{"degree": [1], "value": [[1, 0, 1]]}]})");
  r = cli({"sym", "--inverse", "--file", bad});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("not-invertible"), std::string::npos);
  std::filesystem::remove(bad);
}

TEST(Cli, VerificationFailureExitsThree) {
  // The z^2 datum is not the cusp, so the Thom-Sebastiani check fails.
  CliRun r = cli({"verify", "--suite", "resolution", "--file", kData + "/zd_2.json"});
  EXPECT_EQ(r.code, kExitMath);
  EXPECT_NE(r.out.find("FAIL  resolution  cusp-thom-sebastiani"), std::string::npos);
}

TEST(Cli, ErrorTaxonomy) {
  EXPECT_TRUE(is_input_error(ErrorKind::syntax_error));
  EXPECT_TRUE(is_input_error(ErrorKind::schema_violation));
  EXPECT_TRUE(is_input_error(ErrorKind::datum_incomplete));
  EXPECT_FALSE(is_input_error(ErrorKind::theorem_violation));
  EXPECT_FALSE(is_input_error(ErrorKind::internal_inconsistency));
  EXPECT_FALSE(is_input_error(ErrorKind::denominator_not_cleared));
}

TEST(Cli, VerifyIsDeterministic) {
  CliRun a = cli({"verify", "--suite", "lambda", "--seed", "7"});
  CliRun b = cli({"verify", "--suite", "lambda", "--seed", "7"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  CliRun w = cli({"verify", "--suite", "wallcross", "--max-d", "8"});
  EXPECT_EQ(w.code, 0);
  EXPECT_NE(w.out.find("routes-d8"), std::string::npos);
}

TEST(Cli, Help) {
  CliRun r = cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("resolution"), std::string::npos);
}
