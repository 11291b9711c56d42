#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "splitqm/cli.hpp"

namespace splitqm {
namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;

  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "splitqm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string config(const std::string& name) { return std::string(SPLITQM_CONFIG_DIR) + "/" + name; }

TEST(Cli, EvalExamples) {
  const std::string sign = config("sign.json");
  CliRun r = run({"eval", "--config", sign, "--qm", "sign", "a b^-2 a^3 b"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "2\n");
  r = run({"eval", "--config", sign, "--qm", "sign", ""});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "0\n");
  r = run({"eval", "--config", sign, "--qm", "sign", "a b^-2 c"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("column 8"), std::string::npos) << r.err;
  r = run({"eval", "--config", sign, "--qm", "bump", "a^2 b", "--format", "json"});
  EXPECT_EQ(r.json()["value"], "-1/2");
}

TEST(Cli, DefectOfTheSignMapAndOfAHomomorphism) {
  CliRun r = run({"defect", "--config", config("sign.json"), "--qm", "sign", "--format", "json", "--samples", "500"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["split_defect"], "1");
  EXPECT_EQ(j["gromov_norm"], "1");
  EXPECT_EQ(j["witness_gap"], "2");
  EXPECT_EQ(j["sampled_defect"], "1");

  r = run({"defect", "--config", config("sign.json"), "--qm", "hom", "--format", "json", "--samples", "500"});
  ASSERT_EQ(r.code, kExitOk);
  for (const char* key : {"factor_defect_A", "factor_defect_B", "split_defect", "sampled_defect", "gromov_norm"}) {
    EXPECT_EQ(r.json()[key], "0") << key;
  }
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"defect", "--config", config("z5z6.json"), "--samples", "300"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> homogenize{"homogenize", "--config", config("sign.json"), "--qm", "bump",
                                            "--samples", "50", "--seed", "9"};
  EXPECT_EQ(run(homogenize).out, run(homogenize).out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"eval", "a"}).code, kExitUsage);
  EXPECT_EQ(run({"defect", "--config", config("sign.json")}).code, kExitUsage);
  EXPECT_EQ(run({"defect", "--config", config("sign.json"), "--qm", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"defect", "--config", config("sign.json"), "--qm", "sign", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({"decompose", "--config", config("sign.json"), "--qm", "sign"}).code, kExitUsage);
  EXPECT_EQ(run({"defect", "--config", "/nonexistent.json"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, ConfigErrorsNameThePosition) {
  const auto path = std::filesystem::temp_directory_path() / "splitqm_cli_bad.json";
  {
    std::ofstream out(path);
    out << R"({"schema": "splitqm/1", "quasimorphisms": {"f": {"B": {"support": [[1, "1/0"]]}}}})";
  }
  const CliRun r = run({"defect", "--config", path.string()});
  std::filesystem::remove(path);
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("/quasimorphisms/f/B/support/0/1"), std::string::npos) << r.err;
}

TEST(Cli, HomogenizeAndDecompose) {
  CliRun r = run({"homogenize", "--config", config("sign.json"), "--qm", "bump", "a^2 b^-1 a", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  // Conjugate to the core a^3 b^-1: bump gives 0 at a^3 and +1 at b^-1.
  EXPECT_EQ(r.json()["values"][0]["homogenized"], "1");
  r = run({"decompose", "--config", config("sign.json"), "--qm", "bump", "--samples", "200", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["words"], 200);
  EXPECT_EQ(r.json()["status"], "ok");
}

TEST(Cli, TauCheck) {
  CliRun r = run({"tau-check", "--config", config("sign.json"), "--qm", "periodic", "--n", "3", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["fixed"], true);
  EXPECT_GT(r.json()["words_verified"].get<int>(), 0);
  r = run({"tau-check", "--config", config("sign.json"), "--qm", "sign", "--n", "4", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["fixed"], false);
  EXPECT_EQ(r.json()["growth"].size(), 10u);
  EXPECT_EQ(run({"tau-check", "--config", config("sign.json"), "--qm", "sign", "--n", "0"}).code, kExitUsage);
}

TEST(Cli, QuasicocycleGrowth) {
  for (const char* name : {"cocycles.json", "regular.json"}) {
    EXPECT_EQ(run({"qc-growth", "--config", config(name)}).code, kExitOk) << name;
    EXPECT_EQ(run({"qc-growth", "--config", config(name), "--literal"}).code, kExitViolation) << name;
  }
  const CliRun r = run({"qc-growth", "--config", config("cocycles.json"), "--format", "json"});
  EXPECT_EQ(r.json()["cocycle_defects"][1]["defect"], "0");
}

TEST(Cli, DefectSpace) {
  const CliRun r = run({"defect-space", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["carriers"][0]["zero_space"], true);
  EXPECT_EQ(r.json()["isometries"].size(), 2u);
  EXPECT_EQ(run({"defect-space", "--config", config("defect_space.json")}).code, kExitOk);
}

TEST(Cli, QuasiRepresentations) {
  CliRun r = run({"qrep", "--config", config("qrep_z12.json"), "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["split_defect"], "3/2");
  EXPECT_GT(j["representations"].get<int>(), 0);
  EXPECT_EQ(j["witness_found"], j["representations"]);
  r = run({"qrep", "--config", config("qrep_circle.json"), "--format", "json", "--samples", "200"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  j = r.json();
  EXPECT_EQ(j["representations"], 200);
  EXPECT_EQ(j["witness_found"], 200);
}

TEST(Cli, Rademacher) {
  const CliRun r = run({"rademacher", "a b", "a b^-1", "--format", "json", "--samples", "200"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["trivial"], false);
  EXPECT_EQ(j["values"][0]["f"], "1");
  EXPECT_EQ(j["values"][1]["f"], "-1");
}

}  // namespace
}  // namespace splitqm
