#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hlgf/json_io.hpp"

namespace hlgf::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("hlgf_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string save(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::filesystem::path dir_;
};

TEST_F(Cli, RoundSphereChargeIsTwo) {
  const Outcome cut = call({"cutoff", "round-sphere", "s2_five_vertex", "-r", "256"});
  ASSERT_EQ(cut.code, kOk) << cut.err;
  const std::string field = save("round.json", cut.out);
  for (const char* route : {"covering", "facesum"}) {
    const Outcome q = call({"charge", field, "--route", route});
    ASSERT_EQ(q.code, kOk) << q.err;
    EXPECT_EQ(q.json().at("Q"), 2);
  }
  const Outcome t = call({"charge", field, "--route", "transition", "--equator", "1,2,3"});
  ASSERT_EQ(t.code, kOk) << t.err;
  EXPECT_EQ(t.json().at("Q"), 2);
  const Outcome c = call({"classify", field});
  ASSERT_EQ(c.code, kOk);
  EXPECT_EQ(c.json().at("invariant"), 2);
}

TEST_F(Cli, OptionFormOfCutoff) {
  const Outcome cut = call({"cutoff", "--oracle", "monopole:-2", "--complex", "s2_tetra", "--resolution", "64"});
  ASSERT_EQ(cut.code, kOk) << cut.err;
  EXPECT_EQ(call({"charge", save("m.json", cut.out)}).json().at("Q"), -2);
}

TEST_F(Cli, EvalOnIdentityFieldIsConstant) {
  const std::string field = save("id.json", call({"cutoff", "trivial", "s2_five_vertex", "-r", "16"}).out);
  const Outcome e = call({"eval", field, "--expr", "inv0(G135) o0 G134"});
  ASSERT_EQ(e.code, kOk) << e.err;
  EXPECT_EQ(e.json().at("kind"), "loop");
  EXPECT_EQ(e.json().at("lift"), 0.0);
  const Outcome bad = call({"eval", field, "--expr", "G134 o0 inv0(G135)"});
  EXPECT_EQ(bad.code, kUsage);
  EXPECT_NE(bad.err.find("byte 5"), std::string::npos) << bad.err;
}

TEST_F(Cli, TamperedPentachoronFailsCheck) {
  Json j = call({"cutoff", "trivial", "s3_pentachoron", "-r", "16"}).json();
  j["faces"]["134"]["lift"] = j["faces"]["134"]["lift"].get<double>() + 2 * kPi;
  j.erase("cells3");
  const std::string field = save("tampered.json", j.dump());
  const Outcome c = call({"check", field});
  EXPECT_EQ(c.code, kValidationFailure);
  EXPECT_EQ(c.json().at("violations").size(), 2u);
  const Outcome k = call({"classify", field});
  EXPECT_EQ(k.code, kValidationFailure);
  EXPECT_FALSE(k.json().at("ok").get<bool>());
}

TEST_F(Cli, BuildRandomizeAndGauge) {
  const Outcome b = call({"build", "s2_tetra"});
  ASSERT_EQ(b.code, kOk);
  EXPECT_EQ(b.json().at("dim"), 2);
  const Outcome r1 = call({"randomize", "--seed", "5", "--complex", "s2_tetra", "--group", "SO3"});
  const Outcome r2 = call({"randomize", "--seed", "5", "--complex", save("c.json", b.out), "--group", "SO3"});
  ASSERT_EQ(r1.code, kOk) << r1.err;
  EXPECT_EQ(r1.out, r2.out);
  const std::string field = save("r.json", r1.out);
  const Json gauge = gauge_to_json(Backend::kSO3, random_gauge(build_builtin("s2_tetra"), Backend::kSO3, 9));
  const Outcome g = call({"gauge", field, "--assignment", save("g.json", gauge.dump())});
  ASSERT_EQ(g.code, kOk) << g.err;
  EXPECT_EQ(call({"charge", save("g_field.json", g.out)}).json().at("Q"),
            call({"charge", field}).json().at("Q"));
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(call({}).code, kUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kUsage);
  EXPECT_EQ(call({"build", "torus"}).code, kUsage);
  EXPECT_EQ(call({"charge", (dir_ / "missing.json").string()}).code, kUsage);
  EXPECT_EQ(call({"cutoff", "round-sphere", "s2_tetra", "-r", "16", "--max-phase-step", "1e-5"}).code,
            kNumericGuard);
  Json j = call({"cutoff", "round-sphere", "s2_tetra", "-r", "16"}).json();
  j["faces"]["123"]["target"] = 0.5;
  EXPECT_EQ(call({"check", save("bad.json", j.dump())}).code, kValidationFailure);
  EXPECT_EQ(call({"charge", "-", "--equator", "1,2,3"}).code, kUsage);
  EXPECT_EQ(call({"--help"}).code, kOk);
}

}  // namespace
}  // namespace hlgf::cli
