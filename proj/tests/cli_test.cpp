#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "gqg/cli.hpp"
#include "gqg/sequence_io.hpp"
#include "gqg/synthesis.hpp"

using namespace gqg;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string &input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string &name) {
  return std::filesystem::temp_directory_path() /
         ("gqg_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

} // namespace

TEST(Cli, SynthScrofulous) {
  const Result r = invoke({"synth", "scrofulous", "--theta", "180", "--out", "dsl"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "180(60) 180(-60) 180(60)\n");
  EXPECT_TRUE(r.err.empty());
  EXPECT_EQ(invoke({"synth", "scrofulous", "--theta", "180"}).out, r.out);
}

TEST(Cli, SynthFamiliesRoundTrip) {
  for (const std::string family :
       {"scrofulous", "w1", "w1-sandwich", "trotter-suzuki", "naive"}) {
    const Result r = invoke({"synth", family, "--theta", "90"});
    ASSERT_EQ(r.code, 0) << family << r.err;
    EXPECT_GT(parse_dsl(r.out).size(), 0u);
    const Result j = invoke({"synth", family, "--theta", "90", "--out", "json"});
    ASSERT_EQ(j.code, 0);
    EXPECT_EQ(to_dsl(parse_json(j.out)) + "\n", r.out);
  }
  EXPECT_EQ(invoke({"synth", "ohta"}).out, "90(0) 180(90) 90(0)\n");
  EXPECT_EQ(invoke({"synth", "scrofulous", "--theta", "180", "--branch",
                    "mirrored"})
                .out,
            "180(-60) 180(60) 180(-60)\n");
}

TEST(Cli, SynthErrors) {
  EXPECT_EQ(invoke({"synth", "scrofulous", "--theta", "200"}).code, 2);
  EXPECT_EQ(invoke({"synth", "scrofulous", "--theta", "0"}).code, 2);
  EXPECT_EQ(invoke({"synth", "w1"}).code, 2);
  EXPECT_EQ(invoke({"synth", "bogus", "--theta", "90"}).code, 1);
  EXPECT_EQ(invoke({}).code, 1);
  const Result r = invoke({"synth", "scrofulous", "--theta", "200"});
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, AnalyzeNaive) {
  const Result r = invoke({"analyze", "-"}, "90(0)\n");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("dynamic_phase_sum: -0.785398163397 rad (-45 deg)"),
            std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("cyclic_n0: (1, 0, 0)"), std::string::npos);
  EXPECT_NE(r.out.find("geometric_phase: 0 rad"), std::string::npos);
  EXPECT_NE(r.out.find("classification: naive"), std::string::npos);
}

TEST(Cli, AnalyzeOhtaAndSuppliedState) {
  const Result o = invoke({"analyze", "-"}, "90(0) 180(90) 90(0)");
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("classification: gqg_not_fully_compensating"),
            std::string::npos);
  EXPECT_NE(o.out.find("offdiag_part: 1.57079632679"), std::string::npos);

  const std::string w1_text = invoke({"synth", "w1", "--theta", "180"}).out;
  const Result degenerate = invoke({"analyze", "-"}, w1_text);
  EXPECT_EQ(degenerate.code, 2);
  EXPECT_NE(degenerate.err.find("n0"), std::string::npos);
  const Result w = invoke({"analyze", "-", "--n0", "1,0,0"}, w1_text);
  ASSERT_EQ(w.code, 0) << w.err;
  EXPECT_NE(w.out.find("dynamic_phase_sum: 1.57079632679 rad (90 deg)"),
            std::string::npos)
      << w.out;
  EXPECT_NE(w.out.find("(supplied)"), std::string::npos);
}

TEST(Cli, ParseErrorsExitThree) {
  const Result r = invoke({"analyze", "-"}, "90(0) 180(");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("column 11"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(invoke({"verify", "-"}, "").code, 3);
  EXPECT_EQ(invoke({"analyze", "-", "--n0", "1,0"}, "90(0)").code, 3);
  EXPECT_EQ(invoke({"analyze", "-", "--n0", "1,1,0"}, "90(0)").code, 2);
  EXPECT_EQ(invoke({"analyze", "/nonexistent/gqg/input"}).code, 1);
}

TEST(Cli, SweepCsv) {
  const std::vector<std::string> args{"sweep", "-", "--target", "90(0)",
                                      "--eps-min", "0.01", "--eps-max", "0.1",
                                      "--points", "20"};
  const Result a = invoke(args, "90(0)");
  const Result b = invoke(args, "90(0)");
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("epsilon,infidelity,operator_error\n", 0), 0u);
  EXPECT_NE(a.out.find("1.0000000000000001e-01,3.08266"), std::string::npos)
      << a.out;

  const auto path = temp_path("sweep.csv");
  auto with_file = args;
  with_file.insert(with_file.end(), {"--csv", path.string()});
  const Result f = invoke(with_file, "90(0)");
  ASSERT_EQ(f.code, 0);
  EXPECT_TRUE(f.out.empty());
  std::ifstream file(path, std::ios::binary);
  const std::string written((std::istreambuf_iterator<char>(file)),
                            std::istreambuf_iterator<char>());
  EXPECT_EQ(written, a.out);
  std::filesystem::remove(path);

  auto bad = args;
  bad[7] = "0.6";
  EXPECT_EQ(invoke(bad, "90(0)").code, 2);
  EXPECT_EQ(invoke({"sweep", "-", "--target", "auto", "--eps-min", "0.01",
                    "--eps-max", "0.1", "--points", "5"},
                   "90(0)")
                .code,
            0);
}

TEST(Cli, Verify) {
  const Result o = invoke({"verify", "-"}, to_json(ohta()));
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("converse_violated: yes"), std::string::npos);
  EXPECT_NE(o.out.find("implication_holds: yes"), std::string::npos);

  const Result s = invoke({"verify", "-"},
                          invoke({"synth", "scrofulous", "--theta", "90",
                                  "--out", "json"})
                              .out);
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_NE(s.out.find("fully_compensating: yes"), std::string::npos);
  EXPECT_NE(s.out.find("verdict: consistent: fully compensating"),
            std::string::npos);
}
