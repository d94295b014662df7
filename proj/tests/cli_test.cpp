#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using graphicahedron::cli::run_cli;
using Json = nlohmann::json;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = 0) {
  const Invocation r = run(std::move(args));
  EXPECT_EQ(r.code, expected_code) << r.err;
  return Json::parse(r.out);
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(CliBuild, Hexagon) {
  const Json j = run_json({"build", "--preset", "path:2"});
  EXPECT_EQ(j["f_vector"], Json::array({6, 6, 1}));
  EXPECT_EQ(j["flag_count"], 12);
  EXPECT_EQ(j["graph"]["edges"], Json::parse("[[1,2],[2,3]]"));
  EXPECT_EQ(j["improper_faces"]["least"]["in_f_vector"], false);
  EXPECT_FALSE(j.contains("timings_ms"));
}

TEST(CliBuild, PawFlagCount) { EXPECT_EQ(run_json({"build", "--preset", "paw"})["flag_count"], 576); }

TEST(CliBuild, FileAndStdinSources) {
  const auto path = std::filesystem::temp_directory_path() / "graphicahedron_cli_test.txt";
  {
    std::ofstream f(path);
    f << "# triangle\np 3\n1 2\n2 3\n1 3\n";
  }
  EXPECT_EQ(run_json({"build", "--file", path.string()})["f_vector"], Json::array({6, 9, 3, 1}));
  std::filesystem::remove(path);
  const Invocation missing = run({"build", "--file", path.string()});
  EXPECT_EQ(missing.code, 1);
}

TEST(CliErrors, ExitCodes) {
  const Invocation dup = run({"build", "--edges", "1-2,1-2"});
  EXPECT_EQ(dup.code, 1);
  EXPECT_NE(dup.err.find("duplicate edge"), std::string::npos);

  const Invocation disconnected = run({"build", "--edges", "1-2,3-4"});
  EXPECT_EQ(disconnected.code, 2);
  EXPECT_NE(disconnected.err.find("connected"), std::string::npos);

  EXPECT_EQ(run({"build", "--preset", "path:7"}).code, 3);
  EXPECT_EQ(run({"build", "--preset", "path:7", "--max-perms", "40320"}).code, 0);
  EXPECT_EQ(run({"verify", "--preset", "path:6"}).code, 3);
  EXPECT_EQ(run({"build"}).code, 1);
  EXPECT_EQ(run({"build", "--preset", "paw", "--edges", "1-2"}).code, 1);
  EXPECT_EQ(run({"build", "--preset", "wheel:5"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"export", "--preset", "paw", "--format", "xml"}).code, 1);
  EXPECT_EQ(run({"export", "--preset", "paw", "--what", "skeleton:x"}).code, 1);
  EXPECT_EQ(run({"export", "--preset", "paw", "--what", "skeleton:4"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliVerify, AllAxiomsPass) {
  for (const char* preset : {"cycle:3", "fork"}) {
    const Json j = run_json({"verify", "--preset", preset});
    EXPECT_EQ(j["axioms"]["diamond"]["verdict"], "pass") << preset;
    EXPECT_EQ(j["axioms"]["strong_flag_connected"]["verdict"], "pass") << preset;
    EXPECT_EQ(j["axioms"]["simple"]["verdict"], "pass") << preset;
    EXPECT_FALSE(j["axioms"]["diamond"].contains("witness"));
  }
}

TEST(CliVerify, InjectedFaultsFailWithWitness) {
  const Json face = run_json({"verify", "--preset", "cycle:3", "--inject-fault", "remove-face"}, 4);
  EXPECT_EQ(face["axioms"]["diamond"]["verdict"], "fail");
  EXPECT_TRUE(face["axioms"]["diamond"].contains("witness"));

  const Json edge = run_json({"verify", "--preset", "cycle:3", "--inject-fault", "remove-flag-edge"}, 4);
  EXPECT_EQ(edge["axioms"]["diamond"]["verdict"], "pass");
  EXPECT_EQ(edge["axioms"]["strong_flag_connected"]["verdict"], "fail");
  EXPECT_TRUE(edge["axioms"]["strong_flag_connected"]["witness"].contains("fixed_ranks"));

  EXPECT_EQ(run({"verify", "--preset", "paw", "--inject-fault", "bogus"}).code, 1);
}

TEST(CliAnalyze, Star) {
  const Json j = run_json({"analyze", "--preset", "star:3"});
  EXPECT_EQ(j["symmetry"]["constructed_order"], 144);
  EXPECT_EQ(j["symmetry"]["flag_aut_order"], 144);
  EXPECT_EQ(j["symmetry"]["regular"], true);
  EXPECT_EQ(j["symmetry"]["vertex_transitive"], true);
}

TEST(CliAnalyze, PawCensus) {
  const Json j = run_json({"analyze", "--preset", "paw"});
  EXPECT_EQ(j["symmetry"]["regular"], false);
  const Json& census = j["facet_census"];
  EXPECT_EQ(census["total"], 7);
  EXPECT_EQ(census["cross_checked"], true);
  std::map<std::string, int> counts;
  for (const Json& e : census["entries"]) {
    counts[e["type"]] = e["count"];
    EXPECT_TRUE(e.contains("sample_facet_id"));
  }
  EXPECT_EQ(counts, (std::map<std::string, int>{{"permutahedron(3)", 2}, {"toroid_63_11", 4}, {"toroid_63_22", 1}}));
}

TEST(CliAnalyze, PathIsNotRegular) {
  EXPECT_EQ(run_json({"analyze", "--preset", "path:3"})["symmetry"]["regular"], false);
}

TEST(CliAnalyze, OverFlagLimitUsesClosedForm) {
  const Json j = run_json({"analyze", "--preset", "star:4", "--max-flags", "100"});
  EXPECT_TRUE(j["symmetry"]["flag_aut_order"].is_null());
  EXPECT_EQ(j["symmetry"]["regular_method"], "closed_form");
  EXPECT_EQ(j["symmetry"]["regular"], true);
}

TEST(CliOutput, ByteIdenticalAcrossRunsAndThreadCounts) {
  const Invocation a = run({"analyze", "--preset", "fork"});
  const Invocation b = run({"analyze", "--preset", "fork", "--threads", "3"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"verify", "--preset", "paw"}).out, run({"verify", "--preset", "paw"}).out);
}

TEST(CliOutput, TimingsOnlyOnRequest) {
  const Json j = run_json({"verify", "--preset", "path:2", "--timings"});
  ASSERT_TRUE(j.contains("timings_ms"));
  EXPECT_TRUE(j["timings_ms"].contains("diamond"));
}

TEST(CliOutput, HumanModeHonoursNoColor) {
  ::setenv("NO_COLOR", "1", 1);
  const Invocation plain = run({"verify", "--preset", "path:2", "--human"});
  EXPECT_EQ(plain.out.find('\x1b'), std::string::npos);
  EXPECT_NE(plain.out.find("verdict: pass"), std::string::npos);
  ::unsetenv("NO_COLOR");
  const Invocation colored = run({"verify", "--preset", "path:2", "--human"});
  EXPECT_NE(colored.out.find("\x1b[32mpass"), std::string::npos);
}

TEST(CliExport, CayleyDot) {
  const Invocation r = run({"export", "--preset", "path:2", "--format", "dot"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("graph cayley {", 0), 0U);
  EXPECT_EQ(count(r.out, "[label=\""), 6U);  // node lines
  EXPECT_EQ(count(r.out, " -- "), 6U);
  EXPECT_EQ(count(r.out, "label=\"e1\""), 3U);
  EXPECT_EQ(count(r.out, "label=\"e2\""), 3U);
}

TEST(CliExport, OneSkeletonEqualsCayley) {
  for (const char* preset : {"path:2", "paw", "cycle:4"}) {
    const Json cayley = run_json({"export", "--preset", preset});
    const Json skel = run_json({"export", "--preset", preset, "--what", "skeleton:1"});
    EXPECT_EQ(skel["vertex_graph"]["edges"], cayley["edges"]) << preset;
    EXPECT_EQ(skel["vertex_graph"]["nodes"], cayley["nodes"]) << preset;
  }
}

TEST(CliExport, ZeroSkeletonIsIsolatedVertices) {
  const Json j = run_json({"export", "--preset", "paw", "--what", "skeleton:0"});
  EXPECT_EQ(j["vertex_graph"]["nodes"].size(), 24U);
  EXPECT_TRUE(j["vertex_graph"]["edges"].empty());
  EXPECT_TRUE(j["covers"].empty());
  const Invocation dot = run({"export", "--preset", "paw", "--what", "skeleton:0", "--format", "dot"});
  EXPECT_EQ(count(dot.out, " -- "), 0U);
}

TEST(CliExport, HigherSkeletonDot) {
  const Invocation r = run({"export", "--preset", "path:3", "--what", "skeleton:2", "--format", "dot"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph skeleton {", 0), 0U);
  EXPECT_EQ(count(r.out, " -> "), 36U * 2U + 8U * 6U + 6U * 4U);
}
