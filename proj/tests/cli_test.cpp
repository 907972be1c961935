#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>

#include "traincat/surfaces.hpp"

#ifndef TRAINCAT_CLI_PATH
#error "TRAINCAT_CLI_PATH must point at the traincat binary"
#endif

using namespace traincat;

namespace {

struct Invocation {
  int code = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Invocation run(const std::vector<std::string>& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + quote(TRAINCAT_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  Invocation r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

int count_matches(const std::string& text, const std::string& pattern) {
  std::regex re(pattern);
  return static_cast<int>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("traincat_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, CountTrisymmetric) {
  Invocation r = run({"coset", "count", "--pair", "tri", "--n", "3", "--levels", "0,0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "11");
  EXPECT_EQ(first_line(run({"coset", "count", "--pair", "bi", "--n", "5", "--levels", "0,0"}).out), "7");
  EXPECT_EQ(first_line(run({"coset", "count", "--pair", "young:2", "--n", "2", "--levels", "0,0"}).out), "3");
}

TEST(Cli, BuildSurface) {
  Invocation r = run({"coset", "build", "--pair", "tri", "--levels", "0,0", "--g", "r:(1 2); y:(); b:()"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(components(surface_from_json(r.out)).size(), 1u);
}

TEST(Cli, MultiplyByIdentity) {
  for (const std::string pair : {"bi", "tri", "gem:3", "bigraph:3"}) {
    const std::string g = pair == "bi" ? "(1 3 2); (2 4)"
                          : pair == "tri" ? "(1 2); (2 3); ()"
                          : pair == "gem:3" ? "(1 2); (2 3); (); (1 3)"
                                            : "(1@1 2@3)(1@2 3@2)";
    const std::string e = pair == "bi" ? "(); ()" : pair == "tri" ? "(); (); ()" : pair == "gem:3" ? "(); (); (); ()" : "()";
    Invocation prod = run({"coset", "mul", "--pair", pair, "--levels", "1,2,2", "--g", g, "--h", e});
    ASSERT_EQ(prod.code, 0) << pair;
    Invocation lhs = run({"coset", "canon", "--pair", pair, "--input", prod.out});
    Invocation rhs = run({"coset", "canon", "--pair", pair, "--levels", "1,2", "--g", g});
    EXPECT_EQ(lhs.code, 0);
    EXPECT_EQ(lhs.out, rhs.out) << pair;
  }
}

TEST(Cli, MultiplyFromJsonFiles) {
  auto left = temp_file("left.json"), right = temp_file("right.json");
  {
    std::ofstream(left) << run({"coset", "build", "--pair", "bi", "--levels", "1,1", "--g", "(1 2); ()"}).out;
    std::ofstream(right) << run({"coset", "build", "--pair", "bi", "--levels", "1,0", "--g", "(1 3); (2 3)"}).out;
  }
  Invocation via_files = run({"coset", "mul", "--pair", "bi", "--left", left.string(), "--right", right.string()});
  Invocation direct = run({"coset", "mul", "--pair", "bi", "--levels", "1,1,0", "--g", "(1 2); ()", "--h", "(1 3); (2 3)"});
  EXPECT_EQ(via_files.code, 0);
  EXPECT_EQ(run({"coset", "canon", "--pair", "bi", "--input", via_files.out}).out,
            run({"coset", "canon", "--pair", "bi", "--input", direct.out}).out);
  std::filesystem::remove(left);
  std::filesystem::remove(right);
}

TEST(Cli, Characters) {
  EXPECT_EQ(first_line(run({"char", "thoma", "--alpha", "1", "--g", "(1 2 3)"}).out), "1.0");
  EXPECT_EQ(first_line(run({"char", "thoma", "--beta", "1", "--g", "(1 2)"}).out), "-1.0");
  EXPECT_EQ(first_line(run({"char", "thoma", "--alpha", "0.5,0.5", "--g", "(1 2)"}).out), "0.5");
  EXPECT_EQ(first_line(run({"char", "nessonov", "--A", "ones(3)", "--S", "[[.,1,0],[0,.,1],[1,0,.]]"}).out), "1.0");
  EXPECT_EQ(first_line(run({"char", "young", "--xi", "[[1,0],[0,1]]", "--g", "(1@1 1@2)"}).out), "0.0");
  EXPECT_EQ(first_line(run({"char", "assign", "--coeffs", R"({"dims":[1,1,1],"coeffs":[1]})", "--g", "(1 2); (); ()"}).out),
            "1.0");
}

TEST(Cli, ThirdOfSignedSum) {
  // alpha = (1/3, 1/3, 1/3) on a 3-cycle: p_3 = 1/9.
  EXPECT_EQ(first_line(run({"char", "thoma", "--alpha", "0.333333333333333,0.333333333333333,0.333333333333333", "--g",
                            "(1 2 3)"})
                           .out),
            "0.111111111111");
}

TEST(Cli, Verify) {
  Invocation r = run({"verify", "gluing", "--seed", "3", "--cases", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_matches(r.out, "(?:^|\n)ok "), 12);
  EXPECT_EQ(run({"verify", "topology", "--cases", "20"}).code, 0);
}

TEST(Cli, ExportDot) {
  Invocation r = run({"export", "dot", "--pair", "tri", "--levels", "1,1", "--g", "(); (); ()"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_matches(r.out, R"(\[shape=)"), 2);
  EXPECT_EQ(count_matches(r.out, " -- "), 3);
  r = run({"export", "dot", "--pair", "tri", "--levels", "0,0", "--g", "r:(); y:(); b:(1 2)"});
  EXPECT_EQ(count_matches(r.out, R"(\[shape=)"), 4);
  EXPECT_EQ(count_matches(r.out, " -- "), 6);
}

TEST(Cli, ExportJsonRoundTrip) {
  auto path = temp_file("export.json");
  const std::vector<std::string> job = {"--pair", "gem:2", "--levels", "2,1", "--g", "(1 2 3); (2 3); (1 3)"};
  std::vector<std::string> args = {"export", "json", "--out", path.string()};
  args.insert(args.end(), job.begin(), job.end());
  ASSERT_EQ(run(args).code, 0);
  std::vector<std::string> canon = {"coset", "canon"};
  canon.insert(canon.end(), job.begin(), job.end());
  EXPECT_EQ(run({"coset", "canon", "--pair", "gem:2", "--input", path.string()}).out, run(canon).out);
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"coset", "canon", "--pair", "tri", "--g", "(1 2"}).code, 2);
  EXPECT_EQ(run({"coset", "canon", "--pair", "tri", "--g", "(1 2); ()"}).code, 2);
  EXPECT_EQ(run({"coset", "canon", "--pair", "pentagon", "--g", "()"}).code, 2);
  EXPECT_EQ(run({"coset", "frobnicate"}).code, 2);
  EXPECT_EQ(run({"char", "thoma", "--alpha", "0.7,0.6", "--g", "(1 2)"}).code, 2);
  EXPECT_EQ(run({"coset", "count", "--pair", "bi", "--n", "6", "--levels", "0,0"}, "TRAINCAT_BOUND=1000").code, 3);
  EXPECT_EQ(run({"coset", "canon", "--pair", "tri", "--input", "/nonexistent/coset.json"}).code, 4);
  EXPECT_EQ(run({"export", "dot", "--pair", "tri", "--g", "(); (); ()", "--out", "/nonexistent/dir/x.dot"}).code, 4);
  EXPECT_EQ(run({"--help"}).code, 0);
}
