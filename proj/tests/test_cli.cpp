#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli_app.hpp"

namespace lpa::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

std::string graph_file(const std::string& name) {
  return std::string(LPA_GRAPHS_DIR) + "/" + name;
}

Outcome invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

Outcome on(const std::string& graph, std::vector<std::string> args,
           const std::string& stdin_text = "") {
  args.insert(args.begin(), {"--graph", graph_file(graph)});
  return invoke(std::move(args), stdin_text);
}

/// A scratch file removed when the test ends.
class TempFile {
 public:
  TempFile(const std::string& name, const std::string& text)
      : path_(std::filesystem::temp_directory_path() /
              ("lpa_cli_" + std::to_string(::getpid()) + "_" + name)) {
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

TEST(Cli, EpsilonOnLineGraph) {
  const auto r = on("line5.graph", {"epsilon", "-g", "1"});
  EXPECT_EQ(r.code, exit_ok) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "v2 + v4 + v5");
  EXPECT_NE(r.out.find("(f1)(f1*) + (f2)(f2*) + (f3)(f3*) + (f4)(f4*)"), std::string::npos);
  EXPECT_NE(r.out.find("complete at bound 4"), std::string::npos);
}

TEST(Cli, EpsilonStrongFailsOnInfiniteEmitter) {
  const auto r = on("infinite_emitter.graph",
                    {"check", "--property", "epsilon-strong", "--window", "-1..1", "--bound", "3"});
  EXPECT_EQ(r.code, exit_fail);
  EXPECT_NE(r.out.find("NOT_EPSILON_STRONG"), std::string::npos);
  EXPECT_NE(r.out.find("f1"), std::string::npos);
  EXPECT_NE(r.out.find("f2"), std::string::npos);
}

TEST(Cli, NormalFormFromStdin) {
  const auto r = on("line5.graph", {"nf"}, "f2*.f2\n");
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_EQ(r.out, "v3\n");
}

TEST(Cli, AlgebraCommands) {
  EXPECT_EQ(on("line5.graph", {"mul", "-e", "f2*", "-e", "f2"}).out, "v3\n");
  EXPECT_EQ(on("line5.graph", {"involve", "-e", "f4.f3", "-e", "f2.(f4.f3)*"}).out,
            "(f4.f3)*\nf4.f3.f2*\n");
  EXPECT_EQ(on("line5.graph", {"decompose", "-e", "v1 + f1 + f2* + f2.(f4.f3)*"}).out,
            "[-1] f2* + f2.(f4.f3)*\n[0] v1\n[1] f1\n");
  EXPECT_EQ(on("line5.graph", {"--bound", "2", "xg", "-g", "1"}).out,
            "f1\nf2\nf3\nf4\nf4.f3.f2*\n");
  const auto lu = on("line5.graph", {"localunits", "-e", "f2 + f4.f3.f2*"});
  EXPECT_NE(lu.out.find("left  = v5 + f2.f2*"), std::string::npos);
  EXPECT_NE(lu.out.find("right = v3 + f2.f2*"), std::string::npos);
}

TEST(Cli, Rings) {
  EXPECT_EQ(on("line5.graph", {"--ring", "q", "nf", "-e", "1/2*f1 + 1/3*f1"}).out, "5/6*f1\n");
  EXPECT_EQ(on("line5.graph", {"--ring", "z/3", "nf", "-e", "3*f1 + 4*f2"}).out, "f2\n");
  EXPECT_EQ(on("line5.graph", {"--ring", "z/1", "nf", "-e", "f1"}).code, exit_usage);
  EXPECT_EQ(on("line5.graph", {"--ring", "r", "nf", "-e", "f1"}).code, exit_usage);
  EXPECT_EQ(on("line5.graph", {"nf", "-e", "1/2*f1"}).code, exit_data);
}

TEST(Cli, NormalFormRoundTrip) {
  const auto first = on("line5.graph", {"mul", "-e", "f2 + f1", "-e", "f2* - 3*f1*"});
  ASSERT_EQ(first.code, exit_ok);
  const auto again = on("line5.graph", {"nf"}, first.out);
  EXPECT_EQ(again.out, first.out);
}

TEST(Cli, PropertyExitCodes) {
  EXPECT_EQ(on("line5.graph", {"check", "-p", "grading"}).code, exit_ok);
  EXPECT_EQ(on("line5.graph", {"check", "-p", "symmetric"}).code, exit_ok);
  EXPECT_EQ(on("loop_in.graph", {"--window", "-3..3", "--bound", "5", "check", "-p", "strong"}).code,
            exit_ok);
  const auto b = on("loop_out.graph", {"--window", "-2..2", "check", "-p", "strong"});
  EXPECT_EQ(b.code, exit_fail);
  EXPECT_NE(b.out.find("NOT_STRONG"), std::string::npos);
  EXPECT_EQ(on("loop_out.graph", {"--window", "-2..2", "check", "-p", "epsilon-strong"}).code,
            exit_ok);
  EXPECT_EQ(on("line5.graph", {"--window", "-2..2", "--bound", "1", "check", "-p",
                               "epsilon-strong"})
                .code,
            exit_undetermined);
  EXPECT_EQ(on("infinite_emitter.graph", {"--bound", "3", "check", "-p", "nearly-epsilon"}).code,
            exit_ok);
  EXPECT_EQ(on("line5.graph", {"check", "-p", "nondegenerate", "--samples", "10"}).code, exit_ok);
  EXPECT_EQ(on("line5.graph", {"check", "-p", "torsionfree"}).code, exit_usage);
}

TEST(Cli, Frobenius) {
  const auto b = on("loop_out.graph", {"--degrees", "canonical:Z/2", "frobenius"});
  EXPECT_EQ(b.code, exit_ok) << b.out;
  EXPECT_NE(b.out.find("pairs = 4"), std::string::npos);
  const auto line = on("line5.graph", {"--degrees", "canonical:Z/5", "frobenius", "--samples",
                                       "20", "--triples", "10"});
  EXPECT_EQ(line.code, exit_ok);
  EXPECT_NE(line.out.find("pairs = 15"), std::string::npos);
  const auto infinite = on("line5.graph", {"frobenius"});
  EXPECT_EQ(infinite.code, exit_fail);
  EXPECT_NE(infinite.out.find("finite group"), std::string::npos);
}

TEST(Cli, DegreeFiles) {
  const auto r = on("loop_out.graph", {"--degrees", graph_file("z2.deg"), "decompose", "-e",
                                       "u + e + f"});
  EXPECT_EQ(r.code, exit_ok) << r.err;
  const auto table = on("loop_out.graph", {"--degrees", graph_file("loop_out_s3.deg"), "--window",
                                           "all", "check", "-p", "grading", "--samples", "5"});
  EXPECT_EQ(table.code, exit_ok) << table.err;
  EXPECT_EQ(on("loop_out.graph", {"--degrees", "/nonexistent.deg", "nf", "-e", "u"}).code,
            exit_no_input);
}

TEST(Cli, JsonIsDeterministicAndStructured) {
  const std::vector<std::string> args{"--output", "json", "--seed", "5", "check", "-p",
                                      "nearly-epsilon"};
  const auto a = on("infinite_emitter.graph", args);
  const auto b = on("infinite_emitter.graph", args);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["property"], "nearly-epsilon");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["seed"], 5);

  const auto e = nlohmann::json::parse(on("line5.graph", {"--output", "json", "epsilon", "-g", "1"}).out);
  EXPECT_EQ(e["verdict"], "PRESENT");
  EXPECT_EQ(e["certificate"][0]["value"], "v2 + v4 + v5");
  const auto nf = nlohmann::json::parse(on("line5.graph", {"--output", "json", "nf", "-e", "f2*.f2"}).out);
  EXPECT_EQ(nf["results"][0]["result"], "v3");
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(invoke({"nf", "-e", "v1"}).code, exit_usage);
  EXPECT_EQ(on("line5.graph", {}).code, exit_usage);
  EXPECT_EQ(on("line5.graph", {"frob"}).code, exit_usage);
  EXPECT_EQ(on("line5.graph", {"xg"}).code, exit_usage);
  EXPECT_EQ(on("line5.graph", {"--output", "xml", "nf", "-e", "v1"}).code, exit_usage);
  EXPECT_EQ(on("line5.graph", {"--bound", "0", "xg", "-g", "1"}).code, exit_usage);
  EXPECT_EQ(on("line5.graph", {"nf"}).code, exit_usage);
  EXPECT_EQ(on("missing.graph", {"nf", "-e", "v1"}).code, exit_no_input);

  const auto bad_expr = on("line5.graph", {"nf", "-e", "f1 + zz"});
  EXPECT_EQ(bad_expr.code, exit_data);
  EXPECT_NE(bad_expr.err.find("zz"), std::string::npos);

  const auto bad_window = on("line5.graph", {"--window", "0..1", "check", "-p", "epsilon-strong"});
  EXPECT_EQ(bad_window.code, exit_data);

  TempFile broken("broken.graph", "graph g {\n  vertices: a;\n  edges: e a;\n}\n");
  const auto bad_graph = invoke({"--graph", broken.path(), "nf", "-e", "a"});
  EXPECT_EQ(bad_graph.code, exit_data);
  EXPECT_NE(bad_graph.err.find(broken.path()), std::string::npos);
  EXPECT_NE(bad_graph.err.find("3:"), std::string::npos);

  EXPECT_EQ(on("line5.graph", {"epsilon", "-g", "x"}).code, exit_data);
}

TEST(Cli, Help) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_NE(r.out.find("epsilon"), std::string::npos);
}

}  // namespace
}  // namespace lpa::cli
