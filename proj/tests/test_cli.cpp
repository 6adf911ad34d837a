#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "coxeter/cli.hpp"
#include "coxeter/json.hpp"

using namespace coxeter;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return std::string(COXETER_CORPUS_DIR) + "/" + name; }

class TempGraph {
 public:
  explicit TempGraph(const std::string& text) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("coxeter-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter++) + ".cox");
    std::ofstream(path_) << text;
  }
  ~TempGraph() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

std::vector<std::vector<std::string>> bin_vertices(const Json& bin) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : bin) out.push_back(c["vertices"].get<std::vector<std::string>>());
  return out;
}

using Names = std::vector<std::vector<std::string>>;

}  // namespace

TEST_CASE("classify the bundled ten-generator example") {
  const Run r = run({"classify", "--graph", corpus("fig21.cox")});
  REQUIRE(r.code == cli::kExitOk);
  const Json j = r.json();
  CHECK(j["status"] == "ok");
  CHECK(j["command"] == "classify");
  CHECK(bin_vertices(j["payload"]["generic"]) == Names{{"s6", "s7", "s8"}});
  CHECK(bin_vertices(j["payload"]["affine"]) == Names{{"s1", "s2"}, {"s3", "s4", "s5"}});
  CHECK(bin_vertices(j["payload"]["spherical"]) == Names{{"s9", "s10"}});
  CHECK(j["payload"]["components"].size() == 4);
  CHECK(j["diagnostics"].empty());
}

TEST_CASE("reduce through the command line") {
  TempGraph a2("gens: s t\nbond: s t 3\n");
  const Run r = run({"reduce", "--graph", a2.path(), "--word", "s t s t"});
  REQUIRE(r.code == cli::kExitOk);
  const Json p = r.json()["payload"];
  CHECK(p["reduced"] == "t s");
  CHECK(p["length"] == 2);
}

TEST_CASE("length and equal through the command line") {
  TempGraph a2("gens: s t\nbond: s t 3\n");
  CHECK(run({"length", "--graph", a2.path(), "--word", "s t s t"}).json()["payload"]["length"] == 2);
  CHECK(run({"equal", "--graph", a2.path(), "--word", "s t s", "--other", "t s t"}).json()["payload"]["equal"] ==
        true);
  CHECK(run({"equal", "--graph", a2.path(), "--word", "s", "--other", "t"}).json()["payload"]["equal"] == false);
}

TEST_CASE("closure through the command line") {
  const Run r = run({"closure", "--graph", corpus("fig21.cox"), "--gens", "s1 s2"});
  REQUIRE(r.code == cli::kExitOk);
  const Json p = r.json()["payload"];
  CHECK(p["verdict"] == "NarrowInfinite");
  CHECK(p["rank_bound"] == 1);
  const Json two = run({"closure", "--graph", corpus("fig21.cox"), "--gens", "s9;s6 s7"}).json()["payload"];
  CHECK(two["verdict"] == "FullSized");
}

TEST_CASE("aut-report and slender through the command line") {
  const Json a = run({"aut-report", "--graph", corpus("fig21.cox")}).json()["payload"];
  CHECK(a["ker_psi_order"] == 1);
  CHECK(a["aut_sph_order"] == 6);
  CHECK(a["ker_phi_order"] == 6);
  CHECK(a["affine_virtual_rank"] == 3);
  const Json s = run({"slender", "--graph", corpus("fig21.cox")}).json()["payload"];
  CHECK(s["w_almost_slender"] == false);
  CHECK(s["aut_almost_slender"] == "unknown");
}

TEST_CASE("center and longest through the command line") {
  const Json c = run({"center", "--graph", corpus("spherical_B_3.cox")}).json()["payload"];
  CHECK(c["rank"] == 1);
  const Json l = run({"longest", "--graph", corpus("spherical_H_3.cox")}).json()["payload"];
  REQUIRE(l["components"].size() == 1);
  CHECK(l["components"][0]["length"] == 15);
}

TEST_CASE("input errors exit with code 2") {
  TempGraph bad("gens: a b\nbond: a b 1\n");
  const Run r = run({"classify", "--graph", bad.path()});
  CHECK(r.code == cli::kExitInput);
  CHECK(r.json()["status"] == "error");
  CHECK(run({"classify", "--graph", "/nonexistent/graph.cox"}).code == cli::kExitInput);
  CHECK(run({"classify"}).code == cli::kExitInput);
  CHECK(run({"reduce", "--graph", corpus("fig21.cox"), "--word", "s1 q"}).code == cli::kExitInput);
  CHECK(run({"closure", "--graph", corpus("fig21.cox")}).code == cli::kExitInput);
  CHECK(run({"verify", "--suite", "nosuch"}).code == cli::kExitInput);
}

TEST_CASE("unknown subcommands and flags print usage") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"frobnicate"}, {"classify", "--bogus"}, {}}) {
    const Run r = run(args);
    CHECK(r.code == cli::kExitInput);
    CHECK(r.out.empty());
    CHECK(r.err.find("Usage") != std::string::npos);
  }
}

TEST_CASE("help exits cleanly") {
  const Run r = run({"--help"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("classify") != std::string::npos);
}

TEST_CASE("cap hits exit with code 3 and name the cap") {
  const Run r = run({"reduce", "--graph", corpus("spherical_A_3.cox"), "--word", "s1 s2 s1", "--cap-braid", "1"});
  CHECK(r.code == cli::kExitUndecided);
  const Json j = r.json();
  CHECK(j["status"] == "undecided");
  REQUIRE(j["diagnostics"].size() == 1);
  CHECK(j["diagnostics"][0]["code"] == "cap-braid");
  CHECK(j["diagnostics"][0]["limit"] == 1);

  const Run c = run({"closure", "--graph", corpus("fig21.cox"), "--gens", "s3 s4 s3 s4", "--cap-braid", "1"});
  CHECK(c.code == cli::kExitUndecided);
  CHECK(c.json()["payload"]["verdict"] == "Undecided");
  CHECK(c.json()["diagnostics"][0]["code"] == "cap-braid");
}

TEST_CASE("aut-report cap hits are diagnostics, not failures") {
  const Run r = run({"aut-report", "--graph", corpus("fig21.cox"), "--cap-aut", "4"});
  CHECK(r.code == cli::kExitOk);
  const Json j = r.json();
  CHECK(j["payload"]["aut_sph_order"].is_null());
  CHECK(j["diagnostics"][0]["code"] == "cap-aut");
}

TEST_CASE("every subcommand handles the empty graph") {
  TempGraph empty("gens:\n");
  const std::vector<std::vector<std::string>> commands{
      {"classify"}, {"reduce", "--word", ""},  {"equal", "--word", "", "--other", ""},
      {"length", "--word", ""}, {"longest"}, {"center"}, {"closure", "--gens", ""}, {"aut-report"}, {"slender"},
      {"verify", "--suite", "hom,slender,closure"}};
  for (auto args : commands) {
    args.push_back("--graph");
    args.push_back(empty.path());
    INFO(args.front());
    const Run r = run(args);
    CHECK(r.code == cli::kExitOk);
    CHECK(r.json()["status"] == "ok");
  }
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"classify", "--graph", corpus("fig21.cox")},
           {"aut-report", "--graph", corpus("fig21.cox")},
           {"verify", "--builtin", "--suite", "parabolic,hom", "--trials", "5"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("pretty output parses to the same document") {
  const Run compact = run({"classify", "--graph", corpus("fig21.cox")});
  const Run pretty = run({"classify", "--graph", corpus("fig21.cox"), "--pretty"});
  CHECK(pretty.out.size() > compact.out.size());
  CHECK(pretty.json() == compact.json());
}

TEST_CASE("verify scoping and seeds") {
  const Json j = run({"verify", "--suite", "parabolic", "--trials", "10"}).json();
  REQUIRE(j["payload"]["suites"].size() == 1);
  CHECK(j["payload"]["suites"][0]["name"] == "parabolic");
  CHECK(j["payload"]["failed"] == 0);
  const Json a = run({"verify", "--suite", "wordproblem", "--trials", "5", "--max-order", "50", "--seed", "1"}).json();
  const Json b = run({"verify", "--suite", "wordproblem", "--trials", "5", "--max-order", "50", "--seed", "1"}).json();
  CHECK(a == b);
  CHECK(a["payload"]["suites"][0]["notes"].size() > 0);
}

TEST_CASE("installed binary matches the library entry point") {
  const std::string out = std::filesystem::temp_directory_path() / ("coxeter-cli-out-" + std::to_string(::getpid()));
  const std::string cmd = std::string(COXETER_TOOL_PATH) + " classify --graph " + corpus("fig21.cox") + " > " + out;
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 0);
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == run({"classify", "--graph", corpus("fig21.cox")}).out);
  std::filesystem::remove(out);
  const int bad = std::system((std::string(COXETER_TOOL_PATH) + " nosuch 2>/dev/null").c_str());
  CHECK(WEXITSTATUS(bad) == cli::kExitInput);
}
