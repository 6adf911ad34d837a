// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "coxeter/catalog.hpp"
#include "coxeter/classifier.hpp"
#include "coxeter/cli.hpp"
#include "coxeter/json.hpp"
#include "coxeter/verify.hpp"

using namespace coxeter;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> run;
};

const std::string kExample = std::string(COXETER_CORPUS_DIR) + "/fig21.cox";

Json cli_payload(const std::vector<std::string>& args, Outcome& o) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  o.require(code == cli::kExitOk, args.front() + " exited with " + std::to_string(code) + ": " + err.str());
  if (code != cli::kExitOk) return Json::object();
  return Json::parse(out.str())["payload"];
}

// Runs one verify suite on the built-in corpus and folds it into an outcome.
SuiteResult suite(const std::string& name, std::optional<std::size_t> trials, Outcome& o) {
  VerifyOptions v;
  v.suites = {name};
  v.trials = trials;
  v.max_order = 1200;
  const VerifyReport report = run_verify(v);
  const SuiteResult& r = report.suites.at(0);
  o.require(r.failed == 0, name + ": " + std::to_string(r.failed) + " failures, first: " +
                               (r.failures.empty() ? std::string("?") : r.failures.front()));
  o.require(r.passed > 0, name + ": no checks ran");
  return r;
}

std::vector<std::vector<std::string>> bin_vertices(const Json& bin) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : bin) out.push_back(c["vertices"].get<std::vector<std::string>>());
  return out;
}

using Names = std::vector<std::vector<std::string>>;

const std::size_t kCorpusGroups = finite_group_corpus().size();

Outcome tripartition_example_check() {
  Outcome o;
  const Json p = cli_payload({"classify", "--graph", kExample}, o);
  if (!o.ok) return o;
  o.require(bin_vertices(p["spherical"]) == Names{{"s9", "s10"}}, "spherical bin differs");
  o.require(bin_vertices(p["affine"]) == Names{{"s1", "s2"}, {"s3", "s4", "s5"}}, "affine bin differs");
  o.require(bin_vertices(p["generic"]) == Names{{"s6", "s7", "s8"}}, "generic bin differs");
  o.detail = o.ok ? "bins match exactly" : o.detail;
  return o;
}

Outcome catalog_soundness() {
  Outcome o;
  auto entries = catalog::entries_up_to_rank(8, 12);
  entries.push_back({ComponentKind::Spherical, "A_2", catalog::type_i2(3)});
  entries.push_back({ComponentKind::Spherical, "B_2", catalog::type_i2(4)});
  for (const auto& e : entries) {
    const ComponentType t = classify_connected_graph(e.diagram);
    o.require(t.kind == e.kind && t.label == e.label, e.label + " classified as " + to_string(t));
    const auto sig = definiteness_signature(e.diagram);
    if (e.kind == ComponentKind::Spherical) {
      o.require(sig.min_eigenvalue > 1e-9, e.label + ": not positive definite");
    } else {
      o.require(std::abs(sig.min_eigenvalue) <= 1e-9 && sig.zero_count == 1, e.label + ": kernel not one-dimensional");
    }
  }
  if (o.ok) o.detail = std::to_string(entries.size()) + " diagrams";
  return o;
}

Outcome word_problem() {
  Outcome o;
  const SuiteResult r = suite("wordproblem", 500, o);
  o.require(r.notes.empty(), "a corpus group was skipped");
  o.require(r.passed == 4 * 500 * kCorpusGroups, "unexpected check count " + std::to_string(r.passed));
  if (o.ok) o.detail = std::to_string(kCorpusGroups) + " groups x 500 words, " + std::to_string(r.passed) + " checks";
  return o;
}

Outcome longest_elements() {
  Outcome o;
  const SuiteResult r = suite("longest", std::nullopt, o);
  o.require(r.notes.empty(), "a corpus group was skipped");
  if (o.ok) o.detail = std::to_string(r.passed) + " checks";
  return o;
}

Outcome centres() {
  Outcome o;
  const SuiteResult r = suite("center", std::nullopt, o);
  o.require(r.notes.empty(), "a corpus group was skipped");
  if (o.ok) o.detail = std::to_string(r.passed) + " checks";
  return o;
}

Outcome xy_minimal() {
  Outcome o;
  const SuiteResult r = suite("xymin", 100, o);
  o.require(r.notes.empty(), "a corpus group was skipped");
  o.require(r.passed == 100 * kCorpusGroups, "unexpected check count " + std::to_string(r.passed));
  if (o.ok) o.detail = std::to_string(r.passed) + " triples, no ties";
  return o;
}

Outcome normal_parabolics() {
  Outcome o;
  const SuiteResult r = suite("parabolic", 100, o);
  if (o.ok) o.detail = "100 graphs, " + std::to_string(r.passed) + " proper subsets, none normal";
  return o;
}

Outcome closure_verdicts() {
  Outcome o;
  struct Case {
    const char* gens;
    const char* verdict;
    std::optional<int> bound;
  };
  const Case cases[] = {{"s9", "Finite", std::nullopt},
                        {"s1 s2", "NarrowInfinite", 1},
                        {"s6 s7", "FullSized", std::nullopt},
                        {"s3 s4 s3 s4", "NarrowInfinite", std::nullopt}};
  for (const auto& c : cases) {
    const Json p = cli_payload({"closure", "--graph", kExample, "--gens", c.gens}, o);
    if (!o.ok) return o;
    o.require(p["verdict"] == c.verdict, std::string(c.gens) + ": got " + p["verdict"].dump());
    if (c.bound) o.require(p.value("rank_bound", -1) == *c.bound, std::string(c.gens) + ": rank bound differs");
  }
  if (o.ok) o.detail = "4 verdicts match";
  return o;
}

Outcome automorphism_arithmetic() {
  Outcome o;
  const SuiteResult r = suite("hom", 50, o);
  for (const auto& n : r.notes) o.require(false, "skipped: " + n);
  const Json p = cli_payload({"aut-report", "--graph", kExample}, o);
  if (!o.ok) return o;
  o.require(p["ker_psi_order"] == 1, "ker_psi_order differs");
  o.require(p["aut_sph_order"] == 6, "aut_sph_order differs");
  o.require(p["ker_phi_order"] == 6, "ker_phi_order differs");
  o.require(p["affine_virtual_rank"] == 3, "affine_virtual_rank differs");
  if (o.ok) o.detail = "50 random graphs, example report 1/6/6/3";
  return o;
}

Outcome slenderness() {
  Outcome o;
  suite("slender", std::nullopt, o);
  // The bundled corpus files as well.
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(COXETER_CORPUS_DIR)) {
    if (entry.path().extension() != ".cox") continue;
    ++files;
    const Json p = cli_payload({"slender", "--graph", entry.path().string()}, o);
    const Json c = cli_payload({"classify", "--graph", entry.path().string()}, o);
    if (!o.ok) return o;
    const bool empty = c["spherical"].empty();
    o.require(p["w_almost_slender"] == empty, entry.path().filename().string() + ": W verdict differs");
    o.require(p["w_almost_slender"] == p["finite_normal"]["no_nontrivial_finite_normal_subgroup"],
              entry.path().filename().string() + ": finite-normal flag differs");
    o.require(empty ? p["aut_almost_slender"] == true : p["aut_almost_slender"] == "unknown",
              entry.path().filename().string() + ": Aut verdict differs");
  }
  if (o.ok) o.detail = "built-in corpus plus " + std::to_string(files) + " corpus files";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "ten-generator example tripartition", 1.0, tripartition_example_check},
      {2, "catalog soundness", 10.0, catalog_soundness},
      {3, "word problem against Cayley-graph BFS", 120.0, word_problem},
      {4, "longest elements", 60.0, longest_elements},
      {5, "centres against brute force", 0.0, centres},
      {6, "(X,Y)-minimal elements", 0.0, xy_minimal},
      {7, "no proper normal standard parabolics", 0.0, normal_parabolics},
      {8, "normal closure verdicts", 0.0, closure_verdicts},
      {9, "homomorphism counts and Aut(W) orders", 60.0, automorphism_arithmetic},
      {10, "slenderness verdicts", 0.0, slenderness},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.ok = false;
      o.detail = "exceeded " + std::to_string(c.limit_seconds) + " s";
    }
    if (!o.ok) ++failures;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << " (" << secs << " s) "
         << o.detail;
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
