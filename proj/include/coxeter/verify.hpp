#ifndef COXETER_VERIFY_HPP_
#define COXETER_VERIFY_HPP_

// Cross-check suites run by `coxtool verify`: every formula-driven result is
// compared against brute force on seeded random or catalog instances.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxeter/aut.hpp"
#include "coxeter/graph.hpp"
#include "coxeter/instances.hpp"
#include "coxeter/word_engine.hpp"

namespace coxeter {

struct VerifyOptions {
  std::vector<std::string> suites;     // empty: all
  std::optional<std::size_t> trials;   // overrides each randomized suite's default
  std::size_t max_order = 1200;        // finite groups larger than this are skipped
  std::uint64_t seed = kDefaultSeed;
  EngineOptions engine;
  AnalysisOptions analysis;
  double tolerance = kGramTolerance;
  // When set, graph-based suites run on this graph instead of the built-in
  // corpus.
  std::optional<CoxeterGraph> graph;
};

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few messages
  std::vector<std::string> notes;     // skipped instances and the like
  double seconds = 0.0;

  void check(bool ok, const std::string& what);
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  bool ok() const;
};

// catalog, wordproblem, longest, center, xymin, parabolic, closure, hom, slender
const std::vector<std::string>& verify_suite_names();

// Throws InputError for an unknown suite name.
VerifyReport run_verify(const VerifyOptions& options);

// Named spherical groups used by the finite-group suites: A_1..A_5,
// B_2..B_4, D_4, H_3, F_4 and I_2(3..12).
struct NamedGraph {
  std::string name;
  CoxeterGraph graph;
};
std::vector<NamedGraph> finite_group_corpus();

}  // namespace coxeter

#endif  // COXETER_VERIFY_HPP_
