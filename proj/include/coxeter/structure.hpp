#ifndef COXETER_STRUCTURE_HPP_
#define COXETER_STRUCTURE_HPP_

// Centre of W, the finite / narrow / full-sized trichotomy for normal
// closures, and the reports on finite and narrow normal subgroups of W.

#include <optional>
#include <string>
#include <vector>

#include "coxeter/classifier.hpp"
#include "coxeter/graph.hpp"
#include "coxeter/word_engine.hpp"

namespace coxeter {

// One spherical component with its longest element and whether that element
// is central in the component.
struct LongestElementCheck {
  ClassifiedComponent component;
  ReducedWord longest;
  bool central = false;
};

// Z(W) is elementary abelian of rank r: one factor {1, w_0} per spherical
// component whose w_0 is central. Affine and generic components contribute
// nothing.
struct CenterReport {
  std::vector<LongestElementCheck> spherical;  // every spherical component
  std::vector<ClassifiedComponent> central_components;
  std::vector<ReducedWord> central_words;
  std::size_t rank = 0;
};

CenterReport center(const WordEngine& engine, const Tripartition& trip);

enum class Verdict { Finite, NarrowInfinite, FullSized, Undecided };

std::string to_string(Verdict v);

// A generator of the closure and its non-trivial projection onto a bin.
struct ProjectionWitness {
  Word generator;
  Word projection;
};

struct ClosureVerdict {
  Verdict verdict = Verdict::Finite;
  std::optional<ProjectionWitness> generic_witness;
  std::optional<ProjectionWitness> affine_witness;
  // Affine components met by some non-trivial projection (indices into
  // trip.affine).
  std::vector<std::size_t> affine_components_hit;
  // Upper bound on the virtual rank of a narrow infinite closure: the sum of
  // |X_i| - 1 over the affine components hit.
  std::optional<std::size_t> rank_bound;
  // Words whose projections could not be decided within the braid cap.
  std::vector<Word> undecided_words;
  std::string undecided_cap;
  std::size_t undecided_limit = 0;
};

// Classifies the normal closure of `gens` in W. The closure is full-sized iff
// some generator has a non-trivial generic projection, finite iff every
// generator also has trivial affine projections, narrow infinite otherwise.
// A cap hit makes the verdict Undecided unless a generic witness exists.
ClosureVerdict normal_closure_verdict(const WordEngine& engine, const Tripartition& trip,
                                      const std::vector<Word>& gens);

// W_sph = {1} rules out non-trivial finite normal subgroups of W;
// W_sph = W_aff = {1} rules out non-trivial narrow ones.
struct FiniteNormalReport {
  bool no_finite_normal = false;
  bool no_narrow_normal = false;
  // Components preventing the flags.
  std::vector<ClassifiedComponent> spherical_components;
  std::vector<ClassifiedComponent> affine_components;
};

FiniteNormalReport finite_normal_report(const Tripartition& trip);

}  // namespace coxeter

#endif  // COXETER_STRUCTURE_HPP_
