#ifndef COXETER_WORD_ENGINE_HPP_
#define COXETER_WORD_ENGINE_HPP_

// Word problem by Tits rewriting.
//
// An element is represented by its braid class: every reduced word of the
// element, closed under braid moves. Reduced words that differ only by
// commutations (m = 2 moves) are grouped into commutation classes, each
// stored as its lexicographically least member, so a braid class is a sorted
// set of such normal forms. The lexicographically least reduced word of the
// element is the first of them.
//
// Words are reduced left to right. Appending s to a reduced u either
// shortens it, exactly when some reduced word of u ends in s, or yields the
// reduced word u s, whose braid class is the braid closure of {c s}. In the
// first case the class of u s is read off the class of u by deleting the
// final s.

#include <bitset>
#include <cstddef>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxeter/classifier.hpp"
#include "coxeter/graph.hpp"

namespace coxeter {

inline constexpr std::size_t kDefaultBraidCap = std::size_t{1} << 20;

using DescentMask = std::bitset<kMaxGenerators + 1>;

namespace detail {
struct ElementData {
  // Sorted commutation-class normal forms (bytes are generator indices).
  std::vector<std::string> classes;
  DescentMask left;
  DescentMask right;
  const std::string& canonical() const { return classes.front(); }
};
}  // namespace detail

// Handle to an element of W, shared with the engine's cache.
class Element {
 public:
  Element() = default;
  explicit Element(std::shared_ptr<const detail::ElementData> d) : data_(std::move(d)) {}

  std::size_t length() const { return data_->canonical().size(); }
  bool is_identity() const { return data_->canonical().empty(); }
  // Lexicographically least reduced word, one byte per letter.
  const std::string& key() const { return data_->canonical(); }
  Word canonical_word() const;
  bool has_left_descent(Generator s) const { return data_->left[s]; }
  bool has_right_descent(Generator s) const { return data_->right[s]; }
  // Number of commutation classes in the braid class of reduced words.
  std::size_t commutation_classes() const { return data_->classes.size(); }
  const detail::ElementData& data() const { return *data_; }

  friend bool operator==(const Element& a, const Element& b) { return a.key() == b.key(); }

 private:
  friend class WordEngine;
  std::shared_ptr<const detail::ElementData> data_;
};

struct ReducedWord {
  // The lexicographically least reduced word; also reported as `canonical`.
  Word letters;
  Word canonical;
  std::size_t commutation_classes = 1;

  std::size_t length() const { return letters.size(); }
};

struct EngineOptions {
  // Maximum number of commutation classes in one braid class.
  std::size_t braid_cap = kDefaultBraidCap;
  // Cache budget in stored letters; the cache is dropped when exceeded.
  std::size_t cache_budget = std::size_t{1} << 26;
};

class WordEngine {
 public:
  explicit WordEngine(CoxeterGraph g, EngineOptions options = {});

  const CoxeterGraph& graph() const { return graph_; }
  const EngineOptions& options() const { return options_; }

  // Throws UndecidedError ("cap-braid") when a braid class exceeds the cap.
  ReducedWord reduce(const Word& w) const;
  std::size_t length(const Word& w) const;
  bool is_identity(const Word& w) const;
  bool are_equal(const Word& u, const Word& w) const;
  GeneratorSet support(const Word& w) const;
  bool in_standard_parabolic(const Word& w, const GeneratorSet& x) const;

  // l(s w) > l(w) for all s in X and l(w t) > l(w) for all t in Y.
  bool is_xy_minimal(const Word& w, const GeneratorSet& x, const GeneratorSet& y) const;

  // Greedy ascent inside a spherical component: append the least generator
  // that lengthens the word until none does. Throws PreconditionError for
  // affine or generic components.
  ReducedWord longest_element(const Component& c) const;

  // True iff s x s lies in W_X for every s in S and x in X.
  bool standard_parabolic_is_normal(const GeneratorSet& x) const;

  GeneratorSet left_descents(const Word& w) const;
  GeneratorSet right_descents(const Word& w) const;

  Element identity() const { return Element(identity_); }
  Element element(const Word& w) const;
  Element multiply(const Element& e, Generator s) const;
  Element multiply(const Element& e, const Word& w) const;

  // Drops memoized braid classes. Results never depend on the cache.
  void clear_cache() const;

 private:
  using DataPtr = std::shared_ptr<const detail::ElementData>;

  DataPtr step(const DataPtr& cur, Generator s) const;
  DataPtr shorten(const detail::ElementData& cur, Generator s) const;
  DataPtr lengthen(const detail::ElementData& cur, Generator s) const;
  DataPtr intern(DataPtr fresh) const;

  CoxeterGraph graph_;
  EngineOptions options_;
  DataPtr identity_;

  // Per letter: the letters it does not commute with (itself included).
  std::vector<DescentMask> dependent_;
  // Bonds with finite m >= 3, as (s, t, m) with s < t.
  struct BraidEdge {
    Generator s, t;
    unsigned m;
  };
  std::vector<BraidEdge> braid_edges_;

  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::string, DataPtr> by_canonical_;
  mutable std::unordered_map<std::string, DataPtr> transitions_;
  mutable std::size_t cached_letters_ = 0;
};

// Deletes the letters whose component is outside the bin. Distinct components
// commute, so this realizes the projection onto that factor.
Word project(const Tripartition& trip, const Word& w, Bin bin);
// Projection onto a single component.
Word project(const Component& c, const Word& w);

namespace reference {

// Literal Tits procedure on words: close the current word under all braid
// moves (commutations included); if some member has an adjacent pair s s,
// delete it and restart on the shorter word. Returns the lexicographically
// least member of the final class. Exponential; kept as a test reference.
// `cap` bounds the number of words in one class.
Word reduce_by_word_closure(const CoxeterGraph& g, const Word& w, std::size_t cap = kDefaultBraidCap);

// All words reachable from w by braid moves, sorted. Throws UndecidedError
// beyond `cap` members.
std::vector<Word> braid_closure(const CoxeterGraph& g, const Word& w, std::size_t cap = kDefaultBraidCap);

}  // namespace reference

}  // namespace coxeter

#endif  // COXETER_WORD_ENGINE_HPP_
