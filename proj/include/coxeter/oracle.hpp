#ifndef COXETER_ORACLE_HPP_
#define COXETER_ORACLE_HPP_

// Brute-force ground truth over finite (parabolic sub)groups: Cayley-graph
// enumeration, centres, automorphism counts, homomorphism counts and double
// coset minima. Nothing here uses the formulas it is meant to check.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxeter/graph.hpp"
#include "coxeter/word_engine.hpp"

namespace coxeter {

using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultEnumerationCap = 5000;
inline constexpr std::size_t kDefaultAutCap = 1024;
// Search nodes brute_aut_order may visit before giving up. Elementary
// abelian groups have huge automorphism groups that no image search can
// list one by one.
inline constexpr std::uint64_t kDefaultAutBudget = std::uint64_t{1} << 28;
// brute_hom_count enumerates 2^(r |domain|) assignments.
inline constexpr std::size_t kMaxHomCountBits = 30;
inline constexpr std::size_t kMaxHomCountDomain = 20;

// Elements of W_X in breadth-first order from the identity (id 0), keyed by
// canonical reduced words. depth[id] is the Cayley-graph distance, which is
// independent of the rewriting length.
struct FiniteGroupTable {
  std::vector<Generator> generators;  // X, ascending
  std::vector<std::string> elements;  // canonical keys (one byte per letter)
  std::unordered_map<std::string, ElementId> index;
  std::vector<ElementId> mult;  // mult[id * |X| + j] = elements[id] * X[j]
  std::vector<std::uint32_t> depth;

  std::size_t order() const { return elements.size(); }
  std::size_t rank() const { return generators.size(); }
  ElementId right(ElementId id, std::size_t j) const { return mult[id * generators.size() + j]; }
  std::optional<std::size_t> local_index(Generator s) const;

  // Folds the multiplication table over the letters; throws
  // PreconditionError for letters outside X.
  ElementId element_of(const Word& w) const;
  ElementId product(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const;
  ElementId left(std::size_t j, ElementId id) const;
  std::uint32_t element_order(ElementId a) const;
  Word word(ElementId id) const;

  friend bool operator==(const FiniteGroupTable& a, const FiniteGroupTable& b) {
    return a.generators == b.generators && a.elements == b.elements && a.mult == b.mult &&
           a.depth == b.depth;
  }
};

// BFS over right multiplication by X. std::nullopt when |W_X| > cap, which
// includes every infinite W_X.
std::optional<FiniteGroupTable> enumerate_group(const WordEngine& engine, const GeneratorSet& x,
                                                std::size_t cap = kDefaultEnumerationCap);

// Same, consulting and filling an on-disk table cache in `cache_dir`.
std::optional<FiniteGroupTable> enumerate_group_cached(const WordEngine& engine, const GeneratorSet& x,
                                                       std::size_t cap,
                                                       const std::filesystem::path& cache_dir);

// Elements commuting with every generator of the table.
std::vector<ElementId> brute_center(const FiniteGroupTable& t);

// |Aut(W_X)| by searching generator images: tuples of involutions whose
// pairwise products have the Coxeter orders and which generate the group.
// std::nullopt when the group order exceeds cap or the search exceeds budget.
std::optional<std::uint64_t> brute_aut_order(const FiniteGroupTable& t, const CoxeterGraph& g,
                                             std::size_t cap = kDefaultAutCap,
                                             std::uint64_t budget = kDefaultAutBudget);

// Number of assignments domain -> (Z/2)^r satisfying the Coxeter relations
// (odd finite bonds force equal images). Exhaustive.
std::uint64_t brute_hom_count(const CoxeterGraph& g, const GeneratorSet& domain, unsigned r);

// W_X w W_Y, in breadth-first order from w.
std::vector<ElementId> double_coset(const FiniteGroupTable& t, ElementId w, const GeneratorSet& x,
                                    const GeneratorSet& y);

// The unique element of minimal length in W_X w W_Y. Throws
// InvariantViolation when two elements tie for the minimum.
ElementId brute_xy_minimal(const FiniteGroupTable& t, ElementId w, const GeneratorSet& x,
                           const GeneratorSet& y);

// Text persistence: header, one canonical word per line (generator indices),
// then one "id j target" triple per multiplication entry.
void save_table(const FiniteGroupTable& t, std::ostream& out);
FiniteGroupTable load_table(std::istream& in);
// File name for a table of (graph, X).
std::string table_cache_name(const CoxeterGraph& g, const GeneratorSet& x);

}  // namespace coxeter

#endif  // COXETER_ORACLE_HPP_
