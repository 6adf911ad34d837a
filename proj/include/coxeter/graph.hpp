#ifndef COXETER_GRAPH_HPP_
#define COXETER_GRAPH_HPP_

// Coxeter graph data model: generators, bond values, words over the
// generators, the text file format, the canonical bilinear form and the
// graph automorphism group.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace coxeter {

// Dense 0-based generator index, position in declaration order.
using Generator = std::uint16_t;

// The word engine packs letters into bytes.
inline constexpr std::size_t kMaxGenerators = 255;

// The value m(s,t) of the Coxeter matrix. Infinity is a kind of its own, so
// there is deliberately no arithmetic on bond values.
class BondValue {
 public:
  enum class Kind : std::uint8_t { Finite, Infinite };

  // m >= 1; m == 1 only occurs on the diagonal.
  static constexpr BondValue finite(unsigned m) { return BondValue(Kind::Finite, m); }
  static constexpr BondValue infinity() { return BondValue(Kind::Infinite, 0); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_infinite() const { return kind_ == Kind::Infinite; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  // Only meaningful for finite bonds.
  constexpr unsigned order() const { return m_; }
  // m == 2: the generators commute and there is no edge in the graph.
  constexpr bool commutes() const { return is_finite() && m_ == 2; }
  constexpr bool is_odd() const { return is_finite() && (m_ % 2 == 1); }

  std::string to_string() const;

  friend constexpr bool operator==(BondValue, BondValue) = default;

 private:
  constexpr BondValue(Kind kind, unsigned m) : kind_(kind), m_(m) {}
  Kind kind_ = Kind::Finite;
  unsigned m_ = 2;
};

struct Bond {
  Generator a = 0;
  Generator b = 0;
  BondValue value = BondValue::finite(2);
};

// Finite generator set with a symmetric bond function. Immutable once built.
// Only pairs with m != 2 are stored in the sparse edge map; a dense matrix is
// kept alongside for constant-time lookups.
class CoxeterGraph {
 public:
  using EdgeMap = std::map<std::pair<Generator, Generator>, BondValue>;

  CoxeterGraph() = default;
  // Throws InputError on duplicate or empty names, self bonds, m < 2, or
  // conflicting duplicate pairs. Bonds with m == 2 are dropped.
  CoxeterGraph(std::vector<std::string> names, const std::vector<Bond>& bonds);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Generator s) const { return names_[s]; }
  std::optional<Generator> find(std::string_view name) const;
  // Throws InputError for unknown names.
  Generator index_of(std::string_view name) const;

  BondValue bond(Generator s, Generator t) const {
    if (s == t) return BondValue::finite(1);
    return matrix_[static_cast<std::size_t>(s) * names_.size() + t];
  }
  bool commute(Generator s, Generator t) const { return s == t || bond(s, t).commutes(); }

  // Pairs (s, t) with s < t and m(s,t) != 2, in lexicographic index order.
  const EdgeMap& edges() const { return edges_; }

  // Full subgraph on the given vertices, reindexed in the given order.
  CoxeterGraph induced(std::span<const Generator> vertices) const;

  friend bool operator==(const CoxeterGraph& a, const CoxeterGraph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Generator> index_;
  EdgeMap edges_;
  std::vector<BondValue> matrix_;
};

struct ParsedGraph {
  CoxeterGraph graph;
  std::vector<std::string> warnings;
};

// Graph file format:
//   gens: <name> <name> ...
//   bond: <name> <name> <m>     (m integer >= 2 or "inf"; m == 2 is ignored)
//   # comment
ParsedGraph parse_graph_with_warnings(std::string_view text);
CoxeterGraph parse_graph(std::string_view text);

// Canonical form: generators in declaration order, bonds in index-pair order.
std::string serialize_graph(const CoxeterGraph& g);

// Sequence of generators. Every generator is an involution, so the inverse
// of a word is its reversal.
struct Word {
  std::vector<Generator> letters;

  Word() = default;
  Word(std::initializer_list<Generator> l) : letters(l) {}
  explicit Word(std::vector<Generator> l) : letters(std::move(l)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Generator operator[](std::size_t i) const { return letters[i]; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

Word operator*(const Word& u, const Word& w);
Word inverse(const Word& w);

// Whitespace-separated generator names; empty text is the identity.
Word parse_word(const CoxeterGraph& g, std::string_view text);
std::string format_word(const CoxeterGraph& g, const Word& w);

// Subset of the generators of a fixed graph.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  explicit GeneratorSet(std::size_t universe) : bits_(universe, false) {}
  GeneratorSet(std::size_t universe, std::span<const Generator> members);

  static GeneratorSet all(std::size_t universe) {
    GeneratorSet s(universe);
    s.bits_.assign(universe, true);
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  bool contains(Generator s) const { return s < bits_.size() && bits_[s]; }
  void insert(Generator s) { bits_.at(s) = true; }
  void erase(Generator s) { bits_.at(s) = false; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<Generator> members() const;
  bool is_subset_of(const GeneratorSet& other) const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::vector<bool> bits_;
};

GeneratorSet parse_generator_set(const CoxeterGraph& g, std::string_view text);
std::vector<std::string> generator_names(const CoxeterGraph& g, const GeneratorSet& set);

// Canonical bilinear form <a_s|a_t> = -cos(pi/m), -1 for m = inf.
class GramMatrix {
 public:
  GramMatrix() = default;
  explicit GramMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, 0.0) {}

  std::size_t dim() const { return dim_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  std::span<const double> data() const { return entries_; }

 private:
  std::size_t dim_ = 0;
  std::vector<double> entries_;
};

// Comparison tolerance used wherever Gram entries or eigenvalues are
// compared against exact values.
inline constexpr double kGramTolerance = 1e-9;

GramMatrix gram_matrix(const CoxeterGraph& g);

// perm[s] is the image of generator s.
using Permutation = std::vector<Generator>;

inline constexpr std::size_t kDefaultAutomorphismCap = 10;

// All bond-preserving permutations of the generators, in lexicographic order.
// Brute force over |S|! permutations; std::nullopt when |S| exceeds cap.
std::optional<std::vector<Permutation>> graph_automorphisms(
    const CoxeterGraph& g, std::size_t cap = kDefaultAutomorphismCap);

bool is_graph_automorphism(const CoxeterGraph& g, const Permutation& perm);

// Relabels generator s as perm[s]; used to test invariance under renaming.
CoxeterGraph permute_generators(const CoxeterGraph& g, const Permutation& perm);

}  // namespace coxeter

#endif  // COXETER_GRAPH_HPP_
