#include "coxeter/word_engine.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_set>

#include "coxeter/errors.hpp"

namespace coxeter {

Word Element::canonical_word() const {
  Word w;
  w.letters.reserve(key().size());
  for (unsigned char c : key()) w.letters.push_back(c);
  return w;
}

namespace {

inline unsigned char letter(const std::string& w, std::size_t i) {
  return static_cast<unsigned char>(w[i]);
}

// Strict dependency order of a word: i precedes j when i < j and a chain of
// pairwise non-commuting letters leads from position i to position j.
class HeapOrder {
 public:
  HeapOrder(const std::string& w, const std::vector<DescentMask>& dependent)
      : n_(w.size()), stride_((w.size() + 63) / 64), succ_(n_ * stride_, 0), has_pred_(n_, false) {
    for (std::size_t i = n_; i-- > 0;) {
      std::uint64_t* row = &succ_[i * stride_];
      const auto& dep = dependent[letter(w, i)];
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (!dep[letter(w, j)]) continue;
        has_pred_[j] = true;
        if (test(row, j)) continue;
        row[j / 64] |= std::uint64_t{1} << (j % 64);
        const std::uint64_t* other = &succ_[j * stride_];
        for (std::size_t k = 0; k < stride_; ++k) row[k] |= other[k];
      }
    }
  }

  bool precedes(std::size_t i, std::size_t j) const { return test(&succ_[i * stride_], j); }
  bool is_maximal(std::size_t i) const {
    const std::uint64_t* row = &succ_[i * stride_];
    for (std::size_t k = 0; k < stride_; ++k) {
      if (row[k]) return false;
    }
    return true;
  }
  bool is_minimal(std::size_t i) const { return !has_pred_[i]; }
  const std::uint64_t* successors(std::size_t i) const { return &succ_[i * stride_]; }
  std::size_t stride() const { return stride_; }

 private:
  static bool test(const std::uint64_t* row, std::size_t j) {
    return (row[j / 64] >> (j % 64)) & 1u;
  }

  std::size_t n_;
  std::size_t stride_;
  std::vector<std::uint64_t> succ_;
  std::vector<bool> has_pred_;
};

// Lexicographically least word in the commutation class of w: repeatedly
// emit the smallest letter that can be moved to the front.
std::string commutation_normal_form(const std::string& w, const std::vector<DescentMask>& dependent) {
  const std::size_t n = w.size();
  std::string out;
  out.reserve(n);
  std::vector<char> used(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    DescentMask blocked;
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      const unsigned char c = letter(w, i);
      if (!blocked[c] && (best == n || c < letter(w, best))) best = i;
      blocked |= dependent[c];
    }
    used[best] = 1;
    out.push_back(w[best]);
  }
  return out;
}

void add_descents(const std::string& w, const HeapOrder& heap, DescentMask& left, DescentMask& right) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (heap.is_minimal(i)) left.set(letter(w, i));
    if (heap.is_maximal(i)) right.set(letter(w, i));
  }
}

// True when two occurrences of the same letter can be brought together by
// commutations, i.e. the word is visibly not reduced.
bool has_cancelling_pair(const std::string& w, const std::vector<DescentMask>& dependent) {
  const std::size_t n = w.size();
  for (std::size_t p = 0; p < n; ++p) {
    const unsigned char c = letter(w, p);
    for (std::size_t x = p + 1; x < n; ++x) {
      const unsigned char d = letter(w, x);
      if (d == c) return true;
      if (dependent[c][d]) break;
    }
  }
  return false;
}

}  // namespace

WordEngine::WordEngine(CoxeterGraph g, EngineOptions options)
    : graph_(std::move(g)), options_(options) {
  const std::size_t n = graph_.size();
  dependent_.assign(kMaxGenerators + 1, DescentMask());
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (!graph_.commute(static_cast<Generator>(s), static_cast<Generator>(t)) || s == t) {
        dependent_[s].set(t);
      }
    }
  }
  for (const auto& [pair, m] : graph_.edges()) {
    if (m.is_finite()) braid_edges_.push_back({pair.first, pair.second, m.order()});
  }
  auto id = std::make_shared<detail::ElementData>();
  id->classes.emplace_back();
  identity_ = id;
}

WordEngine::DataPtr WordEngine::intern(DataPtr fresh) const {
  std::unique_lock lock(mutex_);
  auto it = by_canonical_.find(fresh->canonical());
  if (it != by_canonical_.end()) return it->second;
  std::size_t letters = 0;
  for (const auto& c : fresh->classes) letters += c.size() + 1;
  if (cached_letters_ + letters > options_.cache_budget) {
    by_canonical_.clear();
    transitions_.clear();
    cached_letters_ = 0;
  }
  cached_letters_ += letters;
  by_canonical_.emplace(fresh->canonical(), fresh);
  return fresh;
}

void WordEngine::clear_cache() const {
  std::unique_lock lock(mutex_);
  by_canonical_.clear();
  transitions_.clear();
  cached_letters_ = 0;
}

WordEngine::DataPtr WordEngine::step(const DataPtr& cur, Generator s) const {
  if (s >= graph_.size()) throw InputError("letter index out of range");
  std::string key = cur->canonical();
  key.push_back(static_cast<char>(s));
  {
    std::shared_lock lock(mutex_);
    auto it = transitions_.find(key);
    if (it != transitions_.end()) return it->second;
  }
  DataPtr next = cur->right[s] ? shorten(*cur, s) : lengthen(*cur, s);
  next = intern(std::move(next));
  {
    std::unique_lock lock(mutex_);
    cached_letters_ += key.size();
    transitions_.emplace(std::move(key), next);
  }
  return next;
}

WordEngine::DataPtr WordEngine::shorten(const detail::ElementData& cur, Generator s) const {
  // Classes whose heap has s as a maximal element end in s after
  // commutations; dropping that s gives every class of the shorter element.
  auto out = std::make_shared<detail::ElementData>();
  const char cs = static_cast<char>(s);
  std::vector<std::string> result;
  for (const auto& c : cur.classes) {
    auto pos = c.rfind(cs);
    if (pos == std::string::npos) continue;
    bool maximal = true;
    for (std::size_t x = pos + 1; x < c.size() && maximal; ++x) {
      maximal = !dependent_[s][letter(c, x)];
    }
    if (!maximal) continue;
    std::string shorter = c;
    shorter.erase(pos, 1);
    result.push_back(commutation_normal_form(shorter, dependent_));
  }
  if (result.empty()) {
    throw InvariantViolation("right descent without a reduced word ending in it");
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  for (const auto& c : result) {
    HeapOrder heap(c, dependent_);
    add_descents(c, heap, out->left, out->right);
  }
  out->classes = std::move(result);
  return out;
}

WordEngine::DataPtr WordEngine::lengthen(const detail::ElementData& cur, Generator s) const {
  auto out = std::make_shared<detail::ElementData>();
  std::unordered_set<std::string> seen;
  std::deque<std::string> queue;
  auto admit = [&](std::string w) {
    if (seen.insert(w).second) {
      if (seen.size() > options_.braid_cap) {
        throw UndecidedError("cap-braid", options_.braid_cap,
                             "braid class exceeds " + std::to_string(options_.braid_cap) +
                                 " commutation classes");
      }
      queue.push_back(std::move(w));
    }
  };
  for (const auto& c : cur.classes) {
    std::string w = c;
    w.push_back(static_cast<char>(s));
    admit(commutation_normal_form(w, dependent_));
  }

  std::vector<std::size_t> positions;
  std::vector<char> in_window;
  while (!queue.empty()) {
    std::string w = std::move(queue.front());
    queue.pop_front();
    if (has_cancelling_pair(w, dependent_)) {
      throw InvariantViolation("lengthening produced a non-reduced word");
    }
    const std::size_t n = w.size();
    HeapOrder heap(w, dependent_);
    add_descents(w, heap, out->left, out->right);

    for (const auto& e : braid_edges_) {
      positions.clear();
      for (std::size_t i = 0; i < n; ++i) {
        const unsigned char c = letter(w, i);
        if (c == e.s || c == e.t) positions.push_back(i);
      }
      if (positions.size() < e.m) continue;
      for (std::size_t start = 0; start + e.m <= positions.size(); ++start) {
        bool alternating = true;
        for (std::size_t k = start + 1; k < start + e.m && alternating; ++k) {
          alternating = w[positions[k]] != w[positions[k - 1]];
        }
        if (!alternating) continue;
        const std::size_t first = positions[start];
        const std::size_t last = positions[start + e.m - 1];
        // The chain can be made contiguous iff nothing outside it is squeezed
        // between its ends in the dependency order.
        bool convex = true;
        for (std::size_t x = first + 1; x < last && convex; ++x) {
          const unsigned char c = letter(w, x);
          if (c == e.s || c == e.t) continue;
          convex = !(heap.precedes(first, x) && heap.precedes(x, last));
        }
        if (!convex) continue;

        in_window.assign(n, 0);
        for (std::size_t k = start; k < start + e.m; ++k) in_window[positions[k]] = 1;
        std::vector<char> after(n, 0);
        for (std::size_t k = start; k < start + e.m; ++k) {
          const std::uint64_t* row = heap.successors(positions[k]);
          for (std::size_t x = 0; x < n; ++x) {
            if (!in_window[x] && ((row[x / 64] >> (x % 64)) & 1u)) after[x] = 1;
          }
        }
        std::string moved;
        moved.reserve(n);
        for (std::size_t x = 0; x < n; ++x) {
          if (!in_window[x] && !after[x]) moved.push_back(w[x]);
        }
        const char a = w[first];
        const char b = static_cast<unsigned char>(a) == e.s ? static_cast<char>(e.t)
                                                            : static_cast<char>(e.s);
        for (std::size_t k = 0; k < e.m; ++k) moved.push_back(k % 2 == 0 ? b : a);
        for (std::size_t x = 0; x < n; ++x) {
          if (after[x]) moved.push_back(w[x]);
        }
        admit(commutation_normal_form(moved, dependent_));
      }
    }
  }
  out->classes.assign(seen.begin(), seen.end());
  std::sort(out->classes.begin(), out->classes.end());
  return out;
}

Element WordEngine::element(const Word& w) const {
  DataPtr cur = identity_;
  for (Generator s : w.letters) cur = step(cur, s);
  return Element(cur);
}

Element WordEngine::multiply(const Element& e, Generator s) const {
  return Element(step(e.data_, s));
}

Element WordEngine::multiply(const Element& e, const Word& w) const {
  Element cur = e;
  for (Generator s : w.letters) cur = multiply(cur, s);
  return cur;
}

ReducedWord WordEngine::reduce(const Word& w) const {
  Element e = element(w);
  ReducedWord r;
  r.canonical = e.canonical_word();
  r.letters = r.canonical;
  r.commutation_classes = e.commutation_classes();
  return r;
}

std::size_t WordEngine::length(const Word& w) const { return element(w).length(); }

bool WordEngine::is_identity(const Word& w) const { return element(w).is_identity(); }

bool WordEngine::are_equal(const Word& u, const Word& w) const {
  return element(u * inverse(w)).is_identity();
}

GeneratorSet WordEngine::support(const Word& w) const {
  GeneratorSet out(graph_.size());
  for (unsigned char c : element(w).key()) out.insert(c);
  return out;
}

bool WordEngine::in_standard_parabolic(const Word& w, const GeneratorSet& x) const {
  return support(w).is_subset_of(x);
}

bool WordEngine::is_xy_minimal(const Word& w, const GeneratorSet& x, const GeneratorSet& y) const {
  const std::size_t len = length(w);
  for (Generator s : x.members()) {
    if (length(Word{s} * w) <= len) return false;
  }
  for (Generator t : y.members()) {
    if (length(w * Word{t}) <= len) return false;
  }
  return true;
}

ReducedWord WordEngine::longest_element(const Component& c) const {
  const ComponentType type = classify_component(c);
  if (type.kind != ComponentKind::Spherical) {
    throw PreconditionError("longest element exists only for spherical components; got " +
                            to_string(type));
  }
  DataPtr cur = identity_;
  for (;;) {
    bool grew = false;
    for (Generator s : c.vertices) {
      if (!cur->right[s]) {
        cur = step(cur, s);
        grew = true;
        break;
      }
    }
    if (!grew) break;
  }
  Element e(cur);
  ReducedWord r;
  r.canonical = e.canonical_word();
  r.letters = r.canonical;
  r.commutation_classes = e.commutation_classes();
  return r;
}

bool WordEngine::standard_parabolic_is_normal(const GeneratorSet& x) const {
  for (Generator xi : x.members()) {
    for (std::size_t s = 0; s < graph_.size(); ++s) {
      const auto g = static_cast<Generator>(s);
      if (!in_standard_parabolic(Word{g, xi, g}, x)) return false;
    }
  }
  return true;
}

GeneratorSet WordEngine::left_descents(const Word& w) const {
  Element e = element(w);
  GeneratorSet out(graph_.size());
  for (std::size_t s = 0; s < graph_.size(); ++s) {
    if (e.has_left_descent(static_cast<Generator>(s))) out.insert(static_cast<Generator>(s));
  }
  return out;
}

GeneratorSet WordEngine::right_descents(const Word& w) const {
  Element e = element(w);
  GeneratorSet out(graph_.size());
  for (std::size_t s = 0; s < graph_.size(); ++s) {
    if (e.has_right_descent(static_cast<Generator>(s))) out.insert(static_cast<Generator>(s));
  }
  return out;
}

Word project(const Tripartition& trip, const Word& w, Bin bin) {
  const GeneratorSet keep = trip.generators(bin);
  Word out;
  for (Generator s : w.letters) {
    if (keep.contains(s)) out.letters.push_back(s);
  }
  return out;
}

Word project(const Component& c, const Word& w) {
  Word out;
  for (Generator s : w.letters) {
    if (c.contains(s)) out.letters.push_back(s);
  }
  return out;
}

namespace reference {
namespace {

std::string to_key(const Word& w) {
  std::string k;
  for (Generator s : w.letters) k.push_back(static_cast<char>(s));
  return k;
}

Word from_key(const std::string& k) {
  Word w;
  for (unsigned char c : k) w.letters.push_back(c);
  return w;
}

// Words one braid move away from w.
template <typename Visit>
void for_each_braid_neighbour(const CoxeterGraph& g, const std::string& w, Visit&& visit) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto a = static_cast<Generator>(static_cast<unsigned char>(w[i]));
    const auto b = static_cast<Generator>(static_cast<unsigned char>(w[i + 1]));
    if (a == b) continue;
    BondValue m = g.bond(a, b);
    if (m.is_infinite() || i + m.order() > n) continue;
    bool alternating = true;
    for (std::size_t k = 0; k < m.order() && alternating; ++k) {
      alternating = static_cast<unsigned char>(w[i + k]) == (k % 2 == 0 ? a : b);
    }
    if (!alternating) continue;
    std::string next = w;
    for (std::size_t k = 0; k < m.order(); ++k) next[i + k] = static_cast<char>(k % 2 == 0 ? b : a);
    visit(std::move(next));
  }
}

}  // namespace

std::vector<Word> braid_closure(const CoxeterGraph& g, const Word& w, std::size_t cap) {
  std::unordered_set<std::string> seen{to_key(w)};
  std::deque<std::string> queue{to_key(w)};
  while (!queue.empty()) {
    std::string cur = std::move(queue.front());
    queue.pop_front();
    for_each_braid_neighbour(g, cur, [&](std::string next) {
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw UndecidedError("cap-braid", cap, "braid class exceeds " + std::to_string(cap) + " words");
        }
        queue.push_back(std::move(next));
      }
    });
  }
  std::vector<std::string> keys(seen.begin(), seen.end());
  std::sort(keys.begin(), keys.end());
  std::vector<Word> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(from_key(k));
  return out;
}

Word reduce_by_word_closure(const CoxeterGraph& g, const Word& w, std::size_t cap) {
  std::string current = to_key(w);
  for (;;) {
    std::unordered_set<std::string> seen{current};
    std::deque<std::string> queue{current};
    std::optional<std::string> shorter;
    auto check = [&](const std::string& word) {
      for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (word[i] == word[i + 1]) {
          std::string s = word;
          s.erase(i, 2);
          return std::optional<std::string>(std::move(s));
        }
      }
      return std::optional<std::string>();
    };
    shorter = check(current);
    while (!shorter && !queue.empty()) {
      std::string cur = std::move(queue.front());
      queue.pop_front();
      for_each_braid_neighbour(g, cur, [&](std::string next) {
        if (shorter || !seen.insert(next).second) return;
        if (seen.size() > cap) {
          throw UndecidedError("cap-braid", cap, "braid class exceeds " + std::to_string(cap) + " words");
        }
        shorter = check(next);
        queue.push_back(std::move(next));
      });
    }
    if (!shorter) {
      return from_key(*std::min_element(seen.begin(), seen.end()));
    }
    current = std::move(*shorter);
  }
}

}  // namespace reference
}  // namespace coxeter
