#include "coxeter/kernels.hpp"

#include <atomic>
#include <exception>

#include "coxeter/errors.hpp"

namespace coxeter::kernels {

namespace {

// Runs body(i) for i in [0, n) on the OpenMP team and rethrows the first
// exception on the calling thread.
template <class Body>
void parallel_for(std::int64_t n, Body&& body) {
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      body(i);
    } catch (...) {
#pragma omp critical(coxeter_kernel_failure)
      {
        if (!failure) failure = std::current_exception();
      }
      failed = true;
    }
  }
  if (failure) std::rethrow_exception(failure);
}

// ---------------------------------------------------------------------------
// Graph automorphisms: backtracking over images in increasing order, which
// lists permutations lexicographically.

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const CoxeterGraph& g) : g_(g), n_(g.size()) {}

  // Automorphisms with perm[0] == first (all automorphisms when n == 0).
  std::vector<Permutation> with_first(Generator first) const {
    std::vector<Permutation> out;
    Permutation perm(n_, 0);
    std::vector<bool> used(n_, false);
    if (n_ == 0) {
      out.push_back(perm);
      return out;
    }
    perm[0] = first;
    used[first] = true;
    extend(1, perm, used, out);
    return out;
  }

 private:
  void extend(std::size_t depth, Permutation& perm, std::vector<bool>& used,
              std::vector<Permutation>& out) const {
    if (depth == n_) {
      out.push_back(perm);
      return;
    }
    const auto v = static_cast<Generator>(depth);
    for (std::size_t cand = 0; cand < n_; ++cand) {
      if (used[cand]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < depth && ok; ++u) {
        ok = g_.bond(static_cast<Generator>(u), v) ==
             g_.bond(perm[u], static_cast<Generator>(cand));
      }
      if (!ok) continue;
      perm[depth] = static_cast<Generator>(cand);
      used[cand] = true;
      extend(depth + 1, perm, used, out);
      used[cand] = false;
    }
  }

  const CoxeterGraph& g_;
  std::size_t n_;
};

// ---------------------------------------------------------------------------
// Automorphism order of a finite group table by generator-image search.

class ImageSearch {
 public:
  ImageSearch(const FiniteGroupTable& t, const CoxeterGraph& g, std::uint64_t budget)
      : t_(t), k_(t.rank()), n_(t.order()), budget_(budget), words_(n_), order_(n_, 0) {
    for (std::size_t id = 0; id < n_; ++id) {
      for (unsigned char c : t.elements[id]) {
        words_[id].push_back(static_cast<std::uint8_t>(*t.local_index(c)));
      }
    }
    for (std::size_t id = 0; id < n_; ++id) {
      std::uint32_t k = 1;
      auto x = static_cast<ElementId>(id);
      while (x != 0) {
        x = product(x, static_cast<ElementId>(id));
        ++k;
      }
      order_[id] = k;
      if (k <= 2) candidates_.push_back(static_cast<ElementId>(id));
    }
    compute_class_sizes();
    // Right multiplication by each candidate as a lookup table.
    cand_slot_.assign(n_, kNoSlot);
    right_by_cand_.resize(candidates_.size() * n_);
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
      cand_slot_[candidates_[c]] = static_cast<std::uint32_t>(c);
      for (std::size_t x = 0; x < n_; ++x) {
        right_by_cand_[c * n_ + x] = product(static_cast<ElementId>(x), candidates_[c]);
      }
    }
    required_.assign(k_ * k_, 0);
    required_class_.assign(k_ * k_, 0);
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        const BondValue m = g.bond(t.generators[i], t.generators[j]);
        // Images of generators are involutions. A finite table has no
        // infinite bonds; 0 never matches an order.
        required_[i * k_ + j] = i == j ? 2 : m.is_infinite() ? 0 : m.order();
        // Automorphisms preserve conjugacy class sizes.
        const ElementId si = t.right(0, i), sj = t.right(0, j);
        required_class_[i * k_ + j] = class_size_[i == j ? si : product(si, sj)];
      }
    }
  }

  const std::vector<ElementId>& candidates() const { return candidates_; }

  // Number of generating tuples whose first image is candidates_[first];
  // std::nullopt once the shared budget is exhausted.
  std::optional<std::uint64_t> count_with_first(std::size_t first, std::atomic<std::uint64_t>& spent) const {
    if (k_ == 0) return n_ == 1 ? 1 : 0;
    std::vector<ElementId> images(k_, 0);
    images[0] = candidates_[first];
    if (order_[images[0]] != required_[0] || class_size_[images[0]] != required_class_[0]) return 0;
    std::uint64_t count = 0;
    if (!extend(1, images, count, spent)) return std::nullopt;
    return count;
  }

  bool exhausted(const std::atomic<std::uint64_t>& spent) const {
    return spent.load(std::memory_order_relaxed) > budget_;
  }

 private:
  // Conjugation by the generators reaches the whole class.
  void compute_class_sizes() {
    class_size_.assign(n_, 0);
    std::vector<bool> seen(n_, false);
    for (std::size_t start = 0; start < n_; ++start) {
      if (seen[start]) continue;
      std::vector<ElementId> cls{static_cast<ElementId>(start)};
      seen[start] = true;
      for (std::size_t head = 0; head < cls.size(); ++head) {
        for (std::size_t j = 0; j < k_; ++j) {
          const ElementId y = t_.left(j, t_.right(cls[head], j));
          if (!seen[y]) {
            seen[y] = true;
            cls.push_back(y);
          }
        }
      }
      for (ElementId x : cls) class_size_[x] = static_cast<std::uint32_t>(cls.size());
    }
  }

  ElementId product(ElementId a, ElementId b) const {
    for (std::uint8_t j : words_[b]) a = t_.right(a, j);
    return a;
  }

  bool extend(std::size_t depth, std::vector<ElementId>& images, std::uint64_t& count,
              std::atomic<std::uint64_t>& spent) const {
    if (depth == k_) {
      if (spent.fetch_add(n_, std::memory_order_relaxed) + n_ > budget_) return false;
      if (generates(images)) ++count;
      return true;
    }
    for (ElementId cand : candidates_) {
      if (spent.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) return false;
      if (order_[cand] != required_[depth * k_ + depth]) continue;
      if (class_size_[cand] != required_class_[depth * k_ + depth]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const ElementId p = times_candidate(images[i], cand);
        ok = order_[p] == required_[i * k_ + depth] && class_size_[p] == required_class_[i * k_ + depth];
      }
      if (!ok) continue;
      images[depth] = cand;
      if (!extend(depth + 1, images, count, spent)) return false;
    }
    return true;
  }

  bool generates(const std::vector<ElementId>& images) const {
    std::vector<bool> seen(n_, false);
    std::vector<ElementId> queue{0};
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (ElementId img : images) {
        const ElementId y = times_candidate(queue[head], img);
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
          // A subgroup of more than half the elements is the whole group.
          if (2 * queue.size() > n_) return true;
        }
      }
    }
    return queue.size() == n_;
  }

  ElementId times_candidate(ElementId a, ElementId cand) const {
    return right_by_cand_[cand_slot_[cand] * n_ + a];
  }

  const FiniteGroupTable& t_;
  std::size_t k_;
  std::size_t n_;
  std::uint64_t budget_;
  std::vector<std::vector<std::uint8_t>> words_;
  std::vector<std::uint32_t> order_;
  std::vector<ElementId> candidates_;
  std::vector<unsigned> required_;
  static constexpr std::uint32_t kNoSlot = 0xffffffffu;
  std::vector<std::uint32_t> cand_slot_;
  std::vector<ElementId> right_by_cand_;
  std::vector<std::uint32_t> class_size_;
  std::vector<std::uint32_t> required_class_;
};

// ---------------------------------------------------------------------------
// Homomorphisms into (Z/2)^r: assignment codes pack r bits per generator.

struct HomProblem {
  unsigned r;
  std::size_t width;  // r * |domain|
  std::vector<std::pair<unsigned, unsigned>> odd_edges;  // bit offsets

  bool satisfied(std::uint64_t code) const {
    const std::uint64_t mask = (std::uint64_t{1} << r) - 1;
    for (auto [a, b] : odd_edges) {
      if (((code >> a) & mask) != ((code >> b) & mask)) return false;
    }
    return true;
  }
};

HomProblem hom_problem(const CoxeterGraph& g, const GeneratorSet& domain, unsigned r) {
  const auto members = domain.members();
  HomProblem p{r, r * members.size(), {}};
  if (r == 0) return p;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const BondValue m = g.bond(members[i], members[j]);
      if (m.is_finite() && m.is_odd()) {
        p.odd_edges.emplace_back(static_cast<unsigned>(r * i), static_cast<unsigned>(r * j));
      }
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Group enumeration shared state.

struct Enumeration {
  FiniteGroupTable table;
  std::vector<Element> handles;

  // Appends `product` as the image of (src, j); false once the table grows
  // beyond cap.
  bool record(std::size_t src, const Element& product, std::size_t cap) {
    const auto next_id = static_cast<ElementId>(table.elements.size());
    auto [it, inserted] = table.index.try_emplace(product.key(), next_id);
    if (inserted) {
      if (table.elements.size() + 1 > cap) return false;
      table.elements.push_back(product.key());
      table.depth.push_back(table.depth[src] + 1);
      handles.push_back(product);
    }
    table.mult.push_back(it->second);
    return true;
  }
};

Enumeration start_enumeration(const WordEngine& engine, const GeneratorSet& x) {
  Enumeration e;
  e.table.generators = x.members();
  e.table.elements.emplace_back();
  e.table.index.emplace(std::string{}, 0);
  e.table.depth.push_back(0);
  e.handles.push_back(engine.identity());
  return e;
}

}  // namespace

std::vector<Permutation> graph_automorphisms_serial(const CoxeterGraph& g) {
  AutomorphismSearch search(g);
  if (g.size() == 0) return search.with_first(0);
  std::vector<Permutation> out;
  for (std::size_t first = 0; first < g.size(); ++first) {
    auto part = search.with_first(static_cast<Generator>(first));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Permutation> graph_automorphisms_parallel(const CoxeterGraph& g) {
  AutomorphismSearch search(g);
  if (g.size() == 0) return search.with_first(0);
  std::vector<std::vector<Permutation>> parts(g.size());
  parallel_for(static_cast<std::int64_t>(g.size()),
               [&](std::int64_t first) { parts[first] = search.with_first(static_cast<Generator>(first)); });
  std::vector<Permutation> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::optional<FiniteGroupTable> enumerate_group_serial(const WordEngine& engine, const GeneratorSet& x,
                                                       std::size_t cap) {
  if (cap < 1) throw PreconditionError("enumeration cap must be at least 1");
  Enumeration e = start_enumeration(engine, x);
  const auto& gens = e.table.generators;
  for (std::size_t head = 0; head < e.handles.size(); ++head) {
    for (Generator s : gens) {
      if (!e.record(head, engine.multiply(e.handles[head], s), cap)) return std::nullopt;
    }
  }
  return std::move(e.table);
}

std::optional<FiniteGroupTable> enumerate_group_parallel(const WordEngine& engine, const GeneratorSet& x,
                                                         std::size_t cap) {
  if (cap < 1) throw PreconditionError("enumeration cap must be at least 1");
  Enumeration e = start_enumeration(engine, x);
  const auto& gens = e.table.generators;
  const std::size_t k = gens.size();
  std::size_t lo = 0;
  while (lo < e.handles.size()) {
    const std::size_t hi = e.handles.size();
    // Products of the whole level in parallel, then ids in serial order.
    std::vector<Element> products((hi - lo) * k);
    parallel_for(static_cast<std::int64_t>(products.size()), [&](std::int64_t i) {
      const std::size_t src = lo + static_cast<std::size_t>(i) / k;
      products[i] = engine.multiply(e.handles[src], gens[static_cast<std::size_t>(i) % k]);
    });
    for (std::size_t i = 0; i < products.size(); ++i) {
      if (!e.record(lo + i / k, products[i], cap)) return std::nullopt;
    }
    lo = hi;
  }
  return std::move(e.table);
}

std::uint64_t hom_count_serial(const CoxeterGraph& g, const GeneratorSet& domain, unsigned r) {
  const HomProblem p = hom_problem(g, domain, r);
  const std::uint64_t total = std::uint64_t{1} << p.width;
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) count += p.satisfied(code);
  return count;
}

std::uint64_t hom_count_parallel(const CoxeterGraph& g, const GeneratorSet& domain, unsigned r) {
  const HomProblem p = hom_problem(g, domain, r);
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << p.width);
  std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (std::int64_t code = 0; code < total; ++code) count += p.satisfied(static_cast<std::uint64_t>(code));
  return count;
}

std::optional<std::uint64_t> aut_order_serial(const FiniteGroupTable& t, const CoxeterGraph& g,
                                              std::uint64_t budget) {
  ImageSearch search(t, g, budget);
  std::atomic<std::uint64_t> spent{0};
  if (t.rank() == 0) return search.count_with_first(0, spent);
  std::uint64_t total = 0;
  for (std::size_t first = 0; first < search.candidates().size(); ++first) {
    auto part = search.count_with_first(first, spent);
    if (!part) return std::nullopt;
    total += *part;
  }
  return total;
}

std::optional<std::uint64_t> aut_order_parallel(const FiniteGroupTable& t, const CoxeterGraph& g,
                                                std::uint64_t budget) {
  ImageSearch search(t, g, budget);
  std::atomic<std::uint64_t> spent{0};
  if (t.rank() == 0) return search.count_with_first(0, spent);
  const std::size_t n = search.candidates().size();
  std::vector<std::optional<std::uint64_t>> parts(n);
  parallel_for(static_cast<std::int64_t>(n), [&](std::int64_t first) {
    if (search.exhausted(spent)) return;
    parts[first] = search.count_with_first(static_cast<std::size_t>(first), spent);
  });
  std::uint64_t total = 0;
  for (const auto& part : parts) {
    if (!part) return std::nullopt;
    total += *part;
  }
  return total;
}

}  // namespace coxeter::kernels
