#include "coxeter/instances.hpp"

#include <algorithm>

#include "coxeter/catalog.hpp"
#include "coxeter/classifier.hpp"
#include "coxeter/errors.hpp"

namespace coxeter {

CoxeterGraph disjoint_union(const std::vector<CoxeterGraph>& parts) {
  std::vector<std::string> names;
  std::vector<Bond> bonds;
  for (const auto& part : parts) {
    const auto offset = static_cast<Generator>(names.size());
    for (std::size_t i = 0; i < part.size(); ++i) names.push_back("s" + std::to_string(names.size() + 1));
    for (const auto& [pair, m] : part.edges()) {
      bonds.push_back({static_cast<Generator>(offset + pair.first), static_cast<Generator>(offset + pair.second), m});
    }
  }
  return CoxeterGraph(std::move(names), bonds);
}

std::string tripartition_example_text() {
  return "gens: s1 s2 s3 s4 s5 s6 s7 s8 s9 s10\n"
         "bond: s1 s2 inf\n"
         "bond: s3 s4 3\n"
         "bond: s3 s5 3\n"
         "bond: s4 s5 3\n"
         "bond: s6 s7 4\n"
         "bond: s6 s8 4\n"
         "bond: s7 s8 4\n"
         "bond: s9 s10 3\n";
}

CoxeterGraph tripartition_example() { return parse_graph(tripartition_example_text()); }

namespace {

template <class T>
const T& pick(Rng& rng, const std::vector<T>& pool) {
  std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
  return pool[d(rng)];
}

}  // namespace

CoxeterGraph random_connected_graph(Rng& rng, std::size_t vertices, const std::vector<BondValue>& edge_pool,
                                    const std::vector<BondValue>& pair_pool) {
  if (vertices == 0) throw PreconditionError("random graph needs at least one vertex");
  if (edge_pool.empty() || pair_pool.empty()) throw PreconditionError("empty bond pool");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vertices; ++i) names.push_back("s" + std::to_string(i + 1));
  std::vector<std::vector<bool>> tree(vertices, std::vector<bool>(vertices, false));
  std::vector<Bond> bonds;
  for (std::size_t v = 1; v < vertices; ++v) {
    std::uniform_int_distribution<std::size_t> d(0, v - 1);
    const std::size_t u = d(rng);
    tree[u][v] = tree[v][u] = true;
    bonds.push_back({static_cast<Generator>(u), static_cast<Generator>(v), pick(rng, edge_pool)});
  }
  for (std::size_t u = 0; u < vertices; ++u) {
    for (std::size_t v = u + 1; v < vertices; ++v) {
      if (!tree[u][v]) bonds.push_back({static_cast<Generator>(u), static_cast<Generator>(v), pick(rng, pair_pool)});
    }
  }
  return CoxeterGraph(std::move(names), bonds);
}

std::vector<BondValue> bond_pool(unsigned max_m, bool with_commuting) {
  std::vector<BondValue> pool;
  if (with_commuting) pool.push_back(BondValue::finite(2));
  for (unsigned m = 3; m <= max_m; ++m) pool.push_back(BondValue::finite(m));
  pool.push_back(BondValue::infinity());
  return pool;
}

CoxeterGraph random_graph_with_center_rank(Rng& rng, std::size_t max_infinite_part, std::size_t central) {
  std::vector<CoxeterGraph> parts;
  std::uniform_int_distribution<std::size_t> total_dist(0, max_infinite_part);
  std::size_t remaining = total_dist(rng);
  const auto edges = bond_pool(6, false);
  const auto pairs = bond_pool(6, true);
  while (remaining >= 2) {
    std::uniform_int_distribution<std::size_t> size_dist(2, std::min<std::size_t>(4, remaining));
    const std::size_t k = size_dist(rng);
    CoxeterGraph part = random_connected_graph(rng, k, edges, pairs);
    if (classify_connected_graph(part).kind == ComponentKind::Spherical) continue;
    parts.push_back(std::move(part));
    remaining -= k;
  }
  // Longest element central: A_1, B_2, I_2(6). Not central: A_2, I_2(5).
  const std::vector<CoxeterGraph> with_center{catalog::type_a(1), catalog::type_b(2), catalog::type_i2(6)};
  const std::vector<CoxeterGraph> without_center{catalog::type_a(2), catalog::type_i2(5)};
  for (std::size_t i = 0; i < central; ++i) parts.push_back(pick(rng, with_center));
  if (std::bernoulli_distribution(0.5)(rng)) parts.push_back(pick(rng, without_center));
  CoxeterGraph g = disjoint_union(parts);
  Permutation perm(g.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<Generator>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  return permute_generators(g, perm);
}

Word random_word(Rng& rng, const std::vector<Generator>& alphabet, std::size_t max_length) {
  Word w;
  if (alphabet.empty()) return w;
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) w.letters.push_back(pick(rng, alphabet));
  return w;
}

GeneratorSet random_subset(Rng& rng, const GeneratorSet& from) {
  GeneratorSet out(from.universe());
  std::bernoulli_distribution coin(0.5);
  for (Generator s : from.members()) {
    if (coin(rng)) out.insert(s);
  }
  return out;
}

}  // namespace coxeter
