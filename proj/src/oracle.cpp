#include "coxeter/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "coxeter/errors.hpp"
#include "coxeter/kernels.hpp"

namespace coxeter {

std::optional<std::size_t> FiniteGroupTable::local_index(Generator s) const {
  auto it = std::lower_bound(generators.begin(), generators.end(), s);
  if (it == generators.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - generators.begin());
}

namespace {

ElementId fold(const FiniteGroupTable& t, ElementId start, const std::string& key) {
  for (unsigned char c : key) start = t.right(start, *t.local_index(c));
  return start;
}

}  // namespace

ElementId FiniteGroupTable::element_of(const Word& w) const {
  ElementId id = 0;
  for (Generator s : w.letters) {
    auto j = local_index(s);
    if (!j) throw PreconditionError("letter outside the enumerated parabolic subgroup");
    id = right(id, *j);
  }
  return id;
}

ElementId FiniteGroupTable::product(ElementId a, ElementId b) const { return fold(*this, a, elements.at(b)); }

ElementId FiniteGroupTable::inverse(ElementId a) const {
  const std::string& key = elements.at(a);
  return fold(*this, 0, std::string(key.rbegin(), key.rend()));
}

ElementId FiniteGroupTable::left(std::size_t j, ElementId id) const { return fold(*this, right(0, j), elements.at(id)); }

std::uint32_t FiniteGroupTable::element_order(ElementId a) const {
  std::uint32_t k = 1;
  for (ElementId x = a; x != 0; x = product(x, a)) ++k;
  return k;
}

Word FiniteGroupTable::word(ElementId id) const {
  Word w;
  for (unsigned char c : elements.at(id)) w.letters.push_back(c);
  return w;
}

std::optional<FiniteGroupTable> enumerate_group(const WordEngine& engine, const GeneratorSet& x,
                                                std::size_t cap) {
  return kernels::enumerate_group_parallel(engine, x, cap);
}

std::vector<ElementId> brute_center(const FiniteGroupTable& t) {
  std::vector<ElementId> out;
  for (std::size_t id = 0; id < t.order(); ++id) {
    const auto z = static_cast<ElementId>(id);
    bool central = true;
    for (std::size_t j = 0; j < t.rank() && central; ++j) central = t.right(z, j) == t.left(j, z);
    if (central) out.push_back(z);
  }
  return out;
}

std::optional<std::uint64_t> brute_aut_order(const FiniteGroupTable& t, const CoxeterGraph& g,
                                             std::size_t cap, std::uint64_t budget) {
  if (t.order() > cap) return std::nullopt;
  return kernels::aut_order_parallel(t, g, budget);
}

std::uint64_t brute_hom_count(const CoxeterGraph& g, const GeneratorSet& domain, unsigned r) {
  if (domain.size() > kMaxHomCountDomain) {
    throw PreconditionError("homomorphism count limited to " + std::to_string(kMaxHomCountDomain) +
                            " domain generators");
  }
  if (std::size_t{r} * domain.size() > kMaxHomCountBits) {
    throw PreconditionError("homomorphism count limited to 2^" + std::to_string(kMaxHomCountBits) +
                            " assignments");
  }
  return kernels::hom_count_parallel(g, domain, r);
}

std::vector<ElementId> double_coset(const FiniteGroupTable& t, ElementId w, const GeneratorSet& x,
                                    const GeneratorSet& y) {
  std::vector<std::size_t> xs, ys;
  for (Generator s : x.members()) {
    auto j = t.local_index(s);
    if (!j) throw PreconditionError("X is not contained in the enumerated generators");
    xs.push_back(*j);
  }
  for (Generator s : y.members()) {
    auto j = t.local_index(s);
    if (!j) throw PreconditionError("Y is not contained in the enumerated generators");
    ys.push_back(*j);
  }
  std::vector<bool> seen(t.order(), false);
  std::vector<ElementId> coset{w};
  seen.at(w) = true;
  for (std::size_t head = 0; head < coset.size(); ++head) {
    const ElementId cur = coset[head];
    auto visit = [&](ElementId next) {
      if (!seen[next]) {
        seen[next] = true;
        coset.push_back(next);
      }
    };
    for (std::size_t j : xs) visit(t.left(j, cur));
    for (std::size_t j : ys) visit(t.right(cur, j));
  }
  return coset;
}

ElementId brute_xy_minimal(const FiniteGroupTable& t, ElementId w, const GeneratorSet& x,
                           const GeneratorSet& y) {
  const std::vector<ElementId> coset = double_coset(t, w, x, y);
  ElementId best = coset.front();
  bool tie = false;
  for (ElementId e : coset) {
    if (t.depth[e] < t.depth[best]) {
      best = e;
      tie = false;
    } else if (e != best && t.depth[e] == t.depth[best]) {
      tie = true;
    }
  }
  if (tie) throw InvariantViolation("double coset has two elements of minimal length");
  return best;
}

// Format:
//   coxeter-table 1
//   generators <k> <index>...
//   elements <n>
//   <n lines: generator indices of the canonical word, space separated>
//   mult <n*k>
//   <id> <j> <target>   (n*k lines)
void save_table(const FiniteGroupTable& t, std::ostream& out) {
  out << "coxeter-table 1\n";
  out << "generators " << t.rank();
  for (Generator s : t.generators) out << ' ' << s;
  out << "\nelements " << t.order() << '\n';
  for (const auto& key : t.elements) {
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) out << ' ';
      out << static_cast<unsigned>(static_cast<unsigned char>(key[i]));
    }
    out << '\n';
  }
  out << "mult " << t.mult.size() << '\n';
  for (std::size_t id = 0; id < t.order(); ++id) {
    for (std::size_t j = 0; j < t.rank(); ++j) out << id << ' ' << j << ' ' << t.right(static_cast<ElementId>(id), j) << '\n';
  }
}

FiniteGroupTable load_table(std::istream& in) {
  auto fail = [](const std::string& what) -> InputError { return InputError("table cache: " + what); };
  FiniteGroupTable t;
  std::string line, tag;
  if (!std::getline(in, line) || line != "coxeter-table 1") throw fail("bad header");
  std::size_t k = 0, n = 0, entries = 0;
  if (!std::getline(in, line)) throw fail("missing generators");
  {
    std::istringstream ls(line);
    if (!(ls >> tag >> k) || tag != "generators") throw fail("bad generators line");
    for (std::size_t i = 0; i < k; ++i) {
      unsigned s = 0;
      if (!(ls >> s) || s > kMaxGenerators) throw fail("bad generator index");
      t.generators.push_back(static_cast<Generator>(s));
    }
  }
  if (!std::getline(in, line)) throw fail("missing elements");
  {
    std::istringstream ls(line);
    if (!(ls >> tag >> n) || tag != "elements" || n == 0) throw fail("bad elements line");
  }
  for (std::size_t id = 0; id < n; ++id) {
    if (!std::getline(in, line)) throw fail("truncated element list");
    std::istringstream ls(line);
    std::string key;
    unsigned s = 0;
    while (ls >> s) {
      if (s > kMaxGenerators) throw fail("bad letter");
      key.push_back(static_cast<char>(s));
    }
    if (!t.index.emplace(key, static_cast<ElementId>(id)).second) throw fail("duplicate element");
    t.elements.push_back(std::move(key));
  }
  if (!t.elements.front().empty()) throw fail("element 0 is not the identity");
  if (!std::getline(in, line)) throw fail("missing mult");
  {
    std::istringstream ls(line);
    if (!(ls >> tag >> entries) || tag != "mult" || entries != n * k) throw fail("bad mult line");
  }
  t.mult.assign(n * k, 0);
  std::vector<bool> filled(n * k, false);
  for (std::size_t e = 0; e < entries; ++e) {
    std::size_t id = 0, j = 0, target = 0;
    if (!(in >> id >> j >> target) || id >= n || j >= k || target >= n) throw fail("bad mult triple");
    t.mult[id * k + j] = static_cast<ElementId>(target);
    filled[id * k + j] = true;
  }
  if (std::find(filled.begin(), filled.end(), false) != filled.end()) throw fail("incomplete mult");
  // Distances are recomputed by BFS rather than stored.
  t.depth.assign(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<ElementId> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t j = 0; j < k; ++j) {
      const ElementId next = t.right(queue[head], j);
      if (!seen[next]) {
        seen[next] = true;
        t.depth[next] = t.depth[queue[head]] + 1;
        queue.push_back(next);
      }
    }
  }
  if (queue.size() != n) throw fail("table is not connected");
  return t;
}

std::string table_cache_name(const CoxeterGraph& g, const GeneratorSet& x) {
  // FNV-1a over the serialized graph and the subset.
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ull;
  };
  for (unsigned char c : serialize_graph(g)) mix(c);
  mix('|');
  for (Generator s : x.members()) {
    for (unsigned char c : std::to_string(s)) mix(c);
    mix(',');
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("table-") + buf + ".txt";
}

std::optional<FiniteGroupTable> enumerate_group_cached(const WordEngine& engine, const GeneratorSet& x,
                                                       std::size_t cap,
                                                       const std::filesystem::path& cache_dir) {
  if (cache_dir.empty()) return enumerate_group(engine, x, cap);
  const auto path = cache_dir / table_cache_name(engine.graph(), x);
  if (std::ifstream in(path); in) {
    FiniteGroupTable t = load_table(in);
    if (t.generators != x.members()) throw InputError("table cache: generator mismatch in " + path.string());
    if (t.order() > cap) return std::nullopt;
    return t;
  }
  auto t = enumerate_group(engine, x, cap);
  if (t) {
    std::filesystem::create_directories(cache_dir);
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp);
      save_table(*t, out);
      if (!out) throw InputError("table cache: cannot write " + tmp);
    }
    std::filesystem::rename(tmp, path);
  }
  return t;
}

}  // namespace coxeter
