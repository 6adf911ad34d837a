#include "coxeter/classifier.hpp"

#include <algorithm>
#include <Eigen/Dense>
#include <numeric>
#include <queue>

#include "coxeter/errors.hpp"

namespace coxeter {

bool Component::contains(Generator s) const {
  return std::binary_search(vertices.begin(), vertices.end(), s);
}

std::string to_string(const ComponentType& t) {
  switch (t.kind) {
    case ComponentKind::Spherical: return "Spherical(" + t.label + ")";
    case ComponentKind::Affine: return "Affine(" + t.label + ")";
    case ComponentKind::Generic: return "Generic";
  }
  return "Generic";
}

std::string to_string(Bin bin) {
  switch (bin) {
    case Bin::Generic: return "generic";
    case Bin::Affine: return "affine";
    case Bin::Spherical: return "spherical";
  }
  return "generic";
}

const std::vector<ClassifiedComponent>& Tripartition::bin(Bin b) const {
  switch (b) {
    case Bin::Generic: return generic;
    case Bin::Affine: return affine;
    case Bin::Spherical: return spherical;
  }
  return generic;
}

GeneratorSet Tripartition::generators(Bin b) const {
  GeneratorSet out(generator_count);
  for (const auto& cc : bin(b)) {
    for (Generator s : cc.component.vertices) out.insert(s);
  }
  return out;
}

Bin Tripartition::bin_of(Generator s) const {
  for (Bin b : {Bin::Generic, Bin::Affine, Bin::Spherical}) {
    for (const auto& cc : bin(b)) {
      if (cc.component.contains(s)) return b;
    }
  }
  throw PreconditionError("generator index " + std::to_string(s) + " is not in the tripartition");
}

std::vector<Component> connected_components(const CoxeterGraph& g) {
  const std::size_t n = g.size();
  std::vector<int> label(n, -1);
  std::vector<Component> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (label[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Generator> verts;
    std::queue<Generator> q;
    q.push(static_cast<Generator>(start));
    label[start] = id;
    while (!q.empty()) {
      Generator v = q.front();
      q.pop();
      verts.push_back(v);
      for (std::size_t u = 0; u < n; ++u) {
        if (label[u] < 0 && !g.bond(v, static_cast<Generator>(u)).commutes() && u != v) {
          label[u] = id;
          q.push(static_cast<Generator>(u));
        }
      }
    }
    std::sort(verts.begin(), verts.end());
    Component c;
    c.induced = g.induced(verts);
    c.vertices = std::move(verts);
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

// Sort key for a vertex: its degree followed by its sorted incident bonds.
// Infinite bonds encode as 0 so they never collide with finite values.
std::vector<unsigned> vertex_signature(const CoxeterGraph& g, Generator v) {
  std::vector<unsigned> bonds;
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (u == v) continue;
    BondValue m = g.bond(v, static_cast<Generator>(u));
    if (m.commutes()) continue;
    bonds.push_back(m.is_infinite() ? 0u : m.order());
  }
  std::sort(bonds.begin(), bonds.end());
  bonds.insert(bonds.begin(), static_cast<unsigned>(bonds.size()));
  return bonds;
}

std::vector<unsigned> bond_multiset(const CoxeterGraph& g) {
  std::vector<unsigned> out;
  for (const auto& [pair, m] : g.edges()) out.push_back(m.is_infinite() ? 0u : m.order());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<Permutation> find_diagram_isomorphism(const CoxeterGraph& a, const CoxeterGraph& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  if (n == 0) return Permutation{};
  if (bond_multiset(a) != bond_multiset(b)) return std::nullopt;

  std::vector<std::vector<unsigned>> sig_a(n), sig_b(n);
  for (std::size_t v = 0; v < n; ++v) {
    sig_a[v] = vertex_signature(a, static_cast<Generator>(v));
    sig_b[v] = vertex_signature(b, static_cast<Generator>(v));
  }
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  // Visit a's vertices in BFS order so each new vertex is usually adjacent to
  // an already-mapped one, which prunes hardest.
  std::vector<Generator> order;
  {
    std::vector<bool> seen(n, false);
    for (std::size_t root = 0; root < n; ++root) {
      if (seen[root]) continue;
      std::queue<Generator> q;
      q.push(static_cast<Generator>(root));
      seen[root] = true;
      while (!q.empty()) {
        Generator v = q.front();
        q.pop();
        order.push_back(v);
        for (std::size_t u = 0; u < n; ++u) {
          if (!seen[u] && !a.commute(v, static_cast<Generator>(u))) {
            seen[u] = true;
            q.push(static_cast<Generator>(u));
          }
        }
      }
    }
  }

  Permutation map(n, 0);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const Generator v = order[depth];
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand] || sig_b[cand] != sig_a[v]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Generator w = order[k];
        ok = a.bond(v, w) == b.bond(static_cast<Generator>(cand), map[w]);
      }
      if (!ok) continue;
      map[v] = static_cast<Generator>(cand);
      used[cand] = true;
      if (self(self, depth + 1)) return true;
      used[cand] = false;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return map;
}

ComponentType classify_connected_graph(const CoxeterGraph& connected) {
  const std::size_t k = connected.size();
  unsigned dihedral_m = 0;
  if (k == 2) {
    BondValue m = connected.bond(0, 1);
    if (m.is_finite()) dihedral_m = m.order();
  }
  // entries_with_vertices lists spherical diagrams before affine ones.
  for (auto& entry : catalog::entries_with_vertices(k, dihedral_m)) {
    if (find_diagram_isomorphism(connected, entry.diagram)) {
      return {entry.kind, std::move(entry.label)};
    }
  }
  return {ComponentKind::Generic, {}};
}

ComponentType classify_component(const Component& c) { return classify_connected_graph(c.induced); }

Tripartition tripartition(const CoxeterGraph& g) {
  Tripartition t;
  t.generator_count = g.size();
  for (auto& c : connected_components(g)) {
    ComponentType type = classify_component(c);
    ClassifiedComponent cc{std::move(c), type};
    switch (type.kind) {
      case ComponentKind::Generic: t.generic.push_back(std::move(cc)); break;
      case ComponentKind::Affine: t.affine.push_back(std::move(cc)); break;
      case ComponentKind::Spherical: t.spherical.push_back(std::move(cc)); break;
    }
  }
  return t;
}

DefinitenessSignature definiteness_signature(const CoxeterGraph& g, double tolerance) {
  const std::size_t n = g.size();
  if (n > kMaxSignatureDimension) {
    throw PreconditionError("definiteness signature limited to " +
                            std::to_string(kMaxSignatureDimension) + " generators");
  }
  DefinitenessSignature sig;
  if (n == 0) return sig;
  const GramMatrix gm = gram_matrix(g);
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = gm(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw InvariantViolation("symmetric eigensolver failed");
  const auto& ev = solver.eigenvalues();
  sig.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  sig.min_eigenvalue = sig.eigenvalues.front();
  sig.zero_count = static_cast<std::size_t>(std::count_if(
      sig.eigenvalues.begin(), sig.eigenvalues.end(),
      [&](double x) { return std::abs(x) <= tolerance; }));
  return sig;
}

DefinitenessSignature definiteness_signature(const Component& c, double tolerance) {
  return definiteness_signature(c.induced, tolerance);
}

ComponentKind numeric_kind(const DefinitenessSignature& sig, double tolerance) {
  if (sig.min_eigenvalue > tolerance) return ComponentKind::Spherical;
  if (sig.min_eigenvalue >= -tolerance) return ComponentKind::Affine;
  return ComponentKind::Generic;
}

}  // namespace coxeter
