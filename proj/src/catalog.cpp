#include "coxeter/catalog.hpp"

#include <stdexcept>

#include "coxeter/errors.hpp"

namespace coxeter {

std::string to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::Spherical: return "spherical";
    case ComponentKind::Affine: return "affine";
    case ComponentKind::Generic: return "generic";
  }
  return "generic";
}

namespace catalog {
namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("s" + std::to_string(i));
  return names;
}

Bond edge(unsigned a, unsigned b, unsigned m) {
  return {static_cast<Generator>(a), static_cast<Generator>(b),
          m == 0 ? BondValue::infinity() : BondValue::finite(m)};
}

// Path 0-1-...-(n-1) with the given bond values (size n - 1).
CoxeterGraph path(std::size_t n, const std::vector<unsigned>& values) {
  std::vector<Bond> bonds;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    bonds.push_back(edge(static_cast<unsigned>(i), static_cast<unsigned>(i + 1), values.at(i)));
  }
  return CoxeterGraph(default_names(n), bonds);
}

// Star-shaped tree T_{p,q,r}: a centre with three arms of p, q, r vertices.
CoxeterGraph tee(unsigned p, unsigned q, unsigned r) {
  std::vector<Bond> bonds;
  unsigned next = 1;
  for (unsigned arm : {p, q, r}) {
    unsigned prev = 0;
    for (unsigned i = 0; i < arm; ++i) {
      bonds.push_back(edge(prev, next, 3));
      prev = next++;
    }
  }
  return CoxeterGraph(default_names(next), bonds);
}

void require(bool ok, const char* what) {
  if (!ok) throw PreconditionError(what);
}

const std::string kTilde = "\xCC\x83";  // U+0303 COMBINING TILDE

}  // namespace

CoxeterGraph type_a(unsigned n) {
  require(n >= 1, "A_n needs n >= 1");
  return path(n, std::vector<unsigned>(n > 0 ? n - 1 : 0, 3));
}

CoxeterGraph type_b(unsigned n) {
  require(n >= 2, "B_n needs n >= 2");
  std::vector<unsigned> v(n - 1, 3);
  v.back() = 4;
  return path(n, v);
}

CoxeterGraph type_d(unsigned n) {
  require(n >= 4, "D_n needs n >= 4");
  return tee(1, 1, n - 3);
}

CoxeterGraph type_e(unsigned n) {
  require(n >= 6 && n <= 8, "E_n needs 6 <= n <= 8");
  return tee(1, 2, n - 4);
}

CoxeterGraph type_f4() { return path(4, {3, 4, 3}); }

CoxeterGraph type_h(unsigned n) {
  require(n == 3 || n == 4, "H_n needs n in {3, 4}");
  std::vector<unsigned> v(n - 1, 3);
  v.front() = 5;
  return path(n, v);
}

CoxeterGraph type_i2(unsigned m) {
  require(m == 0 || m >= 3, "I_2(m) needs m >= 3");
  return path(2, {m});
}

CoxeterGraph affine_a(unsigned n) {
  require(n >= 1, "affine A_n needs n >= 1");
  if (n == 1) return path(2, {0});
  std::vector<Bond> bonds;
  for (unsigned i = 0; i <= n; ++i) bonds.push_back(edge(i, (i + 1) % (n + 1), 3));
  return CoxeterGraph(default_names(n + 1), bonds);
}

CoxeterGraph affine_b(unsigned n) {
  require(n >= 3, "affine B_n needs n >= 3");
  // Fork 0,1 -> 2, then a path 2-...-n ending in a 4.
  std::vector<Bond> bonds{edge(0, 2, 3), edge(1, 2, 3)};
  for (unsigned i = 2; i < n; ++i) bonds.push_back(edge(i, i + 1, i + 1 == n ? 4 : 3));
  return CoxeterGraph(default_names(n + 1), bonds);
}

CoxeterGraph affine_c(unsigned n) {
  require(n >= 2, "affine C_n needs n >= 2");
  std::vector<unsigned> v(n, 3);
  v.front() = 4;
  v.back() = 4;
  return path(n + 1, v);
}

CoxeterGraph affine_d(unsigned n) {
  require(n >= 4, "affine D_n needs n >= 4");
  // Forks at both ends: 0,1 -> 2 ... (n-2) <- n-1, n.
  std::vector<Bond> bonds{edge(0, 2, 3), edge(1, 2, 3)};
  for (unsigned i = 2; i + 2 < n; ++i) bonds.push_back(edge(i, i + 1, 3));
  bonds.push_back(edge(n - 2, n - 1, 3));
  bonds.push_back(edge(n - 2, n, 3));
  return CoxeterGraph(default_names(n + 1), bonds);
}

CoxeterGraph affine_e(unsigned n) {
  require(n >= 6 && n <= 8, "affine E_n needs 6 <= n <= 8");
  switch (n) {
    case 6: return tee(2, 2, 2);
    case 7: return tee(1, 3, 3);
    default: return tee(1, 2, 5);
  }
}

CoxeterGraph affine_f4() { return path(5, {3, 3, 4, 3}); }

CoxeterGraph affine_g2() { return path(3, {3, 6}); }

std::string spherical_label(char family, unsigned n) {
  return std::string(1, family) + "_" + std::to_string(n);
}

std::string dihedral_label(unsigned m) {
  if (m == 3) return "A_2";
  if (m == 4) return "B_2";
  return "I_2(" + std::to_string(m) + ")";
}

std::string affine_label(char family, unsigned n) {
  return std::string(1, family) + kTilde + "_" + std::to_string(n);
}

std::vector<Entry> entries_up_to_rank(unsigned max_rank, unsigned max_dihedral) {
  std::vector<Entry> out;
  auto sph = [&](std::string label, CoxeterGraph g) {
    out.push_back({ComponentKind::Spherical, std::move(label), std::move(g)});
  };
  auto aff = [&](std::string label, CoxeterGraph g) {
    out.push_back({ComponentKind::Affine, std::move(label), std::move(g)});
  };
  for (unsigned n = 1; n <= max_rank; ++n) sph(spherical_label('A', n), type_a(n));
  for (unsigned n = 2; n <= max_rank; ++n) sph(spherical_label('B', n), type_b(n));
  for (unsigned n = 4; n <= max_rank; ++n) sph(spherical_label('D', n), type_d(n));
  for (unsigned n = 6; n <= std::min(8u, max_rank); ++n) sph(spherical_label('E', n), type_e(n));
  if (max_rank >= 4) sph("F_4", type_f4());
  for (unsigned n = 3; n <= std::min(4u, max_rank); ++n) sph(spherical_label('H', n), type_h(n));
  if (max_rank >= 2) {
    for (unsigned m = 5; m <= max_dihedral; ++m) sph(dihedral_label(m), type_i2(m));
  }

  for (unsigned n = 1; n <= max_rank; ++n) aff(affine_label('A', n), affine_a(n));
  for (unsigned n = 3; n <= max_rank; ++n) aff(affine_label('B', n), affine_b(n));
  for (unsigned n = 2; n <= max_rank; ++n) aff(affine_label('C', n), affine_c(n));
  for (unsigned n = 4; n <= max_rank; ++n) aff(affine_label('D', n), affine_d(n));
  for (unsigned n = 6; n <= std::min(8u, max_rank); ++n) aff(affine_label('E', n), affine_e(n));
  if (max_rank >= 4) aff(affine_label('F', 4), affine_f4());
  if (max_rank >= 2) aff(affine_label('G', 2), affine_g2());
  return out;
}

std::vector<Entry> entries_with_vertices(std::size_t vertices, unsigned dihedral_m) {
  std::vector<Entry> out;
  if (vertices == 0 || vertices > kMaxGenerators) return out;
  const auto k = static_cast<unsigned>(vertices);
  auto sph = [&](std::string label, CoxeterGraph g) {
    out.push_back({ComponentKind::Spherical, std::move(label), std::move(g)});
  };
  auto aff = [&](std::string label, CoxeterGraph g) {
    out.push_back({ComponentKind::Affine, std::move(label), std::move(g)});
  };

  sph(spherical_label('A', k), type_a(k));
  if (k >= 2) sph(spherical_label('B', k), type_b(k));
  if (k >= 4) sph(spherical_label('D', k), type_d(k));
  if (k >= 6 && k <= 8) sph(spherical_label('E', k), type_e(k));
  if (k == 4) sph("F_4", type_f4());
  if (k == 3 || k == 4) sph(spherical_label('H', k), type_h(k));
  if (k == 2 && dihedral_m >= 5) sph(dihedral_label(dihedral_m), type_i2(dihedral_m));

  if (k >= 2) {
    const unsigned n = k - 1;
    aff(affine_label('A', n), affine_a(n));
    if (n >= 3) aff(affine_label('B', n), affine_b(n));
    if (n >= 2) aff(affine_label('C', n), affine_c(n));
    if (n >= 4) aff(affine_label('D', n), affine_d(n));
    if (n >= 6 && n <= 8) aff(affine_label('E', n), affine_e(n));
    if (n == 4) aff(affine_label('F', 4), affine_f4());
    if (n == 2) aff(affine_label('G', 2), affine_g2());
  }
  return out;
}

unsigned long long spherical_order(const std::string& label) {
  auto factorial = [](unsigned n) {
    unsigned long long f = 1;
    for (unsigned i = 2; i <= n; ++i) {
      if (f > ~0ULL / i) return 0ULL;
      f *= i;
    }
    return f;
  };
  if (label == "F_4") return 1152;
  if (label == "H_3") return 120;
  if (label == "H_4") return 14400;
  if (label == "E_6") return 51840;
  if (label == "E_7") return 2903040;
  if (label == "E_8") return 696729600;
  if (label.starts_with("I_2(")) return 2ULL * std::stoull(label.substr(4));
  if (label.size() < 3 || label[1] != '_') return 0;
  const unsigned n = static_cast<unsigned>(std::stoul(label.substr(2)));
  switch (label[0]) {
    case 'A': return factorial(n + 1);
    case 'B': {
      unsigned long long f = factorial(n);
      if (n >= 64 || f == 0 || f > (~0ULL >> n)) return 0;
      return f << n;
    }
    case 'D': {
      unsigned long long f = factorial(n);
      if (n >= 64 || f == 0 || f > (~0ULL >> (n - 1))) return 0;
      return f << (n - 1);
    }
    default: return 0;
  }
}

}  // namespace catalog
}  // namespace coxeter
