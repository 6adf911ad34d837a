#ifndef COXETER_CATALOG_HPP_
#define COXETER_CATALOG_HPP_

// Connected spherical and affine Coxeter diagrams, built programmatically.
// Generators are named s1..sN along the diagram.

#include <string>
#include <vector>

#include "coxeter/graph.hpp"

namespace coxeter {

enum class ComponentKind { Spherical, Affine, Generic };

std::string to_string(ComponentKind kind);

namespace catalog {

// Spherical families.
CoxeterGraph type_a(unsigned n);   // n >= 1, path
CoxeterGraph type_b(unsigned n);   // n >= 2, path ending in a 4
CoxeterGraph type_d(unsigned n);   // n >= 4, fork
CoxeterGraph type_e(unsigned n);   // n in {6, 7, 8}
CoxeterGraph type_f4();
CoxeterGraph type_h(unsigned n);   // n in {3, 4}
CoxeterGraph type_i2(unsigned m);  // m >= 3, or m == 0 for infinity

// Affine families; n is the subscript, the diagram has n + 1 vertices.
CoxeterGraph affine_a(unsigned n);  // n >= 1 (n == 1 is the infinite bond)
CoxeterGraph affine_b(unsigned n);  // n >= 3
CoxeterGraph affine_c(unsigned n);  // n >= 2
CoxeterGraph affine_d(unsigned n);  // n >= 4
CoxeterGraph affine_e(unsigned n);  // n in {6, 7, 8}
CoxeterGraph affine_f4();
CoxeterGraph affine_g2();

// Canonical label strings. Affine labels carry a combining tilde (U+0303)
// after the family letter, e.g. "Ã_2".
std::string spherical_label(char family, unsigned n);
std::string dihedral_label(unsigned m);  // I_2(3) -> A_2, I_2(4) -> B_2
std::string affine_label(char family, unsigned n);

struct Entry {
  ComponentKind kind;
  std::string label;
  CoxeterGraph diagram;
};

// Every spherical and affine diagram whose subscript is at most max_rank,
// plus I_2(m) for 5 <= m <= max_dihedral (I_2(3), I_2(4) are A_2, B_2).
std::vector<Entry> entries_up_to_rank(unsigned max_rank, unsigned max_dihedral);

// Catalog diagrams with exactly `vertices` vertices. A two-vertex component
// with a finite bond m >= 5 additionally yields I_2(m); pass dihedral_m = 0
// when not applicable.
std::vector<Entry> entries_with_vertices(std::size_t vertices, unsigned dihedral_m);

// Classical order of the spherical group with the given label, or 0 when the
// label is unknown or the order does not fit 64 bits.
unsigned long long spherical_order(const std::string& label);

}  // namespace catalog
}  // namespace coxeter

#endif  // COXETER_CATALOG_HPP_
