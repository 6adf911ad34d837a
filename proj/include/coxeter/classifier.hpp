#ifndef COXETER_CLASSIFIER_HPP_
#define COXETER_CLASSIFIER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "coxeter/catalog.hpp"
#include "coxeter/graph.hpp"

namespace coxeter {

// A connected component of the graph: its vertex set (ascending indices) and
// the induced subgraph, reindexed in the same order.
struct Component {
  std::vector<Generator> vertices;
  CoxeterGraph induced;

  std::size_t size() const { return vertices.size(); }
  bool contains(Generator s) const;
};

struct ComponentType {
  ComponentKind kind = ComponentKind::Generic;
  std::string label;  // empty for generic components

  friend bool operator==(const ComponentType&, const ComponentType&) = default;
};

std::string to_string(const ComponentType& t);

struct ClassifiedComponent {
  Component component;
  ComponentType type;
};

enum class Bin { Generic, Affine, Spherical };

std::string to_string(Bin bin);

// W = W_gen x W_aff x W_sph. Each list is ordered by smallest generator.
struct Tripartition {
  std::size_t generator_count = 0;
  std::vector<ClassifiedComponent> generic;
  std::vector<ClassifiedComponent> affine;
  std::vector<ClassifiedComponent> spherical;

  const std::vector<ClassifiedComponent>& bin(Bin b) const;
  // Union of the vertex sets of one bin.
  GeneratorSet generators(Bin b) const;
  Bin bin_of(Generator s) const;
  std::size_t component_count() const { return generic.size() + affine.size() + spherical.size(); }
};

// Components in order of their smallest generator index.
std::vector<Component> connected_components(const CoxeterGraph& g);

// Exact classification by diagram isomorphism against the catalog: spherical
// first, then affine, otherwise generic.
ComponentType classify_component(const Component& c);
ComponentType classify_connected_graph(const CoxeterGraph& connected);

Tripartition tripartition(const CoxeterGraph& g);

// Bond-preserving bijection a -> b (iso[i] is the image of a's vertex i),
// found by backtracking with degree and incident-bond pruning.
std::optional<Permutation> find_diagram_isomorphism(const CoxeterGraph& a, const CoxeterGraph& b);

struct DefinitenessSignature {
  double min_eigenvalue = 0.0;
  std::size_t zero_count = 0;
  std::vector<double> eigenvalues;  // ascending
};

inline constexpr std::size_t kMaxSignatureDimension = 64;

// Eigenvalues of the restricted Gram matrix; |lambda| <= tolerance counts as
// zero. Throws PreconditionError for components above 64 vertices.
DefinitenessSignature definiteness_signature(const Component& c, double tolerance = kGramTolerance);
DefinitenessSignature definiteness_signature(const CoxeterGraph& g, double tolerance = kGramTolerance);

// Kind implied by the numeric signature alone: positive definite ->
// spherical, positive semidefinite with a kernel -> affine, else generic.
ComponentKind numeric_kind(const DefinitenessSignature& sig, double tolerance = kGramTolerance);

}  // namespace coxeter

#endif  // COXETER_CLASSIFIER_HPP_
