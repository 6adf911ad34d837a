#ifndef COXETER_AUT_HPP_
#define COXETER_AUT_HPP_

// Structure of Aut(W):
//
//   Aut(W) = Ker(Phi) x| (Aut(W_gen) x Aut(W_aff))
//   Ker(Phi) = Ker(Psi) x| Aut(W_sph)
//   Ker(Psi) = Hom(W_gen x W_aff, Z(W))
//
// with exact orders where they can be computed, plus the resulting
// characterizations of finite and narrow normal subgroups and the
// almost lcH-slender verdicts.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "coxeter/classifier.hpp"
#include "coxeter/oracle.hpp"
#include "coxeter/structure.hpp"
#include "coxeter/word_engine.hpp"

namespace coxeter {

// Exact group orders; Ker(Psi) alone can exceed 64 bits.
using BigCount = boost::multiprecision::cpp_int;

// Components of the odd graph (edges: finite odd bonds) on the generic and
// affine generators.
std::size_t odd_component_count(const CoxeterGraph& g, const Tripartition& trip);

// |Hom(W_gen x W_aff, (Z/2)^r)| = (2^r)^c with c = odd_component_count.
// A homomorphism to an elementary abelian 2-group is constant on odd-graph
// components and otherwise free.
BigCount hom_count(const CoxeterGraph& g, const Tripartition& trip, std::size_t center_rank);

struct AnalysisOptions {
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  std::size_t aut_cap = kDefaultAutCap;
  std::uint64_t aut_budget = kDefaultAutBudget;
  std::size_t diagram_automorphism_cap = kDefaultAutomorphismCap;
  std::filesystem::path cache_dir;  // empty: no table cache
};

struct AffineFactor {
  ClassifiedComponent component;
  std::optional<std::uint64_t> diagram_automorphisms;  // |Aut(Gamma_i)|
  std::string structure;                              // "Aut(W_i) = W_i x| Aut(Gamma_i)"
};

struct AutReport {
  std::size_t center_rank = 0;
  std::size_t odd_components = 0;
  BigCount ker_psi_order;
  std::optional<std::uint64_t> spherical_order;  // |W_sph| when enumerated
  std::optional<std::uint64_t> aut_sph_order;
  std::optional<BigCount> ker_phi_order;
  std::vector<AffineFactor> affine_factors;
  std::size_t affine_virtual_rank = 0;  // sum of |X_i| - 1 over affine components
  std::vector<ClassifiedComponent> generic_factors;
  std::string narrative;
  // Why a field is missing (cap hits).
  std::vector<std::string> diagnostics;
};

// Aut(W_sph) is computed on the whole finite group W_sph, not factor by
// factor. Cap hits leave the corresponding fields empty.
AutReport aut_report(const WordEngine& engine, const Tripartition& trip, const AnalysisOptions& options = {});

// Normal subgroups H of Aut(W): H finite iff H <= Ker(Phi); H narrow iff
// H <= Ker(Phi) x| Aut(W_aff), and then H is virtually Z^m with m at most the
// affine virtual rank.
struct AutNormalReport {
  std::optional<BigCount> finite_container_order;  // |Ker(Phi)|
  std::size_t narrow_virtual_rank_bound = 0;
  bool no_finite_normal = false;  // W_sph = {1}
  bool no_narrow_normal = false;  // W_sph = W_aff = {1}
  std::vector<std::string> statements;
};

AutNormalReport aut_normal_characterization(const Tripartition& trip, const AutReport& report);

enum class Tristate { False, True, Unknown };

std::string to_string(Tristate t);

struct SlenderVerdict {
  bool w_almost_slender = false;
  // Only the implication W_sph = {1} => Aut(W) almost lcH-slender is known,
  // so the negative case is Unknown rather than False.
  Tristate aut_almost_slender = Tristate::Unknown;
};

SlenderVerdict slender_verdict(const Tripartition& trip);

}  // namespace coxeter

#endif  // COXETER_AUT_HPP_
