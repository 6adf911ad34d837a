#include "coxeter/aut.hpp"

#include <numeric>

#include "coxeter/errors.hpp"

namespace coxeter {

std::size_t odd_component_count(const CoxeterGraph& g, const Tripartition& trip) {
  GeneratorSet domain = trip.generators(Bin::Generic);
  for (Generator s : trip.generators(Bin::Affine).members()) domain.insert(s);
  const auto members = domain.members();
  std::vector<std::size_t> parent(members.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = members.size();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const BondValue m = g.bond(members[i], members[j]);
      if (!m.is_finite() || !m.is_odd()) continue;
      const std::size_t a = find(i), b = find(j);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components;
}

BigCount hom_count(const CoxeterGraph& g, const Tripartition& trip, std::size_t center_rank) {
  return BigCount(1) << (center_rank * odd_component_count(g, trip));
}

namespace {

std::string big_to_string(const BigCount& n) { return n.str(); }

std::string order_or_unknown(const std::optional<std::uint64_t>& n) {
  return n ? std::to_string(*n) : std::string("unknown");
}

}  // namespace

AutReport aut_report(const WordEngine& engine, const Tripartition& trip, const AnalysisOptions& options) {
  const CoxeterGraph& g = engine.graph();
  AutReport r;
  r.center_rank = center(engine, trip).rank;
  r.odd_components = odd_component_count(g, trip);
  r.ker_psi_order = BigCount(1) << (r.center_rank * r.odd_components);

  const GeneratorSet sph = trip.generators(Bin::Spherical);
  if (auto table = enumerate_group_cached(engine, sph, options.enumeration_cap, options.cache_dir)) {
    r.spherical_order = table->order();
    r.aut_sph_order = brute_aut_order(*table, g, options.aut_cap, options.aut_budget);
    if (!r.aut_sph_order) {
      r.diagnostics.push_back(table->order() > options.aut_cap
                                  ? "cap-aut: |W_sph| = " + std::to_string(table->order()) + " exceeds " +
                                        std::to_string(options.aut_cap) + "; Aut(W_sph) not computed"
                                  : "cap-aut: automorphism search exceeded its budget; Aut(W_sph) not computed");
    }
  } else {
    r.diagnostics.push_back("cap-enum: |W_sph| exceeds " + std::to_string(options.enumeration_cap) +
                            "; Aut(W_sph) not computed");
  }
  if (r.aut_sph_order) r.ker_phi_order = r.ker_psi_order * *r.aut_sph_order;

  for (const auto& cc : trip.affine) {
    AffineFactor f{cc, std::nullopt, "Aut(W_" + cc.type.label + ") ≅ W_" + cc.type.label + " ⋊ Aut(Γ_" +
                                         cc.type.label + ")"};
    if (auto autos = graph_automorphisms(cc.component.induced, options.diagram_automorphism_cap)) {
      f.diagram_automorphisms = autos->size();
    } else {
      r.diagnostics.push_back("cap-graph-aut: component " + cc.type.label +
                              " exceeds the diagram automorphism cap");
    }
    r.affine_virtual_rank += cc.component.size() - 1;
    r.affine_factors.push_back(std::move(f));
  }
  r.generic_factors = trip.generic;

  r.narrative = "Aut(W) ≅ (Hom(W_gen × W_aff, Z(W)) ⋊ Aut(W_sph)) ⋊ (Aut(W_gen) × Aut(W_aff)); "
                "|Z(W)| = 2^" + std::to_string(r.center_rank) +
                ", |Hom(W_gen × W_aff, Z(W))| = |Ker(Ψ)| = " + big_to_string(r.ker_psi_order) +
                ", |Aut(W_sph)| = " + order_or_unknown(r.aut_sph_order) +
                ", |Ker(Φ)| = " + (r.ker_phi_order ? big_to_string(*r.ker_phi_order) : "unknown") +
                "; Aut(W_aff) is virtually Z^" + std::to_string(r.affine_virtual_rank);
  return r;
}

AutNormalReport aut_normal_characterization(const Tripartition& trip, const AutReport& report) {
  AutNormalReport n;
  n.finite_container_order = report.ker_phi_order;
  n.narrow_virtual_rank_bound = report.affine_virtual_rank;
  n.no_finite_normal = trip.spherical.empty();
  n.no_narrow_normal = trip.spherical.empty() && trip.affine.empty();
  const std::string kphi = n.finite_container_order ? big_to_string(*n.finite_container_order) : "unknown";
  n.statements.push_back("a normal subgroup H of Aut(W) is finite iff H ≤ Ker(Φ), where |Ker(Φ)| = " + kphi);
  n.statements.push_back("H is narrow iff H ≤ Ker(Φ) ⋊ Aut(W_aff); then H is virtually Z^m with m ≤ " +
                         std::to_string(n.narrow_virtual_rank_bound));
  if (n.no_finite_normal) {
    n.statements.push_back("Aut(W) has no non-trivial finite normal subgroup, and H is narrow iff H ≤ Aut(W_aff)");
  }
  if (n.no_narrow_normal) n.statements.push_back("Aut(W) has no non-trivial narrow normal subgroup");
  if (trip.generic.empty() && trip.spherical.empty() && trip.affine.size() == 1) {
    const auto& c = trip.affine.front();
    n.statements.push_back("every non-trivial normal subgroup of Aut(W) is virtually Z^" +
                           std::to_string(c.component.size() - 1) + ", in particular narrow and infinite");
  }
  return n;
}

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::False: return "false";
    case Tristate::True: return "true";
    case Tristate::Unknown: return "unknown";
  }
  return "unknown";
}

SlenderVerdict slender_verdict(const Tripartition& trip) {
  SlenderVerdict v;
  v.w_almost_slender = trip.spherical.empty();
  v.aut_almost_slender = trip.spherical.empty() ? Tristate::True : Tristate::Unknown;
  return v;
}

}  // namespace coxeter
