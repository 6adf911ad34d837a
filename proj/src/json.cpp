#include "coxeter/json.hpp"

#include <limits>

namespace coxeter {

Json count_json(const BigCount& n) {
  if (n >= 0 && n <= std::numeric_limits<std::uint64_t>::max()) return n.convert_to<std::uint64_t>();
  return n.str();
}

Json names_json(const CoxeterGraph& g, const std::vector<Generator>& gens) {
  Json out = Json::array();
  for (Generator s : gens) out.push_back(g.name(s));
  return out;
}

Json component_json(const CoxeterGraph& g, const ClassifiedComponent& cc) {
  Json out;
  out["kind"] = to_string(cc.type.kind);
  out["label"] = cc.type.kind == ComponentKind::Generic ? Json(nullptr) : Json(cc.type.label);
  out["vertices"] = names_json(g, cc.component.vertices);
  return out;
}

Json tripartition_json(const CoxeterGraph& g, const Tripartition& trip) {
  Json out;
  for (Bin b : {Bin::Generic, Bin::Affine, Bin::Spherical}) {
    Json list = Json::array();
    for (const auto& cc : trip.bin(b)) list.push_back(component_json(g, cc));
    out[to_string(b)] = std::move(list);
  }
  return out;
}

Json reduced_word_json(const CoxeterGraph& g, const ReducedWord& rw) {
  Json out;
  out["reduced"] = format_word(g, rw.letters);
  out["length"] = rw.length();
  out["canonical"] = format_word(g, rw.canonical);
  out["commutation_classes"] = rw.commutation_classes;
  return out;
}

Json center_json(const CoxeterGraph& g, const CenterReport& report) {
  Json out;
  out["rank"] = report.rank;
  out["order"] = count_json(BigCount(1) << report.rank);
  Json central = Json::array();
  for (std::size_t i = 0; i < report.central_components.size(); ++i) {
    Json c = component_json(g, report.central_components[i]);
    c["longest"] = format_word(g, report.central_words[i].letters);
    central.push_back(std::move(c));
  }
  out["central_components"] = std::move(central);
  Json words = Json::array();
  for (const auto& w : report.central_words) words.push_back(format_word(g, w.letters));
  out["central_words"] = std::move(words);
  Json checks = Json::array();
  for (const auto& check : report.spherical) {
    Json c = component_json(g, check.component);
    c["longest"] = format_word(g, check.longest.letters);
    c["longest_length"] = check.longest.length();
    c["central"] = check.central;
    checks.push_back(std::move(c));
  }
  out["spherical_components"] = std::move(checks);
  return out;
}

Json closure_json(const CoxeterGraph& g, const Tripartition& trip, const ClosureVerdict& v) {
  Json out;
  out["verdict"] = to_string(v.verdict);
  if (v.rank_bound) out["rank_bound"] = *v.rank_bound;
  Json witnesses = Json::array();
  auto add = [&](const char* bin, const std::optional<ProjectionWitness>& w) {
    if (!w) return;
    Json j;
    j["bin"] = bin;
    j["generator"] = format_word(g, w->generator);
    j["projection"] = format_word(g, w->projection);
    witnesses.push_back(std::move(j));
  };
  add("generic", v.generic_witness);
  add("affine", v.affine_witness);
  out["witnesses"] = std::move(witnesses);
  Json hit = Json::array();
  for (std::size_t i : v.affine_components_hit) hit.push_back(component_json(g, trip.affine[i]));
  out["affine_components_hit"] = std::move(hit);
  if (!v.undecided_words.empty()) {
    Json words = Json::array();
    for (const auto& w : v.undecided_words) words.push_back(format_word(g, w));
    out["undecided_words"] = std::move(words);
  }
  return out;
}

Json finite_normal_json(const CoxeterGraph& g, const FiniteNormalReport& r) {
  Json out;
  out["no_nontrivial_finite_normal_subgroup"] = r.no_finite_normal;
  out["no_nontrivial_narrow_normal_subgroup"] = r.no_narrow_normal;
  Json sph = Json::array(), aff = Json::array();
  for (const auto& cc : r.spherical_components) sph.push_back(component_json(g, cc));
  for (const auto& cc : r.affine_components) aff.push_back(component_json(g, cc));
  out["spherical_components"] = std::move(sph);
  out["affine_components"] = std::move(aff);
  return out;
}

Json aut_report_json(const CoxeterGraph& g, const AutReport& r) {
  Json out;
  out["center_rank"] = r.center_rank;
  out["odd_components"] = r.odd_components;
  out["ker_psi_order"] = count_json(r.ker_psi_order);
  out["spherical_order"] = r.spherical_order ? Json(*r.spherical_order) : Json(nullptr);
  out["aut_sph_order"] = r.aut_sph_order ? Json(*r.aut_sph_order) : Json(nullptr);
  out["ker_phi_order"] = r.ker_phi_order ? count_json(*r.ker_phi_order) : Json(nullptr);
  Json aff = Json::array();
  for (const auto& f : r.affine_factors) {
    Json j = component_json(g, f.component);
    j["size"] = f.component.component.size();
    j["diagram_automorphisms"] = f.diagram_automorphisms ? Json(*f.diagram_automorphisms) : Json(nullptr);
    j["structure"] = f.structure;
    aff.push_back(std::move(j));
  }
  out["affine_factors"] = std::move(aff);
  out["affine_virtual_rank"] = r.affine_virtual_rank;
  Json gen = Json::array();
  for (const auto& cc : r.generic_factors) gen.push_back(component_json(g, cc));
  out["generic_factors"] = std::move(gen);
  out["narrative"] = r.narrative;
  return out;
}

Json aut_normal_json(const AutNormalReport& r) {
  Json out;
  out["finite_container"] = "Ker(Φ)";
  out["finite_container_order"] = r.finite_container_order ? count_json(*r.finite_container_order) : Json(nullptr);
  out["narrow_container"] = "Ker(Φ) ⋊ Aut(W_aff)";
  out["narrow_virtual_rank_bound"] = r.narrow_virtual_rank_bound;
  out["no_nontrivial_finite_normal_subgroup"] = r.no_finite_normal;
  out["no_nontrivial_narrow_normal_subgroup"] = r.no_narrow_normal;
  out["statements"] = r.statements;
  return out;
}

Json slender_json(const SlenderVerdict& v) {
  Json out;
  out["w_almost_slender"] = v.w_almost_slender;
  if (v.aut_almost_slender == Tristate::Unknown) {
    out["aut_almost_slender"] = "unknown";
  } else {
    out["aut_almost_slender"] = v.aut_almost_slender == Tristate::True;
  }
  return out;
}

}  // namespace coxeter
