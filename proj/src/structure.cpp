#include "coxeter/structure.hpp"

#include "coxeter/errors.hpp"

namespace coxeter {

CenterReport center(const WordEngine& engine, const Tripartition& trip) {
  CenterReport report;
  for (const auto& cc : trip.spherical) {
    LongestElementCheck check{cc, engine.longest_element(cc.component), true};
    for (Generator s : cc.component.vertices) {
      const Word gen{s};
      if (!engine.are_equal(check.longest.letters * gen, gen * check.longest.letters)) {
        check.central = false;
        break;
      }
    }
    if (check.central) {
      report.central_components.push_back(cc);
      report.central_words.push_back(check.longest);
    }
    report.spherical.push_back(std::move(check));
  }
  report.rank = report.central_components.size();
  return report;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Finite: return "Finite";
    case Verdict::NarrowInfinite: return "NarrowInfinite";
    case Verdict::FullSized: return "FullSized";
    case Verdict::Undecided: return "Undecided";
  }
  return "Undecided";
}

ClosureVerdict normal_closure_verdict(const WordEngine& engine, const Tripartition& trip,
                                      const std::vector<Word>& gens) {
  if (gens.empty()) throw PreconditionError("normal closure needs at least one generator word");
  ClosureVerdict out;
  std::vector<bool> hit(trip.affine.size(), false);
  for (const Word& w : gens) {
    try {
      const Word generic = project(trip, w, Bin::Generic);
      if (!out.generic_witness && !engine.is_identity(generic)) {
        out.generic_witness = ProjectionWitness{w, generic};
      }
      bool nontrivial_affine = false;
      for (std::size_t i = 0; i < trip.affine.size(); ++i) {
        if (!engine.is_identity(project(trip.affine[i].component, w))) {
          hit[i] = true;
          nontrivial_affine = true;
        }
      }
      if (nontrivial_affine && !out.affine_witness) {
        out.affine_witness = ProjectionWitness{w, project(trip, w, Bin::Affine)};
      }
    } catch (const UndecidedError& e) {
      out.undecided_words.push_back(w);
      if (out.undecided_cap.empty()) {
        out.undecided_cap = e.cap_name();
        out.undecided_limit = e.limit();
      }
    }
  }
  for (std::size_t i = 0; i < hit.size(); ++i) {
    if (hit[i]) out.affine_components_hit.push_back(i);
  }
  if (out.generic_witness) {
    out.verdict = Verdict::FullSized;
  } else if (!out.undecided_words.empty()) {
    out.verdict = Verdict::Undecided;
  } else if (out.affine_components_hit.empty()) {
    out.verdict = Verdict::Finite;
  } else {
    out.verdict = Verdict::NarrowInfinite;
    std::size_t bound = 0;
    for (std::size_t i : out.affine_components_hit) bound += trip.affine[i].component.size() - 1;
    out.rank_bound = bound;
  }
  return out;
}

FiniteNormalReport finite_normal_report(const Tripartition& trip) {
  FiniteNormalReport r;
  r.spherical_components = trip.spherical;
  r.affine_components = trip.affine;
  r.no_finite_normal = trip.spherical.empty();
  r.no_narrow_normal = trip.spherical.empty() && trip.affine.empty();
  return r;
}

}  // namespace coxeter
