#ifndef COXETER_JSON_HPP_
#define COXETER_JSON_HPP_

// JSON views of the analysis results. Keys keep insertion order so output is
// byte-for-byte reproducible. Generators are reported by name and words as
// space-separated names.

#include <json.hpp>

#include "coxeter/aut.hpp"
#include "coxeter/classifier.hpp"
#include "coxeter/structure.hpp"
#include "coxeter/word_engine.hpp"

namespace coxeter {

using Json = nlohmann::ordered_json;

// Exact count: a JSON number when it fits 64 bits, else a decimal string.
Json count_json(const BigCount& n);

Json names_json(const CoxeterGraph& g, const std::vector<Generator>& gens);
Json component_json(const CoxeterGraph& g, const ClassifiedComponent& cc);
Json tripartition_json(const CoxeterGraph& g, const Tripartition& trip);
Json reduced_word_json(const CoxeterGraph& g, const ReducedWord& rw);
Json center_json(const CoxeterGraph& g, const CenterReport& report);
Json closure_json(const CoxeterGraph& g, const Tripartition& trip, const ClosureVerdict& v);
Json finite_normal_json(const CoxeterGraph& g, const FiniteNormalReport& r);
Json aut_report_json(const CoxeterGraph& g, const AutReport& r);
Json aut_normal_json(const AutNormalReport& r);
Json slender_json(const SlenderVerdict& v);

}  // namespace coxeter

#endif  // COXETER_JSON_HPP_
