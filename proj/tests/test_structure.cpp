#include <catch_amalgamated.hpp>

#include "coxeter/catalog.hpp"
#include "coxeter/errors.hpp"
#include "coxeter/instances.hpp"
#include "coxeter/structure.hpp"

using namespace coxeter;

namespace {

ClosureVerdict verdict(const CoxeterGraph& g, const std::vector<std::string>& words, EngineOptions opts = {}) {
  WordEngine e(g, opts);
  std::vector<Word> gens;
  for (const auto& w : words) gens.push_back(parse_word(g, w));
  return normal_closure_verdict(e, tripartition(g), gens);
}

CoxeterGraph triangle(unsigned m) {
  return CoxeterGraph({"a", "b", "c"}, {{0, 1, BondValue::finite(m)}, {0, 2, BondValue::finite(m)},
                                        {1, 2, BondValue::finite(m)}});
}

int rank_of(Verdict v) {
  switch (v) {
    case Verdict::Finite: return 0;
    case Verdict::NarrowInfinite: return 1;
    case Verdict::FullSized: return 2;
    case Verdict::Undecided: return -1;
  }
  return -1;
}

}  // namespace

TEST_CASE("centre examples") {
  {
    const CoxeterGraph g = tripartition_example();
    CHECK(center(WordEngine(g), tripartition(g)).rank == 0);
  }
  {
    const CoxeterGraph g = catalog::type_a(1);
    const CenterReport r = center(WordEngine(g), tripartition(g));
    CHECK(r.rank == 1);
    REQUIRE(r.central_words.size() == 1);
    CHECK(r.central_words[0].letters == Word{0});
  }
  {
    const CoxeterGraph g = disjoint_union({catalog::type_i2(4), catalog::type_a(2)});
    const CenterReport r = center(WordEngine(g), tripartition(g));
    CHECK(r.rank == 1);
    REQUIRE(r.central_components.size() == 1);
    CHECK(r.central_components[0].type.label == "B_2");
  }
  {
    const CoxeterGraph g = parse_graph("gens:");
    CHECK(center(WordEngine(g), tripartition(g)).rank == 0);
  }
}

TEST_CASE("centrality of longest elements") {
  const std::vector<std::pair<CoxeterGraph, bool>> cases{
      {catalog::type_a(1), true},  {catalog::type_a(2), false}, {catalog::type_a(3), false},
      {catalog::type_b(3), true},  {catalog::type_d(4), true},  {catalog::type_d(5), false},
      {catalog::type_i2(9), false}, {catalog::type_f4(), true},
      {catalog::type_h(3), true},  {catalog::type_i2(5), false}, {catalog::type_i2(6), true}};
  for (const auto& [g, central] : cases) {
    const CenterReport r = center(WordEngine(g), tripartition(g));
    REQUIRE(r.spherical.size() == 1);
    CHECK(r.spherical[0].central == central);
  }
}

TEST_CASE("centre computation propagates braid cap hits") {
  const CoxeterGraph g = catalog::type_e(6);
  WordEngine e(g, EngineOptions{1000});
  try {
    center(e, tripartition(g));
    FAIL("expected UndecidedError");
  } catch (const UndecidedError& err) {
    CHECK(err.cap_name() == "cap-braid");
  }
}

TEST_CASE("closure verdicts on the ten-generator example") {
  const CoxeterGraph g = tripartition_example();
  CHECK(verdict(g, {"s9"}).verdict == Verdict::Finite);
  const ClosureVerdict a = verdict(g, {"s1 s2"});
  CHECK(a.verdict == Verdict::NarrowInfinite);
  CHECK(a.rank_bound == std::optional<std::size_t>(1));
  const ClosureVerdict f = verdict(g, {"s6 s7"});
  CHECK(f.verdict == Verdict::FullSized);
  REQUIRE(f.generic_witness);
  CHECK(format_word(g, f.generic_witness->projection) == "s6 s7");
  const ClosureVerdict b = verdict(g, {"s3 s4 s3 s4"});
  CHECK(b.verdict == Verdict::NarrowInfinite);
  CHECK(b.rank_bound == std::optional<std::size_t>(2));
  const ClosureVerdict both = verdict(g, {"s1", "s3"});
  CHECK(both.rank_bound == std::optional<std::size_t>(3));
  CHECK(both.affine_components_hit == std::vector<std::size_t>{0, 1});
}

TEST_CASE("closure edge cases") {
  const CoxeterGraph g = tripartition_example();
  CHECK(verdict(g, {""}).verdict == Verdict::Finite);
  CHECK(verdict(catalog::type_a(2), {""}).verdict == Verdict::Finite);
  CHECK_THROWS_AS(verdict(g, {}), PreconditionError);
  // Spherical letters that cancel leave the affine projection trivial.
  CHECK(verdict(g, {"s3 s9 s3"}).verdict == Verdict::Finite);
}

TEST_CASE("a braid cap hit is reported as undecided") {
  const CoxeterGraph g = tripartition_example();
  const ClosureVerdict v = verdict(g, {"s3 s4 s3 s4"}, EngineOptions{1});
  CHECK(v.verdict == Verdict::Undecided);
  CHECK(v.undecided_cap == "cap-braid");
  CHECK(v.undecided_limit == 1);
  REQUIRE(v.undecided_words.size() == 1);
  // A generic witness still decides the verdict.
  CHECK(verdict(g, {"s3 s4 s3 s4", "s6"}, EngineOptions{1}).verdict == Verdict::FullSized);
}

TEST_CASE("closure verdicts are monotone") {
  Rng rng(61);
  const CoxeterGraph g = tripartition_example();
  WordEngine e(g);
  const Tripartition trip = tripartition(g);
  const auto gens = GeneratorSet::all(g.size()).members();
  for (int i = 0; i < 100; ++i) {
    std::vector<Word> list{random_word(rng, gens, 5)};
    Verdict prev = normal_closure_verdict(e, trip, list).verdict;
    for (int k = 0; k < 3; ++k) {
      list.push_back(random_word(rng, gens, 5));
      const Verdict next = normal_closure_verdict(e, trip, list).verdict;
      CHECK(rank_of(next) >= rank_of(prev));
      prev = next;
    }
  }
}

TEST_CASE("finite normal subgroup report") {
  {
    const FiniteNormalReport r = finite_normal_report(tripartition(tripartition_example()));
    CHECK_FALSE(r.no_finite_normal);
    CHECK_FALSE(r.no_narrow_normal);
    CHECK(r.spherical_components.size() == 1);
    CHECK(r.affine_components.size() == 2);
  }
  {
    const FiniteNormalReport r = finite_normal_report(tripartition(triangle(4)));
    CHECK(r.no_finite_normal);
    CHECK(r.no_narrow_normal);
  }
  {
    const FiniteNormalReport r = finite_normal_report(tripartition(catalog::type_a(2)));
    CHECK_FALSE(r.no_finite_normal);
    CHECK_FALSE(r.no_narrow_normal);
  }
  {
    const FiniteNormalReport r = finite_normal_report(tripartition(catalog::affine_a(2)));
    CHECK(r.no_finite_normal);
    CHECK_FALSE(r.no_narrow_normal);
  }
}
