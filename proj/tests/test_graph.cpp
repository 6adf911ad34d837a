#include <catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "coxeter/catalog.hpp"
#include "coxeter/errors.hpp"
#include "coxeter/graph.hpp"
#include "coxeter/instances.hpp"
#include "coxeter/kernels.hpp"

using namespace coxeter;

namespace {

CoxeterGraph triangle(unsigned m) {
  return CoxeterGraph({"a", "b", "c"}, {{0, 1, BondValue::finite(m)}, {0, 2, BondValue::finite(m)},
                                        {1, 2, BondValue::finite(m)}});
}

std::vector<CoxeterGraph> random_graphs(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CoxeterGraph> out;
  std::uniform_int_distribution<std::size_t> size(1, 7);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_connected_graph(rng, size(rng), bond_pool(7, false), bond_pool(7, true)));
  }
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

}  // namespace

TEST_CASE("parse a single bond") {
  const CoxeterGraph g = parse_graph("gens: a b\nbond: a b 3");
  REQUIRE(g.size() == 2);
  CHECK(g.name(0) == "a");
  CHECK(g.bond(0, 1) == BondValue::finite(3));
  CHECK(g.bond(1, 0) == BondValue::finite(3));
  CHECK(g.bond(0, 0) == BondValue::finite(1));
}

TEST_CASE("parse the ten-generator example") {
  const CoxeterGraph g = parse_graph(tripartition_example_text());
  CHECK(g.size() == 10);
  CHECK(g.edges().size() == 8);
  CHECK(g.bond(g.index_of("s1"), g.index_of("s2")).is_infinite());
  CHECK(g.bond(g.index_of("s6"), g.index_of("s8")) == BondValue::finite(4));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_graph("gens: a b\nbond: a b 1"), InputError);
  CHECK_THROWS_AS(parse_graph("gens: a a"), InputError);
  CHECK_THROWS_AS(parse_graph("gens: a b\nbond: a c 3"), InputError);
  CHECK_THROWS_AS(parse_graph("gens: a b\nbond: a a 3"), InputError);
  CHECK_THROWS_AS(parse_graph("gens: a b\nbond: a b 3\nbond: b a 4"), InputError);
  CHECK_THROWS_AS(parse_graph("bond: a b 3"), InputError);
  CHECK_THROWS_AS(parse_graph("gens: a b\nbond: a b x"), InputError);
}

TEST_CASE("m = 2 bonds are not stored") {
  const CoxeterGraph g = parse_graph("gens: a b c\nbond: a b 2\nbond: b c inf");
  CHECK(g.edges().size() == 1);
  CHECK(g.commute(0, 1));
  CHECK_FALSE(g.commute(1, 2));
}

TEST_CASE("comments and blank lines are ignored") {
  const CoxeterGraph g = parse_graph("# header\n\ngens: a b\n  # indented\nbond: a b 5\n");
  CHECK(g.bond(0, 1) == BondValue::finite(5));
}

TEST_CASE("empty graph parses") {
  const CoxeterGraph g = parse_graph("gens:\n");
  CHECK(g.empty());
  CHECK(parse_graph(serialize_graph(g)) == g);
}

TEST_CASE("gram matrix entries") {
  SECTION("single generator") {
    const GramMatrix m = gram_matrix(catalog::type_a(1));
    REQUIRE(m.dim() == 1);
    CHECK(m(0, 0) == 1.0);
  }
  SECTION("commuting pair") {
    const GramMatrix m = gram_matrix(parse_graph("gens: a b"));
    CHECK(m(0, 1) == 0.0);
  }
  SECTION("m = 4") {
    const GramMatrix m = gram_matrix(catalog::type_b(2));
    CHECK(std::abs(m(0, 1) - (-0.7071067811865476)) <= 1e-15);
  }
  SECTION("m = inf") {
    const GramMatrix m = gram_matrix(catalog::affine_a(1));
    CHECK(m(0, 1) == -1.0);
  }
}

TEST_CASE("graph automorphism counts") {
  CHECK(graph_automorphisms(catalog::type_a(1))->size() == 1);
  CHECK(graph_automorphisms(triangle(3))->size() == 6);
  CHECK(graph_automorphisms(catalog::type_a(3))->size() == 2);
  CHECK(graph_automorphisms(catalog::type_d(4))->size() == 6);
  CHECK(graph_automorphisms(catalog::type_f4())->size() == 2);
  CHECK(graph_automorphisms(parse_graph("gens:"))->size() == 1);
}

TEST_CASE("graph automorphisms above the cap are not computed") {
  CHECK_FALSE(graph_automorphisms(catalog::type_a(5), 4).has_value());
}

TEST_CASE("serialize round trip on random graphs") {
  for (const auto& g : random_graphs(100, 11)) {
    CHECK(parse_graph(serialize_graph(g)) == g);
  }
}

TEST_CASE("gram matrix is symmetric with unit diagonal") {
  for (const auto& g : random_graphs(100, 12)) {
    const GramMatrix m = gram_matrix(g);
    for (std::size_t i = 0; i < m.dim(); ++i) {
      CHECK(m(i, i) == 1.0);
      for (std::size_t j = 0; j < m.dim(); ++j) CHECK(m(i, j) == m(j, i));
    }
  }
}

TEST_CASE("graph automorphisms form a group of bond-preserving maps") {
  for (const auto& g : random_graphs(60, 13)) {
    const auto autos = *graph_automorphisms(g);
    const std::set<Permutation> set(autos.begin(), autos.end());
    REQUIRE(set.size() == autos.size());
    for (const auto& p : autos) {
      CHECK(is_graph_automorphism(g, p));
      CHECK(permute_generators(g, p).edges() == g.edges());
      for (const auto& q : autos) CHECK(set.count(compose(p, q)) == 1);
    }
  }
}

TEST_CASE("graph automorphism kernels agree") {
  for (const auto& g : random_graphs(60, 14)) {
    CHECK(kernels::graph_automorphisms_serial(g) == kernels::graph_automorphisms_parallel(g));
  }
}

TEST_CASE("words parse and format") {
  const CoxeterGraph g = parse_graph("gens: s t\nbond: s t 3");
  const Word w = parse_word(g, "s t  s");
  CHECK(w == Word{0, 1, 0});
  CHECK(format_word(g, w) == "s t s");
  CHECK(parse_word(g, "").empty());
  CHECK(inverse(Word{0, 1}) == Word{1, 0});
  CHECK_THROWS_AS(parse_word(g, "s u"), InputError);
}
