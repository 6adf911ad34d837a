#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <set>

#include "coxeter/catalog.hpp"
#include "coxeter/classifier.hpp"
#include "coxeter/instances.hpp"

using namespace coxeter;

namespace {

std::vector<std::vector<std::string>> vertex_names(const CoxeterGraph& g, const std::vector<ClassifiedComponent>& cs) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : cs) {
    std::vector<std::string> names;
    for (Generator s : c.component.vertices) names.push_back(g.name(s));
    out.push_back(names);
  }
  return out;
}

CoxeterGraph triangle(unsigned m) {
  return CoxeterGraph({"a", "b", "c"}, {{0, 1, BondValue::finite(m)}, {0, 2, BondValue::finite(m)},
                                        {1, 2, BondValue::finite(m)}});
}

Component whole(const CoxeterGraph& g) {
  auto cs = connected_components(g);
  REQUIRE(cs.size() == 1);
  return cs.front();
}

using Names = std::vector<std::vector<std::string>>;

}  // namespace

TEST_CASE("components of the ten-generator example") {
  const CoxeterGraph g = tripartition_example();
  const auto cs = connected_components(g);
  REQUIRE(cs.size() == 4);
  CHECK(cs[0].vertices == std::vector<Generator>{0, 1});
  CHECK(cs[1].vertices == std::vector<Generator>{2, 3, 4});
  CHECK(cs[2].vertices == std::vector<Generator>{5, 6, 7});
  CHECK(cs[3].vertices == std::vector<Generator>{8, 9});
}

TEST_CASE("components of edgeless and path graphs") {
  CHECK(connected_components(parse_graph("gens: a b c")).size() == 3);
  CHECK(connected_components(catalog::type_a(4)).size() == 1);
  CHECK(connected_components(parse_graph("gens:")).empty());
}

TEST_CASE("classify single components") {
  const CoxeterGraph g = tripartition_example();
  const auto cs = connected_components(g);
  CHECK(classify_component(cs[3]) == ComponentType{ComponentKind::Spherical, "A_2"});
  CHECK(classify_component(cs[0]) == ComponentType{ComponentKind::Affine, "A\u0303_1"});
  CHECK(classify_component(cs[1]) == ComponentType{ComponentKind::Affine, "A\u0303_2"});
  CHECK(classify_component(cs[2]).kind == ComponentKind::Generic);
  CHECK(classify_component(cs[2]).label.empty());
  CHECK(classify_connected_graph(catalog::type_i2(4)) == ComponentType{ComponentKind::Spherical, "B_2"});
  CHECK(classify_connected_graph(catalog::type_i2(3)) == ComponentType{ComponentKind::Spherical, "A_2"});
  CHECK(classify_connected_graph(catalog::type_i2(7)) == ComponentType{ComponentKind::Spherical, "I_2(7)"});
  CHECK(classify_connected_graph(catalog::affine_c(2)) == ComponentType{ComponentKind::Affine, "C̃_2"});
  CHECK(classify_connected_graph(catalog::affine_b(3)).label == "B̃_3");
}

TEST_CASE("tripartition of the ten-generator example") {
  const CoxeterGraph g = tripartition_example();
  const Tripartition t = tripartition(g);
  CHECK(vertex_names(g, t.generic) == Names{{"s6", "s7", "s8"}});
  CHECK(vertex_names(g, t.affine) == Names{{"s1", "s2"}, {"s3", "s4", "s5"}});
  CHECK(vertex_names(g, t.spherical) == Names{{"s9", "s10"}});
  CHECK(t.bin_of(g.index_of("s4")) == Bin::Affine);
  CHECK(t.generators(Bin::Spherical).members() == std::vector<Generator>{8, 9});
}

TEST_CASE("tripartition of trivial inputs") {
  const Tripartition e = tripartition(parse_graph("gens:"));
  CHECK(e.component_count() == 0);
  const Tripartition a3 = tripartition(catalog::type_a(3));
  CHECK(a3.generic.empty());
  CHECK(a3.affine.empty());
  REQUIRE(a3.spherical.size() == 1);
  CHECK(a3.spherical[0].type.label == "A_3");
}

TEST_CASE("definiteness signatures") {
  SECTION("A_2") {
    const auto sig = definiteness_signature(whole(catalog::type_a(2)));
    CHECK(std::abs(sig.min_eigenvalue - 0.5) <= 1e-9);
    CHECK(sig.zero_count == 0);
  }
  SECTION("affine A_1") {
    const auto sig = definiteness_signature(whole(catalog::affine_a(1)));
    CHECK(std::abs(sig.min_eigenvalue) <= 1e-9);
    CHECK(sig.zero_count == 1);
  }
  SECTION("triangle of 4s") {
    const auto sig = definiteness_signature(whole(triangle(4)));
    CHECK(std::abs(sig.min_eigenvalue - (1 - 2 * std::cos(M_PI / 4))) <= 1e-6);
    CHECK(sig.zero_count == 0);
  }
}

TEST_CASE("catalog soundness up to rank 8") {
  auto entries = catalog::entries_up_to_rank(8, 12);
  entries.push_back({ComponentKind::Spherical, "A_2", catalog::type_i2(3)});
  entries.push_back({ComponentKind::Spherical, "B_2", catalog::type_i2(4)});
  CHECK(entries.size() >= 60);
  for (const auto& e : entries) {
    INFO(e.label);
    const ComponentType t = classify_connected_graph(e.diagram);
    CHECK(t.kind == e.kind);
    CHECK(t.label == e.label);
    const auto sig = definiteness_signature(e.diagram);
    if (e.kind == ComponentKind::Spherical) {
      CHECK(sig.min_eigenvalue > 1e-9);
    } else {
      CHECK(std::abs(sig.min_eigenvalue) <= 1e-9);
      CHECK(sig.zero_count == 1);
    }
  }
}

TEST_CASE("spherical catalog orders") {
  CHECK(catalog::spherical_order("A_5") == 720);
  CHECK(catalog::spherical_order("B_4") == 384);
  CHECK(catalog::spherical_order("D_4") == 192);
  CHECK(catalog::spherical_order("E_8") == 696729600);
  CHECK(catalog::spherical_order("H_4") == 14400);
  CHECK(catalog::spherical_order("I_2(7)") == 14);
}

TEST_CASE("numeric and catalog verdicts agree on random graphs") {
  Rng rng(20240607);
  std::vector<BondValue> pairs = bond_pool(7, true);
  for (int i = 0; i < 6; ++i) pairs.push_back(BondValue::finite(2));
  std::uniform_int_distribution<std::size_t> size(1, 6);
  std::size_t generic = 0;
  for (int i = 0; i < 200; ++i) {
    const CoxeterGraph g = random_connected_graph(rng, size(rng), bond_pool(7, false), pairs);
    INFO(serialize_graph(g));
    const ComponentType t = classify_connected_graph(g);
    const auto sig = definiteness_signature(g);
    CHECK((t.kind == ComponentKind::Generic) == (sig.min_eigenvalue < -1e-6));
    CHECK(numeric_kind(sig) == t.kind);
    if (t.kind == ComponentKind::Generic) ++generic;
  }
  CHECK(generic > 0);
  CHECK(generic < 200);
}

TEST_CASE("tripartition is invariant under relabeling") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const CoxeterGraph g = random_graph_with_center_rank(rng, 10, i % 3);
    Permutation perm(g.size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<Generator>(k);
    std::shuffle(perm.begin(), perm.end(), rng);
    const CoxeterGraph h = permute_generators(g, perm);
    const Tripartition tg = tripartition(g), th = tripartition(h);
    for (Bin b : {Bin::Generic, Bin::Affine, Bin::Spherical}) {
      GeneratorSet mapped(g.size());
      for (Generator s : tg.generators(b).members()) mapped.insert(perm[s]);
      CHECK(mapped == th.generators(b));
      std::multiset<std::string> lg, lh;
      for (const auto& c : tg.bin(b)) lg.insert(c.type.label);
      for (const auto& c : th.bin(b)) lh.insert(c.type.label);
      CHECK(lg == lh);
    }
  }
}

TEST_CASE("diagram isomorphism finds a bond-preserving map") {
  const CoxeterGraph a = catalog::type_d(5);
  Permutation perm{4, 2, 0, 3, 1};
  const CoxeterGraph b = permute_generators(a, perm);
  const auto iso = find_diagram_isomorphism(a, b);
  REQUIRE(iso);
  for (const auto& [pair, m] : a.edges()) CHECK(b.bond((*iso)[pair.first], (*iso)[pair.second]) == m);
  CHECK_FALSE(find_diagram_isomorphism(catalog::type_a(5), catalog::type_d(5)));
}
