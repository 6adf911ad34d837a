#include "coxeter/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>

#include "coxeter/catalog.hpp"
#include "coxeter/classifier.hpp"
#include "coxeter/errors.hpp"
#include "coxeter/oracle.hpp"
#include "coxeter/structure.hpp"

namespace coxeter {

namespace {

constexpr std::size_t kMaxRecordedFailures = 10;

}  // namespace

void SuiteResult::check(bool ok, const std::string& what) {
  if (ok) {
    ++passed;
    return;
  }
  ++failed;
  if (failures.size() < kMaxRecordedFailures) failures.push_back(what);
}

bool VerifyReport::ok() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failed == 0; });
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"catalog", "wordproblem", "longest", "center", "xymin",
                                              "parabolic", "closure",   "hom",     "slender"};
  return names;
}

std::vector<NamedGraph> finite_group_corpus() {
  std::vector<NamedGraph> out;
  for (unsigned n = 1; n <= 5; ++n) out.push_back({"A_" + std::to_string(n), catalog::type_a(n)});
  for (unsigned n = 2; n <= 4; ++n) out.push_back({"B_" + std::to_string(n), catalog::type_b(n)});
  out.push_back({"D_4", catalog::type_d(4)});
  out.push_back({"H_3", catalog::type_h(3)});
  out.push_back({"F_4", catalog::type_f4()});
  for (unsigned m = 3; m <= 12; ++m) out.push_back({"I_2(" + std::to_string(m) + ")", catalog::type_i2(m)});
  return out;
}

namespace {

using SuiteFn = std::function<void(const VerifyOptions&, Rng&, SuiteResult&)>;

std::size_t trials_or(const VerifyOptions& o, std::size_t fallback) { return o.trials.value_or(fallback); }

std::string describe(const CoxeterGraph& g, const Word& w) { return "\"" + format_word(g, w) + "\""; }

std::vector<Generator> all_generators(const CoxeterGraph& g) { return GeneratorSet::all(g.size()).members(); }

// Finite groups of the corpus (or the user graph) with their tables.
struct FiniteInstance {
  std::string name;
  CoxeterGraph graph;
  FiniteGroupTable table;
};

std::vector<FiniteInstance> finite_instances(const VerifyOptions& o, SuiteResult& r) {
  std::vector<NamedGraph> graphs;
  if (o.graph) {
    graphs.push_back({"input", *o.graph});
  } else {
    graphs = finite_group_corpus();
  }
  std::vector<FiniteInstance> out;
  for (auto& ng : graphs) {
    WordEngine engine(ng.graph, o.engine);
    auto t = enumerate_group_cached(engine, GeneratorSet::all(ng.graph.size()), o.max_order, o.analysis.cache_dir);
    if (!t) {
      r.notes.push_back(ng.name + ": skipped, group order exceeds " + std::to_string(o.max_order));
      continue;
    }
    out.push_back({ng.name, ng.graph, std::move(*t)});
  }
  return out;
}

void suite_catalog(const VerifyOptions& o, Rng&, SuiteResult& r) {
  auto entries = catalog::entries_up_to_rank(8, 12);
  entries.push_back({ComponentKind::Spherical, "A_2", catalog::type_i2(3)});
  entries.push_back({ComponentKind::Spherical, "B_2", catalog::type_i2(4)});
  for (const auto& e : entries) {
    const ComponentType t = classify_connected_graph(e.diagram);
    r.check(t.kind == e.kind && t.label == e.label, e.label + ": classified as " + to_string(t));
    const auto sig = definiteness_signature(e.diagram, o.tolerance);
    if (e.kind == ComponentKind::Spherical) {
      r.check(sig.min_eigenvalue > o.tolerance, e.label + ": Gram matrix not positive definite");
    } else {
      r.check(std::abs(sig.min_eigenvalue) <= o.tolerance && sig.zero_count == 1,
              e.label + ": Gram matrix not semidefinite with a one-dimensional kernel");
    }
    r.check(parse_graph(serialize_graph(e.diagram)) == e.diagram, e.label + ": serializer round trip differs");
  }
}

void suite_wordproblem(const VerifyOptions& o, Rng& rng, SuiteResult& r) {
  const std::size_t words = trials_or(o, 500);
  for (const auto& inst : finite_instances(o, r)) {
    WordEngine engine(inst.graph, o.engine);
    const auto gens = all_generators(inst.graph);
    const auto& t = inst.table;
    for (std::size_t i = 0; i < words; ++i) {
      const Word w = random_word(rng, gens, 12);
      Word u;
      if (std::bernoulli_distribution(0.5)(rng) && !gens.empty()) {
        // Same element, different spelling: the table word with s s spliced in.
        u = t.word(t.element_of(w));
        std::uniform_int_distribution<std::size_t> pos(0, u.size());
        const Generator s = gens[std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(rng)];
        const auto at = u.letters.begin() + static_cast<std::ptrdiff_t>(pos(rng));
        u.letters.insert(at, {s, s});
      } else {
        u = random_word(rng, gens, 12);
      }
      const ElementId wid = t.element_of(w), uid = t.element_of(u);
      const ReducedWord rw = engine.reduce(w), ru = engine.reduce(u);
      r.check(rw.length() == t.depth[wid], inst.name + ": length of " + describe(inst.graph, w) + " is " +
                                               std::to_string(rw.length()) + ", BFS distance " +
                                               std::to_string(t.depth[wid]));
      const bool same = wid == uid;
      r.check(engine.are_equal(u, w) == same,
              inst.name + ": are_equal(" + describe(inst.graph, u) + ", " + describe(inst.graph, w) + ") disagrees");
      r.check((rw.canonical == ru.canonical) == same,
              inst.name + ": canonical forms of " + describe(inst.graph, u) + ", " + describe(inst.graph, w) +
                  " disagree with the oracle");
      r.check(engine.are_equal(w, rw.letters), inst.name + ": reduce changed the element of " + describe(inst.graph, w));
    }
  }
}

// Enumerated group of one component.
std::optional<FiniteGroupTable> component_table(const WordEngine& engine, const Component& c, const VerifyOptions& o) {
  return enumerate_group_cached(engine, GeneratorSet(engine.graph().size(), c.vertices), o.max_order,
                                o.analysis.cache_dir);
}

void suite_longest(const VerifyOptions& o, Rng&, SuiteResult& r) {
  for (const auto& inst : finite_instances(o, r)) {
    WordEngine engine(inst.graph, o.engine);
    for (const auto& cc : tripartition(inst.graph).spherical) {
      const Component& c = cc.component;
      const std::string name = inst.name + " " + cc.type.label;
      const ReducedWord w0 = engine.longest_element(c);
      r.check(engine.is_identity(w0.letters * w0.letters), name + ": w_0 is not an involution");
      std::set<Generator> image;
      for (Generator s : c.vertices) {
        const Word sw{s};
        r.check(engine.length(sw * w0.letters) < w0.length(), name + ": " + inst.graph.name(s) + " is not a left descent");
        const ReducedWord conj = engine.reduce(w0.letters * sw * w0.letters);
        const bool is_gen = conj.length() == 1 && c.contains(conj.letters[0]);
        r.check(is_gen, name + ": w_0 " + inst.graph.name(s) + " w_0 is not a generator of the component");
        if (is_gen) image.insert(conj.letters[0]);
      }
      r.check(image.size() == c.size(), name + ": conjugation by w_0 does not permute the generators");
      if (auto t = component_table(engine, c, o)) {
        const auto longest = *std::max_element(t->depth.begin(), t->depth.end());
        r.check(w0.length() == longest, name + ": l(w_0) = " + std::to_string(w0.length()) +
                                            ", oracle maximum " + std::to_string(longest));
      }
    }
  }
}

void suite_center(const VerifyOptions& o, Rng&, SuiteResult& r) {
  for (const auto& inst : finite_instances(o, r)) {
    WordEngine engine(inst.graph, o.engine);
    const Tripartition trip = tripartition(inst.graph);
    const CenterReport report = center(engine, trip);
    const auto z = brute_center(inst.table);
    const bool elementary = std::all_of(z.begin(), z.end(), [&](ElementId e) { return inst.table.product(e, e) == 0; });
    r.check(elementary, inst.name + ": brute-force centre is not elementary abelian");
    r.check(z.size() == (std::size_t{1} << report.rank),
            inst.name + ": centre rank " + std::to_string(report.rank) + ", brute-force order " + std::to_string(z.size()));
    for (const auto& check : report.spherical) {
      if (auto t = component_table(engine, check.component.component, o)) {
        r.check(check.central == (brute_center(*t).size() == 2),
                inst.name + " " + check.component.type.label + ": w_0 centrality disagrees with brute force");
      }
    }
  }
}

void suite_xymin(const VerifyOptions& o, Rng& rng, SuiteResult& r) {
  const std::size_t triples = trials_or(o, 100);
  for (const auto& inst : finite_instances(o, r)) {
    WordEngine engine(inst.graph, o.engine);
    const auto& t = inst.table;
    const GeneratorSet all = GeneratorSet::all(inst.graph.size());
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(t.order() - 1));
    for (std::size_t i = 0; i < triples; ++i) {
      const ElementId w = pick(rng);
      const GeneratorSet x = random_subset(rng, all), y = random_subset(rng, all);
      ElementId star = 0;
      try {
        star = brute_xy_minimal(t, w, x, y);
      } catch (const InvariantViolation& e) {
        r.check(false, inst.name + ": " + e.what());
        continue;
      }
      bool exact = true;
      for (ElementId e : double_coset(t, w, x, y)) {
        if (engine.is_xy_minimal(t.word(e), x, y) != (e == star)) exact = false;
      }
      r.check(exact, inst.name + ": descent criterion disagrees with double-coset search for " +
                         describe(inst.graph, t.word(w)));
    }
  }
}

void suite_parabolic(const VerifyOptions& o, Rng& rng, SuiteResult& r) {
  const std::size_t graphs = trials_or(o, 100);
  const auto edges = bond_pool(6, false);
  const auto pairs = bond_pool(6, true);
  std::uniform_int_distribution<std::size_t> size(2, 5);
  for (std::size_t i = 0; i < graphs; ++i) {
    const CoxeterGraph g = random_connected_graph(rng, size(rng), edges, pairs);
    WordEngine engine(g, o.engine);
    const std::size_t n = g.size();
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      GeneratorSet x(n);
      for (std::size_t s = 0; s < n; ++s) {
        if (mask >> s & 1u) x.insert(static_cast<Generator>(s));
      }
      r.check(!engine.standard_parabolic_is_normal(x),
              "proper parabolic {" + format_word(g, Word(x.members())) + "} is normal in\n" + serialize_graph(g));
    }
  }
}

int verdict_rank(Verdict v) {
  switch (v) {
    case Verdict::Finite: return 0;
    case Verdict::NarrowInfinite: return 1;
    case Verdict::FullSized: return 2;
    case Verdict::Undecided: return -1;
  }
  return -1;
}

void suite_closure(const VerifyOptions& o, Rng& rng, SuiteResult& r) {
  const CoxeterGraph g = o.graph ? *o.graph : tripartition_example();
  const Tripartition trip = tripartition(g);
  WordEngine engine(g, o.engine);
  if (!o.graph) {
    struct Case {
      const char* gens;
      Verdict verdict;
      std::optional<std::size_t> bound;
    };
    const Case cases[] = {{"s9", Verdict::Finite, std::nullopt},
                          {"s1 s2", Verdict::NarrowInfinite, 1},
                          {"s6 s7", Verdict::FullSized, std::nullopt},
                          {"s3 s4 s3 s4", Verdict::NarrowInfinite, 2},
                          {"", Verdict::Finite, std::nullopt}};
    for (const auto& c : cases) {
      const auto v = normal_closure_verdict(engine, trip, {parse_word(g, c.gens)});
      r.check(v.verdict == c.verdict && v.rank_bound == c.bound,
              std::string("closure of \"") + c.gens + "\" is " + to_string(v.verdict));
    }
  }
  // Adding a generator never makes the closure smaller, and a finite verdict
  // means the spherical projections close up inside the enumerated W_sph.
  const auto gens = all_generators(g);
  const GeneratorSet sph = trip.generators(Bin::Spherical);
  const auto sph_table = enumerate_group_cached(engine, sph, o.max_order, o.analysis.cache_dir);
  const std::size_t lists = trials_or(o, 50);
  for (std::size_t i = 0; i < lists; ++i) {
    std::vector<Word> list;
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    for (std::size_t j = 0; j < k; ++j) list.push_back(random_word(rng, gens, 6));
    try {
      const auto before = normal_closure_verdict(engine, trip, list);
      list.push_back(random_word(rng, gens, 6));
      const auto after = normal_closure_verdict(engine, trip, list);
      r.check(verdict_rank(after.verdict) >= verdict_rank(before.verdict), "closure verdict decreased after adding a word");
      if (before.verdict == Verdict::Finite && sph_table) {
        list.pop_back();
        const auto& t = *sph_table;
        // Conjugacy-closed generating set, then the subgroup it generates.
        std::vector<bool> is_gen(t.order(), false);
        std::vector<ElementId> conj;
        auto add_gen = [&](ElementId e) {
          if (!is_gen[e]) {
            is_gen[e] = true;
            conj.push_back(e);
          }
        };
        for (const Word& w : list) add_gen(t.element_of(project(trip, w, Bin::Spherical)));
        for (std::size_t head = 0; head < conj.size(); ++head) {
          for (std::size_t j = 0; j < t.rank(); ++j) add_gen(t.left(j, t.right(conj[head], j)));
        }
        std::vector<bool> in(t.order(), false);
        std::vector<ElementId> members{0};
        in[0] = true;
        for (std::size_t head = 0; head < members.size(); ++head) {
          for (ElementId c : conj) {
            const ElementId e = t.product(members[head], c);
            if (!in[e]) {
              in[e] = true;
              members.push_back(e);
            }
          }
        }
        r.check(sph_table->order() % members.size() == 0, "normal closure in W_sph is not a subgroup");
      }
    } catch (const UndecidedError& e) {
      r.notes.push_back(std::string("undecided closure: ") + e.what());
    }
  }
}

void suite_hom(const VerifyOptions& o, Rng& rng, SuiteResult& r) {
  auto check_graph = [&](const CoxeterGraph& g, const std::string& name) {
    WordEngine engine(g, o.engine);
    const Tripartition trip = tripartition(g);
    const std::size_t rank = center(engine, trip).rank;
    GeneratorSet domain = trip.generators(Bin::Generic);
    for (Generator s : trip.generators(Bin::Affine).members()) domain.insert(s);
    if (rank * domain.size() <= kMaxHomCountBits && domain.size() <= kMaxHomCountDomain) {
      const BigCount formula = hom_count(g, trip, rank);
      const std::uint64_t brute = brute_hom_count(g, domain, static_cast<unsigned>(rank));
      r.check(formula == brute, name + ": hom_count " + formula.str() + ", brute force " + std::to_string(brute));
    } else {
      r.notes.push_back(name + ": brute-force homomorphism count too large, skipped");
    }
    const AutReport report = aut_report(engine, trip, o.analysis);
    if (report.aut_sph_order) {
      r.check(report.ker_phi_order && *report.ker_phi_order == report.ker_psi_order * *report.aut_sph_order,
              name + ": |Ker(Phi)| is not |Ker(Psi)| |Aut(W_sph)|");
    }
    return report;
  };
  if (o.graph) {
    check_graph(*o.graph, "input");
    return;
  }
  const std::size_t graphs = trials_or(o, 50);
  for (std::size_t i = 0; i < graphs; ++i) {
    const std::size_t r_target = i % 3;
    const CoxeterGraph g = random_graph_with_center_rank(rng, 12, r_target);
    WordEngine engine(g, o.engine);
    r.check(center(engine, tripartition(g)).rank == r_target,
            "random graph built for centre rank " + std::to_string(r_target) + " has a different rank");
    check_graph(g, "random graph " + std::to_string(i));
  }
  const AutReport ex = check_graph(tripartition_example(), "ten-generator example");
  r.check(ex.ker_psi_order == 1 && ex.aut_sph_order == std::optional<std::uint64_t>(6) && ex.ker_phi_order &&
              *ex.ker_phi_order == 6 && ex.affine_virtual_rank == 3,
          "ten-generator example: Aut(W) report differs from 1, 6, 6, 3");
}

void suite_slender(const VerifyOptions& o, Rng& rng, SuiteResult& r) {
  std::vector<NamedGraph> corpus;
  if (o.graph) {
    corpus.push_back({"input", *o.graph});
  } else {
    for (auto& e : catalog::entries_up_to_rank(8, 12)) corpus.push_back({e.label, std::move(e.diagram)});
    corpus.push_back({"ten-generator example", tripartition_example()});
    corpus.push_back({"empty", CoxeterGraph({}, {})});
    const std::size_t graphs = trials_or(o, 50);
    for (std::size_t i = 0; i < graphs; ++i) {
      corpus.push_back({"random graph " + std::to_string(i), random_graph_with_center_rank(rng, 10, i % 3)});
    }
  }
  for (const auto& ng : corpus) {
    const Tripartition trip = tripartition(ng.graph);
    const SlenderVerdict v = slender_verdict(trip);
    const FiniteNormalReport f = finite_normal_report(trip);
    const bool empty = trip.spherical.empty();
    r.check(v.w_almost_slender == empty && v.w_almost_slender == f.no_finite_normal,
            ng.name + ": W slenderness disagrees with the spherical part");
    r.check(v.aut_almost_slender == (empty ? Tristate::True : Tristate::Unknown),
            ng.name + ": Aut(W) slenderness is not true/unknown as required");
  }
}

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"catalog", suite_catalog}, {"wordproblem", suite_wordproblem}, {"longest", suite_longest},
      {"center", suite_center},   {"xymin", suite_xymin},             {"parabolic", suite_parabolic},
      {"closure", suite_closure}, {"hom", suite_hom},                 {"slender", suite_slender}};
  return table;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& given) {
  VerifyOptions options = given;
  for (auto& name : options.suites) {
    if (name == "lemma31") name = "parabolic";
    const auto& names = verify_suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw InputError("unknown verify suite '" + name + "'");
    }
  }
  VerifyReport report;
  std::size_t index = 0;
  for (const auto& [name, fn] : suites()) {
    ++index;
    if (!options.suites.empty() &&
        std::find(options.suites.begin(), options.suites.end(), name) == options.suites.end()) {
      continue;
    }
    // Each suite gets its own stream so selecting suites does not shift seeds.
    std::seed_seq seq{options.seed, static_cast<std::uint64_t>(index)};
    Rng rng(seq);
    SuiteResult result;
    result.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(options, rng, result);
    } catch (const UndecidedError& e) {
      result.check(false, std::string("undecided: ") + e.what());
    } catch (const InvariantViolation& e) {
      result.check(false, std::string("invariant violation: ") + e.what());
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.suites.push_back(std::move(result));
  }
  return report;
}

}  // namespace coxeter
