#include "coxeter/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "coxeter/aut.hpp"
#include "coxeter/classifier.hpp"
#include "coxeter/errors.hpp"
#include "coxeter/json.hpp"
#include "coxeter/structure.hpp"
#include "coxeter/verify.hpp"
#include "coxeter/word_engine.hpp"

namespace coxeter::cli {

namespace {

struct Flags {
  std::string graph_path;
  std::string word;
  std::string other;
  std::optional<std::string> gens;
  std::string component;
  std::size_t cap_braid = kDefaultBraidCap;
  std::size_t cap_enum = kDefaultEnumerationCap;
  std::size_t cap_aut = kDefaultAutCap;
  double tolerance = kGramTolerance;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
  bool pretty = false;
  std::string cache_dir;
  // verify
  bool builtin = false;
  std::vector<std::string> suites;
  std::optional<std::size_t> trials;
  std::size_t max_order = 1200;
};

struct Outcome {
  std::string status = "ok";
  Json payload = Json::object();
  Json diagnostics = Json::array();
  int code = kExitOk;
};

Json diagnostic(const std::string& code, const std::string& message) {
  Json d;
  d["code"] = code;
  d["message"] = message;
  return d;
}

// "cap-enum: ..." -> {"code": "cap-enum", ...}
Json diagnostic_from_text(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return diagnostic("note", text);
  return diagnostic(text.substr(0, colon), text.substr(colon + 2 <= text.size() ? colon + 2 : colon + 1));
}

struct LoadedGraph {
  CoxeterGraph graph;
  std::vector<std::string> warnings;
};

LoadedGraph load_graph(const Flags& f) {
  if (f.graph_path.empty()) throw InputError("--graph <path> is required");
  std::ifstream in(f.graph_path);
  if (!in) throw InputError("cannot open graph file '" + f.graph_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  ParsedGraph parsed = parse_graph_with_warnings(buf.str());
  return {std::move(parsed.graph), std::move(parsed.warnings)};
}

EngineOptions engine_options(const Flags& f) {
  EngineOptions o;
  o.braid_cap = f.cap_braid;
  return o;
}

AnalysisOptions analysis_options(const Flags& f) {
  AnalysisOptions o;
  o.enumeration_cap = f.cap_enum;
  o.aut_cap = f.cap_aut;
  o.cache_dir = f.cache_dir;
  return o;
}

std::vector<Word> parse_gens(const CoxeterGraph& g, const std::string& text) {
  std::vector<Word> out;
  std::size_t start = 0;
  while (true) {
    const auto semi = text.find(';', start);
    out.push_back(parse_word(g, text.substr(start, semi == std::string::npos ? std::string::npos : semi - start)));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

Json longest_json(const CoxeterGraph& g, const ClassifiedComponent& cc, const ReducedWord& w0) {
  Json j = component_json(g, cc);
  j["longest"] = format_word(g, w0.letters);
  j["length"] = w0.length();
  return j;
}

void cmd_classify(const Flags& f, const LoadedGraph& lg, Outcome& o) {
  const CoxeterGraph& g = lg.graph;
  const Tripartition trip = tripartition(g);
  o.payload = tripartition_json(g, trip);
  Json comps = Json::array();
  for (const auto& c : connected_components(g)) {
    ClassifiedComponent cc{c, classify_component(c)};
    Json j = component_json(g, cc);
    if (c.size() <= kMaxSignatureDimension) {
      const auto sig = definiteness_signature(c, f.tolerance);
      const ComponentKind numeric = numeric_kind(sig, f.tolerance);
      j["min_eigenvalue"] = sig.min_eigenvalue;
      j["zero_count"] = sig.zero_count;
      j["numeric_kind"] = to_string(numeric);
      // The affine numeric test also needs a one-dimensional kernel.
      const bool agrees = numeric == cc.type.kind &&
                          (numeric != ComponentKind::Affine || sig.zero_count == 1);
      if (!agrees) {
        o.diagnostics.push_back(diagnostic("advisory-numeric", "component {" + format_word(g, Word(std::vector<Generator>(c.vertices))) +
                                                                   "}: numeric signature suggests " +
                                                                   to_string(numeric) + ", catalog says " +
                                                                   to_string(cc.type.kind)));
      }
    } else {
      j["min_eigenvalue"] = nullptr;
      j["zero_count"] = nullptr;
      j["numeric_kind"] = nullptr;
    }
    comps.push_back(std::move(j));
  }
  o.payload["components"] = std::move(comps);
}

void cmd_reduce(const Flags& f, const LoadedGraph& lg, Outcome& o) {
  WordEngine engine(lg.graph, engine_options(f));
  const Word w = parse_word(lg.graph, f.word);
  Json j = reduced_word_json(lg.graph, engine.reduce(w));
  j["input"] = format_word(lg.graph, w);
  j["support"] = names_json(lg.graph, engine.support(w).members());
  o.payload = std::move(j);
}

void cmd_length(const Flags& f, const LoadedGraph& lg, Outcome& o) {
  WordEngine engine(lg.graph, engine_options(f));
  const Word w = parse_word(lg.graph, f.word);
  o.payload["input"] = format_word(lg.graph, w);
  o.payload["length"] = engine.length(w);
}

void cmd_equal(const Flags& f, const LoadedGraph& lg, Outcome& o) {
  WordEngine engine(lg.graph, engine_options(f));
  const Word u = parse_word(lg.graph, f.word);
  const Word w = parse_word(lg.graph, f.other);
  o.payload["equal"] = engine.are_equal(u, w);
  o.payload["word_canonical"] = format_word(lg.graph, engine.reduce(u).canonical);
  o.payload["other_canonical"] = format_word(lg.graph, engine.reduce(w).canonical);
}

void cmd_longest(const Flags& f, const LoadedGraph& lg, Outcome& o) {
  const CoxeterGraph& g = lg.graph;
  WordEngine engine(g, engine_options(f));
  Json list = Json::array();
  if (!f.component.empty()) {
    const auto s = g.find(f.component);
    if (!s) throw InputError("unknown generator '" + f.component + "'");
    for (const auto& c : connected_components(g)) {
      if (!c.contains(*s)) continue;
      ClassifiedComponent cc{c, classify_component(c)};
      list.push_back(longest_json(g, cc, engine.longest_element(c)));
    }
  } else {
    for (const auto& cc : tripartition(g).spherical) {
      list.push_back(longest_json(g, cc, engine.longest_element(cc.component)));
    }
  }
  o.payload["components"] = std::move(list);
}

void cmd_center(const Flags& f, const LoadedGraph& lg, Outcome& o) {
  WordEngine engine(lg.graph, engine_options(f));
  o.payload = center_json(lg.graph, center(engine, tripartition(lg.graph)));
}

void cmd_closure(const Flags& f, const LoadedGraph& lg, Outcome& o) {
  if (!f.gens) throw InputError("--gens <words separated by ';'> is required");
  WordEngine engine(lg.graph, engine_options(f));
  const Tripartition trip = tripartition(lg.graph);
  const ClosureVerdict v = normal_closure_verdict(engine, trip, parse_gens(lg.graph, *f.gens));
  o.payload = closure_json(lg.graph, trip, v);
  if (v.verdict == Verdict::Undecided) {
    o.status = "undecided";
    o.code = kExitUndecided;
    Json d = diagnostic(v.undecided_cap, "projection identity test exceeded the cap");
    d["limit"] = v.undecided_limit;
    o.diagnostics.push_back(std::move(d));
  }
}

void cmd_aut_report(const Flags& f, const LoadedGraph& lg, Outcome& o) {
  WordEngine engine(lg.graph, engine_options(f));
  const Tripartition trip = tripartition(lg.graph);
  const AutReport report = aut_report(engine, trip, analysis_options(f));
  o.payload = aut_report_json(lg.graph, report);
  o.payload["normal_subgroups"] = aut_normal_json(aut_normal_characterization(trip, report));
  for (const auto& d : report.diagnostics) o.diagnostics.push_back(diagnostic_from_text(d));
}

void cmd_slender(const Flags&, const LoadedGraph& lg, Outcome& o) {
  const Tripartition trip = tripartition(lg.graph);
  o.payload = slender_json(slender_verdict(trip));
  o.payload["finite_normal"] = finite_normal_json(lg.graph, finite_normal_report(trip));
}

void cmd_verify(const Flags& f, Outcome& o) {
  VerifyOptions v;
  v.suites = f.suites;
  v.trials = f.trials;
  v.max_order = f.max_order;
  v.seed = f.seed;
  v.engine = engine_options(f);
  v.analysis = analysis_options(f);
  v.tolerance = f.tolerance;
  if (!f.builtin && !f.graph_path.empty()) {
    LoadedGraph lg = load_graph(f);
    for (const auto& w : lg.warnings) o.diagnostics.push_back(diagnostic("parse-warning", w));
    v.graph = std::move(lg.graph);
  }
  const VerifyReport report = run_verify(v);
  std::size_t passed = 0, failed = 0;
  Json suites = Json::array();
  for (const auto& s : report.suites) {
    Json j;
    j["name"] = s.name;
    j["passed"] = s.passed;
    j["failed"] = s.failed;
    j["failures"] = s.failures;
    j["notes"] = s.notes;
    suites.push_back(std::move(j));
    passed += s.passed;
    failed += s.failed;
  }
  o.payload["passed"] = passed;
  o.payload["failed"] = failed;
  o.payload["suites"] = std::move(suites);
  if (!report.ok()) {
    o.status = "error";
    o.code = kExitInvariant;
  }
}

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--graph", f.graph_path, "Graph file");
  sub->add_option("--cap-braid", f.cap_braid, "Maximum commutation classes in one braid class");
  sub->add_option("--cap-enum", f.cap_enum, "Maximum group order enumerated by the oracle");
  sub->add_option("--cap-aut", f.cap_aut, "Maximum group order for the automorphism search");
  sub->add_option("--tolerance", f.tolerance, "Zero tolerance for Gram eigenvalues");
  sub->add_option("--seed", f.seed, "Seed for randomized suites");
  sub->add_option("--cache-dir", f.cache_dir, "Directory for cached group tables");
  sub->add_flag("--json", f.json, "Compact JSON output (default)");
  sub->add_flag("--pretty", f.pretty, "Indented JSON output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Coxeter group toolkit", "coxtool"};
  app.require_subcommand(1, 1);

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {{"classify", "Tripartition of the graph into generic, affine and spherical components"},
                      {"reduce", "Reduced and canonical word"},
                      {"equal", "Whether two words are the same element"},
                      {"length", "Length of a word"},
                      {"longest", "Longest elements of spherical components"},
                      {"center", "Centre of W"},
                      {"closure", "Finite / narrow / full-sized verdict for a normal closure"},
                      {"aut-report", "Structure of Aut(W)"},
                      {"slender", "Almost lcH-slender verdicts"},
                      {"verify", "Run the brute-force cross-check suites"}};
  std::map<std::string, CLI::App*> apps;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, f);
    apps[s.name] = sub;
  }
  apps["reduce"]->add_option("--word", f.word, "Word, e.g. \"s1 s2 s1\"")->required();
  apps["length"]->add_option("--word", f.word, "Word")->required();
  apps["equal"]->add_option("--word", f.word, "First word")->required();
  apps["equal"]->add_option("--other", f.other, "Second word")->required();
  apps["longest"]->add_option("--component", f.component, "Only the component containing this generator");
  apps["closure"]->add_option("--gens", f.gens, "Generating words separated by ';'");
  apps["verify"]->add_flag("--builtin", f.builtin, "Use the built-in corpus");
  apps["verify"]->add_option("--suite", f.suites, "Suites to run (default all)")->delimiter(',');
  apps["verify"]->add_option("--trials", f.trials, "Trials per randomized suite");
  apps["verify"]->add_option("--max-order", f.max_order, "Skip finite groups larger than this");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kExitInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  for (const auto& [name, sub] : apps) {
    if (sub->parsed() && sub->count("--help") > 0) {
      out << sub->help();
      return kExitOk;
    }
  }

  Outcome o;
  try {
    if (command == "verify") {
      cmd_verify(f, o);
    } else {
      const LoadedGraph lg = load_graph(f);
      for (const auto& w : lg.warnings) o.diagnostics.push_back(diagnostic("parse-warning", w));
      if (command == "classify") cmd_classify(f, lg, o);
      else if (command == "reduce") cmd_reduce(f, lg, o);
      else if (command == "equal") cmd_equal(f, lg, o);
      else if (command == "length") cmd_length(f, lg, o);
      else if (command == "longest") cmd_longest(f, lg, o);
      else if (command == "center") cmd_center(f, lg, o);
      else if (command == "closure") cmd_closure(f, lg, o);
      else if (command == "aut-report") cmd_aut_report(f, lg, o);
      else if (command == "slender") cmd_slender(f, lg, o);
    }
  } catch (const UndecidedError& e) {
    o.status = "undecided";
    o.code = kExitUndecided;
    o.payload = Json::object();
    Json d = diagnostic(e.cap_name(), e.what());
    d["limit"] = e.limit();
    o.diagnostics.push_back(std::move(d));
  } catch (const InputError& e) {
    o.status = "error";
    o.code = kExitInput;
    o.payload = Json::object();
    o.diagnostics.push_back(diagnostic("input-error", e.what()));
    err << "error: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    o.status = "error";
    o.code = kExitInput;
    o.payload = Json::object();
    o.diagnostics.push_back(diagnostic("precondition", e.what()));
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    o.status = "error";
    o.code = kExitInvariant;
    o.payload = Json::object();
    o.diagnostics.push_back(diagnostic("internal", e.what()));
    err << "internal error: " << e.what() << '\n';
  }

  Json envelope;
  envelope["status"] = o.status;
  envelope["command"] = command;
  envelope["payload"] = std::move(o.payload);
  envelope["diagnostics"] = std::move(o.diagnostics);
  out << (f.pretty ? envelope.dump(2) : envelope.dump()) << '\n';
  return o.code;
}

}  // namespace coxeter::cli
