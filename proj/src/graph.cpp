#include "coxeter/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "coxeter/errors.hpp"
#include "coxeter/kernels.hpp"

namespace coxeter {

std::string BondValue::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(m_);
}

CoxeterGraph::CoxeterGraph(std::vector<std::string> names, const std::vector<Bond>& bonds)
    : names_(std::move(names)) {
  const std::size_t n = names_.size();
  if (n > kMaxGenerators) {
    throw InputError("too many generators: " + std::to_string(n) + " (limit " +
                     std::to_string(kMaxGenerators) + ")");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& nm = names_[i];
    if (nm.empty()) throw InputError("empty generator name");
    for (unsigned char c : nm) {
      if (std::isspace(c) || !std::isprint(c)) {
        throw InputError("generator name '" + nm + "' contains whitespace or non-printable characters");
      }
    }
    if (!index_.emplace(nm, static_cast<Generator>(i)).second) {
      throw InputError("duplicate generator name '" + nm + "'");
    }
  }
  matrix_.assign(n * n, BondValue::finite(2));
  for (std::size_t i = 0; i < n; ++i) matrix_[i * n + i] = BondValue::finite(1);

  for (const auto& b : bonds) {
    if (b.a >= n || b.b >= n) throw InputError("bond references an undeclared generator");
    if (b.a == b.b) throw InputError("bond between '" + names_[b.a] + "' and itself");
    if (b.value.is_finite() && b.value.order() < 2) {
      throw InputError("bond value " + b.value.to_string() + " < 2 for pair " + names_[b.a] +
                       " " + names_[b.b]);
    }
    auto key = std::minmax(b.a, b.b);
    std::pair<Generator, Generator> pair{key.first, key.second};
    BondValue& slot = matrix_[static_cast<std::size_t>(pair.first) * n + pair.second];
    auto it = edges_.find(pair);
    const BondValue previous = it == edges_.end() ? BondValue::finite(2) : it->second;
    if (it != edges_.end() && previous != b.value) {
      throw InputError("conflicting bond values for pair " + names_[pair.first] + " " +
                       names_[pair.second]);
    }
    if (b.value.commutes()) continue;
    edges_.insert_or_assign(pair, b.value);
    slot = b.value;
    matrix_[static_cast<std::size_t>(pair.second) * n + pair.first] = b.value;
  }
}

std::optional<Generator> CoxeterGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Generator CoxeterGraph::index_of(std::string_view name) const {
  auto idx = find(name);
  if (!idx) throw InputError("unknown generator '" + std::string(name) + "'");
  return *idx;
}

CoxeterGraph CoxeterGraph::induced(std::span<const Generator> vertices) const {
  std::vector<std::string> names;
  names.reserve(vertices.size());
  for (Generator v : vertices) names.push_back(names_.at(v));
  std::vector<Bond> bonds;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      BondValue m = bond(vertices[i], vertices[j]);
      if (!m.commutes()) {
        bonds.push_back({static_cast<Generator>(i), static_cast<Generator>(j), m});
      }
    }
  }
  return CoxeterGraph(std::move(names), bonds);
}

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

BondValue parse_bond_value(std::string_view tok, std::size_t line_no) {
  if (tok == "inf") return BondValue::infinity();
  unsigned long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw InputError("line " + std::to_string(line_no) + ": bond value '" + std::string(tok) +
                     "' is neither an integer nor 'inf'");
  }
  if (v < 2) {
    throw InputError("line " + std::to_string(line_no) + ": bond value " + std::to_string(v) +
                     " is < 2");
  }
  if (v > 1'000'000) {
    throw InputError("line " + std::to_string(line_no) + ": bond value " + std::to_string(v) +
                     " is too large");
  }
  return BondValue::finite(static_cast<unsigned>(v));
}

}  // namespace

ParsedGraph parse_graph_with_warnings(std::string_view text) {
  ParsedGraph out;
  std::optional<std::vector<std::string>> names;
  std::unordered_map<std::string, Generator> index;
  std::vector<Bond> bonds;
  std::map<std::pair<Generator, Generator>, BondValue> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (line.starts_with("gens:")) {
      if (names) throw InputError("line " + std::to_string(line_no) + ": duplicate 'gens:' line");
      names.emplace();
      for (auto tok : split_ws(line.substr(5))) {
        std::string nm(tok);
        if (index.count(nm)) {
          throw InputError("line " + std::to_string(line_no) + ": duplicate generator name '" +
                           nm + "'");
        }
        index.emplace(nm, static_cast<Generator>(names->size()));
        names->push_back(std::move(nm));
      }
      if (names->size() > kMaxGenerators) {
        throw InputError("too many generators (limit " + std::to_string(kMaxGenerators) + ")");
      }
    } else if (line.starts_with("bond:")) {
      if (!names) {
        throw InputError("line " + std::to_string(line_no) + ": 'bond:' before 'gens:'");
      }
      auto toks = split_ws(line.substr(5));
      if (toks.size() != 3) {
        throw InputError("line " + std::to_string(line_no) +
                         ": expected 'bond: <name> <name> <m>'");
      }
      auto lookup = [&](std::string_view nm) {
        auto it = index.find(std::string(nm));
        if (it == index.end()) {
          throw InputError("line " + std::to_string(line_no) +
                           ": bond references undeclared generator '" + std::string(nm) + "'");
        }
        return it->second;
      };
      Generator a = lookup(toks[0]);
      Generator b = lookup(toks[1]);
      if (a == b) {
        throw InputError("line " + std::to_string(line_no) + ": bond between '" +
                         std::string(toks[0]) + "' and itself");
      }
      BondValue m = parse_bond_value(toks[2], line_no);
      auto key = std::minmax(a, b);
      std::pair<Generator, Generator> pair{key.first, key.second};
      auto [it, inserted] = seen.emplace(pair, m);
      if (!inserted) {
        if (it->second != m) {
          throw InputError("line " + std::to_string(line_no) + ": conflicting duplicate bond " +
                           std::string(toks[0]) + " " + std::string(toks[1]));
        }
        out.warnings.push_back("line " + std::to_string(line_no) + ": repeated bond " +
                               std::string(toks[0]) + " " + std::string(toks[1]));
        continue;
      }
      if (m.commutes()) {
        out.warnings.push_back("line " + std::to_string(line_no) + ": bond " +
                               std::string(toks[0]) + " " + std::string(toks[1]) +
                               " 2 is implicit and ignored");
        continue;
      }
      bonds.push_back({a, b, m});
    } else {
      throw InputError("line " + std::to_string(line_no) + ": unrecognised line '" +
                       std::string(line) + "'");
    }
  }
  if (!names) throw InputError("missing 'gens:' line");
  out.graph = CoxeterGraph(std::move(*names), bonds);
  return out;
}

CoxeterGraph parse_graph(std::string_view text) { return parse_graph_with_warnings(text).graph; }

std::string serialize_graph(const CoxeterGraph& g) {
  std::string out = "gens:";
  for (const auto& nm : g.names()) {
    out += ' ';
    out += nm;
  }
  out += '\n';
  for (const auto& [pair, m] : g.edges()) {
    out += "bond: " + g.name(pair.first) + ' ' + g.name(pair.second) + ' ' + m.to_string() + '\n';
  }
  return out;
}

Word operator*(const Word& u, const Word& w) {
  Word out;
  out.letters.reserve(u.size() + w.size());
  out.letters.insert(out.letters.end(), u.letters.begin(), u.letters.end());
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  return out;
}

Word inverse(const Word& w) { return Word(std::vector<Generator>(w.letters.rbegin(), w.letters.rend())); }

Word parse_word(const CoxeterGraph& g, std::string_view text) {
  Word w;
  for (auto tok : split_ws(text)) w.letters.push_back(g.index_of(tok));
  return w;
}

std::string format_word(const CoxeterGraph& g, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += g.name(w[i]);
  }
  return out;
}

GeneratorSet::GeneratorSet(std::size_t universe, std::span<const Generator> members)
    : bits_(universe, false) {
  for (Generator s : members) insert(s);
}

std::size_t GeneratorSet::size() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<Generator> GeneratorSet::members() const {
  std::vector<Generator> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(static_cast<Generator>(i));
  }
  return out;
}

bool GeneratorSet::is_subset_of(const GeneratorSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.contains(static_cast<Generator>(i))) return false;
  }
  return true;
}

GeneratorSet parse_generator_set(const CoxeterGraph& g, std::string_view text) {
  GeneratorSet out(g.size());
  for (auto tok : split_ws(text)) {
    // Accept "a,b" as well as "a b".
    std::size_t start = 0;
    while (start <= tok.size()) {
      auto comma = tok.find(',', start);
      auto part = tok.substr(start, comma == std::string_view::npos ? tok.npos : comma - start);
      if (!part.empty()) out.insert(g.index_of(part));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

std::vector<std::string> generator_names(const CoxeterGraph& g, const GeneratorSet& set) {
  std::vector<std::string> out;
  for (Generator s : set.members()) out.push_back(g.name(s));
  return out;
}

GramMatrix gram_matrix(const CoxeterGraph& g) {
  const std::size_t n = g.size();
  GramMatrix gm(n);
  for (std::size_t i = 0; i < n; ++i) {
    gm(i, i) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      BondValue m = g.bond(static_cast<Generator>(i), static_cast<Generator>(j));
      double v = m.is_infinite() ? -1.0 : -std::cos(std::numbers::pi / m.order());
      // cos(pi/2) is 6e-17 in floating point; the form is exactly 0 there.
      if (m.commutes()) v = 0.0;
      gm(i, j) = v;
      gm(j, i) = v;
    }
  }
  return gm;
}

bool is_graph_automorphism(const CoxeterGraph& g, const Permutation& perm) {
  const std::size_t n = g.size();
  if (perm.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Generator p : perm) {
    if (p >= n || hit[p]) return false;
    hit[p] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.bond(perm[i], perm[j]) != g.bond(static_cast<Generator>(i), static_cast<Generator>(j))) {
        return false;
      }
    }
  }
  return true;
}

std::optional<std::vector<Permutation>> graph_automorphisms(const CoxeterGraph& g,
                                                            std::size_t cap) {
  if (g.size() > cap) return std::nullopt;
  return kernels::graph_automorphisms_parallel(g);
}

CoxeterGraph permute_generators(const CoxeterGraph& g, const Permutation& perm) {
  const std::size_t n = g.size();
  std::vector<std::string> names(n);
  for (std::size_t s = 0; s < n; ++s) names.at(perm.at(s)) = g.name(static_cast<Generator>(s));
  std::vector<Bond> bonds;
  for (const auto& [pair, m] : g.edges()) bonds.push_back({perm[pair.first], perm[pair.second], m});
  return CoxeterGraph(std::move(names), bonds);
}

}  // namespace coxeter
