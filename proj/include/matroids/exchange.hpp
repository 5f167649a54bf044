// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATROIDS_EXCHANGE_HPP_
#define MATROIDS_EXCHANGE_HPP_

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "matroids/constructions.hpp"
#include "matroids/core.hpp"
#include "matroids/errors.hpp"
#include "matroids/matroid.hpp"
#include "matroids/representations.hpp"
#include "matroids/tangle.hpp"

namespace matroids {

inline constexpr int kExchangeVersion = 1;

inline const char* recipe_kind_name(RecipeKind k) {
  switch (k) {
    case RecipeKind::kTruncation:
      return "truncation";
    case RecipeKind::kFreeExtension:
      return "free-extension";
    case RecipeKind::kPrincipalExtension:
      return "principal-extension";
    case RecipeKind::kMinor:
      return "minor";
    case RecipeKind::kDual:
      return "dual";
    case RecipeKind::kDirectSum:
      return "direct-sum";
    case RecipeKind::kModularCutExtension:
      return "modular-cut-extension";
    case RecipeKind::kTangleMatroid:
      return "tangle-matroid";
  }
  return "";
}

// Rebuilds a matroid from its provenance and labels. Recipes are applied
// as stored, without the flattening done by minor() and dual().
inline Matroid from_provenance(const Provenance& p,
                               std::vector<std::string> labels) {
  if (const auto* lin = std::get_if<LinearRep>(&p)) {
    return from_matrix(lin->prime, lin->columns, lin->rows, std::move(labels));
  }
  if (const auto* g = std::get_if<GraphRep>(&p)) {
    return from_graph(*g, std::move(labels));
  }
  if (const auto* ec = std::get_if<EvenCycleRep>(&p)) {
    return even_cycle(ec->graph, ec->odd, std::move(labels));
  }
  if (const auto* sg = std::get_if<SignedGraphRep>(&p)) {
    return signed_graphic(sg->graph, sg->odd, std::move(labels));
  }
  if (const auto* u = std::get_if<UniformSpec>(&p)) {
    return uniform(u->rank, u->size).relabeled(std::move(labels));
  }
  if (const auto* w = std::get_if<WhirlSpec>(&p)) {
    return whirl(w->rank).relabeled(std::move(labels));
  }
  const Recipe& r = std::get<Recipe>(p);
  const std::size_t want = r.kind == RecipeKind::kDirectSum ? 2 : 1;
  if (r.operands.size() != want) {
    throw DomainError(std::string(recipe_kind_name(r.kind)) + " needs " +
                      std::to_string(want) + " operand(s)");
  }
  const Matroid& op = r.operands.front();
  const int n = static_cast<int>(labels.size());
  auto expect_size = [&](int size) {
    if (n != size) {
      throw DomainError(std::string(recipe_kind_name(r.kind)) +
                        " result must have " + std::to_string(size) +
                        " elements");
    }
  };
  std::shared_ptr<const RankOracle> oracle;
  switch (r.kind) {
    case RecipeKind::kTruncation:
      expect_size(op.size());
      if (op.rank() < 1) throw DomainError("truncation needs rank >= 1");
      oracle = std::make_shared<detail::TruncationOracle>(op);
      break;
    case RecipeKind::kFreeExtension:
      expect_size(op.size() + 1);
      oracle = std::make_shared<detail::PrincipalOracle>(op, op.mask());
      break;
    case RecipeKind::kPrincipalExtension:
      expect_size(op.size() + 1);
      check_subset(op, r.flat);
      if (!is_flat(op, r.flat)) {
        throw DomainError("principal extension needs a flat");
      }
      oracle = std::make_shared<detail::PrincipalOracle>(op, r.flat);
      break;
    case RecipeKind::kMinor:
      check_subset(op, r.contract | r.deleted);
      if (r.contract & r.deleted) {
        throw DomainError("contract and delete sets overlap");
      }
      expect_size(op.size() - popcount(r.contract | r.deleted));
      oracle = std::make_shared<detail::MinorOracle>(
          op, r.contract, op.mask() & ~r.contract & ~r.deleted);
      break;
    case RecipeKind::kDual:
      expect_size(op.size());
      oracle = std::make_shared<detail::DualOracle>(op);
      break;
    case RecipeKind::kDirectSum:
      expect_size(op.size() + r.operands[1].size());
      oracle = std::make_shared<detail::DirectSumOracle>(op, r.operands[1]);
      break;
    case RecipeKind::kModularCutExtension:
      expect_size(op.size() + 1);
      for (Subset f : r.flats) {
        check_subset(op, f);
        if (!is_flat(op, f)) {
          throw DomainError("modular cut generators must be flats");
        }
      }
      if (!is_modular_cut(op, r.flats)) {
        throw DomainError("generators do not span a modular cut");
      }
      oracle = std::make_shared<detail::ModularCutOracle>(op, r.flats);
      break;
    case RecipeKind::kTangleMatroid:
      expect_size(op.size());
      for (Subset f : r.flats) check_subset(op, f);
      if (r.order < 1) throw DomainError("tangle order must be positive");
      oracle = std::make_shared<detail::TangleOracle>(
          Tangle(op, r.order, r.flats));
      break;
  }
  return Matroid(GroundSet(std::move(labels)), std::move(oracle), r);
}

namespace detail {

class Writer {
 public:
  std::string str() const { return out_.str(); }

  void line(int depth, const std::string& text) {
    out_ << std::string(2 * depth, ' ') << text << '\n';
  }

  static std::string join(const std::vector<int>& xs) {
    std::string s;
    for (int x : xs) s += " " + std::to_string(x);
    return s;
  }

  static std::string indices(Subset s) { return join(to_indices(s)); }

  void graph(int depth, const GraphRep& g, Subset odd, bool signs) {
    line(depth, "vertices " + std::to_string(g.vertices));
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      std::string text = "edge " + std::to_string(g.edges[i].u) + " " +
                         std::to_string(g.edges[i].v);
      if (signs && contains(odd, static_cast<int>(i))) text += " odd";
      line(depth, text);
    }
  }

  void body(int depth, const Matroid& m) {
    const Provenance& p = m.provenance();
    std::string kind;
    if (std::holds_alternative<LinearRep>(p)) {
      kind = "linear";
    } else if (std::holds_alternative<GraphRep>(p)) {
      kind = "graph";
    } else if (std::holds_alternative<EvenCycleRep>(p)) {
      kind = "even-cycle";
    } else if (std::holds_alternative<SignedGraphRep>(p)) {
      kind = "signed-graph";
    } else if (std::holds_alternative<UniformSpec>(p)) {
      kind = "uniform";
    } else if (std::holds_alternative<WhirlSpec>(p)) {
      kind = "whirl";
    } else {
      kind = recipe_kind_name(std::get<Recipe>(p).kind);
    }
    line(depth, "kind " + kind);
    line(depth, "size " + std::to_string(m.size()));
    std::string labels = "labels";
    for (const std::string& l : m.ground().labels()) labels += " " + l;
    line(depth, labels);

    if (const auto* lin = std::get_if<LinearRep>(&p)) {
      line(depth, "prime " + std::to_string(lin->prime));
      line(depth, "rows " + std::to_string(lin->rows));
      for (int i = 0; i < lin->rows; ++i) {
        std::string row = "row";
        for (const auto& col : lin->columns) row += " " + std::to_string(col[i]);
        line(depth, row);
      }
    } else if (const auto* g = std::get_if<GraphRep>(&p)) {
      graph(depth, *g, 0, false);
    } else if (const auto* ec = std::get_if<EvenCycleRep>(&p)) {
      graph(depth, ec->graph, ec->odd, true);
    } else if (const auto* sg = std::get_if<SignedGraphRep>(&p)) {
      graph(depth, sg->graph, sg->odd, true);
    } else if (const auto* u = std::get_if<UniformSpec>(&p)) {
      line(depth, "rank " + std::to_string(u->rank));
    } else if (const auto* w = std::get_if<WhirlSpec>(&p)) {
      line(depth, "rank " + std::to_string(w->rank));
    } else {
      const Recipe& r = std::get<Recipe>(p);
      switch (r.kind) {
        case RecipeKind::kPrincipalExtension:
          line(depth, "flat" + indices(r.flat));
          break;
        case RecipeKind::kMinor:
          line(depth, "contract" + indices(r.contract));
          line(depth, "delete" + indices(r.deleted));
          break;
        case RecipeKind::kModularCutExtension:
          for (Subset f : r.flats) line(depth, "flat" + indices(f));
          break;
        case RecipeKind::kTangleMatroid:
          line(depth, "order " + std::to_string(r.order));
          for (Subset f : r.flats) line(depth, "small" + indices(f));
          break;
        default:
          break;
      }
      for (const Matroid& op : r.operands) {
        line(depth, "operand");
        body(depth + 1, op);
        line(depth, "end");
      }
    }
  }

 private:
  std::ostringstream out_;
};

struct Token {
  std::string text;
  int column = 0;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

inline std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      if (raw[i] == '#') break;
      const std::size_t start = i;
      while (i < raw.size() &&
             !std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
      }
      line.tokens.push_back(
          {raw.substr(start, i - start), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Line> lines) : lines_(std::move(lines)) {}

  Matroid document() {
    if (lines_.empty()) throw ParseError(1, 1, "empty document");
    const Line& head = lines_[0];
    if (head.tokens[0].text != "matroid-exchange" || head.tokens.size() != 2) {
      throw ParseError(head.number, head.tokens[0].column,
                       "expected 'matroid-exchange <version>'");
    }
    if (head.tokens[1].text != std::to_string(kExchangeVersion)) {
      throw ParseError(head.number, head.tokens[1].column,
                       "unsupported version '" + head.tokens[1].text + "'");
    }
    pos_ = 1;
    Matroid m = body(false);
    if (pos_ != lines_.size()) {
      const Line& l = lines_[pos_];
      throw ParseError(l.number, l.tokens[0].column, "unexpected content");
    }
    return m;
  }

 private:
  [[noreturn]] void fail(const Line& l, std::size_t token,
                         const std::string& what) const {
    const int col =
        token < l.tokens.size() ? l.tokens[token].column
                                : (l.tokens.empty()
                                       ? 1
                                       : l.tokens.back().column +
                                             static_cast<int>(
                                                 l.tokens.back().text.size()));
    throw ParseError(l.number, col, what);
  }

  [[noreturn]] void fail_end(const std::string& what) const {
    const int line = lines_.empty() ? 1 : lines_.back().number + 1;
    throw ParseError(line, 1, what);
  }

  long long integer(const Line& l, std::size_t token) const {
    if (token >= l.tokens.size()) fail(l, token, "missing integer");
    const std::string& t = l.tokens[token].text;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(t, &used);
    } catch (const std::exception&) {
      fail(l, token, "expected an integer, found '" + t + "'");
    }
    if (used != t.size()) {
      fail(l, token, "expected an integer, found '" + t + "'");
    }
    return v;
  }

  int single_int(const Line& l, long long lo, long long hi) const {
    if (l.tokens.size() != 2) fail(l, 1, "expected exactly one value");
    const long long v = integer(l, 1);
    if (v < lo || v > hi) fail(l, 1, "value out of range");
    return static_cast<int>(v);
  }

  Subset index_set(const Line& l, int size) const {
    Subset s = 0;
    for (std::size_t i = 1; i < l.tokens.size(); ++i) {
      const long long v = integer(l, i);
      if (v < 0 || v >= size) fail(l, i, "element index out of range");
      if (contains(s, static_cast<int>(v))) fail(l, i, "repeated index");
      s |= bit(static_cast<int>(v));
    }
    return s;
  }

  const Line& next(const std::string& what) {
    if (pos_ >= lines_.size()) fail_end("unexpected end of document; " + what);
    return lines_[pos_++];
  }

  const Line& expect(const std::string& keyword) {
    const Line& l = next("expected '" + keyword + "'");
    if (l.tokens[0].text != keyword) {
      fail(l, 0, "expected '" + keyword + "', found '" + l.tokens[0].text +
                     "'");
    }
    return l;
  }

  bool peek(const std::string& keyword) const {
    return pos_ < lines_.size() && lines_[pos_].tokens[0].text == keyword;
  }

  GraphRep graph(Subset* odd, bool signs, int size) {
    const Line& vl = expect("vertices");
    GraphRep g;
    g.vertices = single_int(vl, 0, kMaxMatrixRows);
    for (int i = 0; i < size; ++i) {
      const Line& el = expect("edge");
      const std::size_t want = 3;
      if (el.tokens.size() < want || el.tokens.size() > want + 1) {
        fail(el, 1, "expected 'edge <u> <v>'" +
                        std::string(signs ? " optionally followed by 'odd'"
                                          : ""));
      }
      const long long u = integer(el, 1);
      const long long v = integer(el, 2);
      if (u < 0 || u >= g.vertices) fail(el, 1, "vertex out of range");
      if (v < 0 || v >= g.vertices) fail(el, 2, "vertex out of range");
      if (el.tokens.size() == 4) {
        if (!signs || el.tokens[3].text != "odd") {
          fail(el, 3, "unexpected '" + el.tokens[3].text + "'");
        }
        *odd |= bit(i);
      }
      g.edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    return g;
  }

  Matroid operand() {
    expect("operand");
    Matroid m = body(true);
    const Line& l = expect("end");
    if (l.tokens.size() != 1) fail(l, 1, "unexpected content after 'end'");
    return m;
  }

  Matroid body(bool nested) {
    (void)nested;
    const Line& kl = expect("kind");
    if (kl.tokens.size() != 2) fail(kl, 1, "expected 'kind <name>'");
    const std::string kind = kl.tokens[1].text;
    static const char* const kKinds[] = {
        "linear",         "graph",         "even-cycle",
        "signed-graph",   "uniform",       "whirl",
        "truncation",     "free-extension", "principal-extension",
        "minor",          "dual",          "direct-sum",
        "modular-cut-extension", "tangle-matroid"};
    if (std::find(std::begin(kKinds), std::end(kKinds), kind) ==
        std::end(kKinds)) {
      fail(kl, 1, "unknown kind '" + kind + "'");
    }
    const Line& sl = expect("size");
    const int size = single_int(sl, 0, kMaxGroundSize);
    const Line& ll = expect("labels");
    std::vector<std::string> labels;
    for (std::size_t i = 1; i < ll.tokens.size(); ++i) {
      labels.push_back(ll.tokens[i].text);
    }
    if (static_cast<int>(labels.size()) != size) {
      fail(ll, ll.tokens.size(), "expected " + std::to_string(size) +
                                     " labels");
    }
    try {
      GroundSet check(labels);
    } catch (const DomainError& e) {
      fail(ll, 1, e.what());
    }

    Provenance prov;
    if (kind == "linear") {
      const Line& pl = expect("prime");
      LinearRep lin;
      lin.prime = single_int(pl, 0, 1000);
      if (!is_supported_prime(lin.prime)) fail(pl, 1, "unsupported prime");
      lin.rows = single_int(expect("rows"), 0, kMaxMatrixRows);
      lin.columns.assign(size, std::vector<int>(lin.rows, 0));
      for (int i = 0; i < lin.rows; ++i) {
        const Line& rl = expect("row");
        if (static_cast<int>(rl.tokens.size()) != size + 1) {
          fail(rl, rl.tokens.size(), "expected " + std::to_string(size) +
                                         " entries");
        }
        for (int j = 0; j < size; ++j) {
          const long long v = integer(rl, j + 1);
          lin.columns[j][i] =
              static_cast<int>(((v % lin.prime) + lin.prime) % lin.prime);
        }
      }
      prov = std::move(lin);
    } else if (kind == "graph") {
      Subset unused = 0;
      prov = graph(&unused, false, size);
    } else if (kind == "even-cycle") {
      EvenCycleRep rep;
      rep.graph = graph(&rep.odd, true, size);
      prov = std::move(rep);
    } else if (kind == "signed-graph") {
      SignedGraphRep rep;
      rep.graph = graph(&rep.odd, true, size);
      prov = std::move(rep);
    } else if (kind == "uniform") {
      prov = UniformSpec{single_int(expect("rank"), 0, size), size};
    } else if (kind == "whirl") {
      const Line& rl = expect("rank");
      const int r = single_int(rl, 2, kMaxGroundSize / 2);
      if (2 * r != size) fail(rl, 1, "a rank-r whirl has 2r elements");
      prov = WhirlSpec{r};
    } else {
      Recipe r;
      std::vector<Line> sets;
      if (kind == "truncation") {
        r.kind = RecipeKind::kTruncation;
      } else if (kind == "free-extension") {
        r.kind = RecipeKind::kFreeExtension;
      } else if (kind == "principal-extension") {
        r.kind = RecipeKind::kPrincipalExtension;
        sets.push_back(expect("flat"));
      } else if (kind == "minor") {
        r.kind = RecipeKind::kMinor;
        sets.push_back(expect("contract"));
        sets.push_back(expect("delete"));
      } else if (kind == "dual") {
        r.kind = RecipeKind::kDual;
      } else if (kind == "direct-sum") {
        r.kind = RecipeKind::kDirectSum;
      } else if (kind == "modular-cut-extension") {
        r.kind = RecipeKind::kModularCutExtension;
        while (peek("flat")) sets.push_back(next("flat"));
      } else if (kind == "tangle-matroid") {
        r.kind = RecipeKind::kTangleMatroid;
        r.order = single_int(expect("order"), 1, kMaxGroundSize + 1);
        while (peek("small")) sets.push_back(next("small"));
      } else {
        fail(kl, 1, "unknown kind '" + kind + "'");
      }
      r.operands.push_back(operand());
      if (r.kind == RecipeKind::kDirectSum) r.operands.push_back(operand());
      const int op_size = r.operands.front().size();
      switch (r.kind) {
        case RecipeKind::kPrincipalExtension:
          r.flat = index_set(sets[0], op_size);
          break;
        case RecipeKind::kMinor:
          r.contract = index_set(sets[0], op_size);
          r.deleted = index_set(sets[1], op_size);
          break;
        case RecipeKind::kModularCutExtension:
        case RecipeKind::kTangleMatroid:
          for (const Line& l : sets) r.flats.push_back(index_set(l, op_size));
          break;
        default:
          break;
      }
      prov = std::move(r);
    }
    try {
      return from_provenance(prov, std::move(labels));
    } catch (const DomainError& e) {
      fail(kl, 0, e.what());
    }
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Text exchange document; see docs/exchange-format.md.
inline std::string serialize(const Matroid& m) {
  detail::Writer w;
  w.line(0, "matroid-exchange " + std::to_string(kExchangeVersion));
  w.body(0, m);
  return w.str();
}

inline Matroid deserialize(const std::string& text) {
  return detail::Parser(detail::tokenize(text)).document();
}

inline Matroid read_matroid_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserialize(buf.str());
}

inline void write_matroid_file(const std::string& path, const Matroid& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << serialize(m);
  if (!out) throw DomainError("failed writing '" + path + "'");
}

}  // namespace matroids

#endif  // MATROIDS_EXCHANGE_HPP_
