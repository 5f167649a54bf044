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

#ifndef MATROIDS_CONSTRUCTIONS_HPP_
#define MATROIDS_CONSTRUCTIONS_HPP_

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "matroids/core.hpp"
#include "matroids/errors.hpp"
#include "matroids/flats.hpp"
#include "matroids/matroid.hpp"
#include "matroids/representations.hpp"

namespace matroids {

// Vertices are numbered from 1 in labels; edge i-j of a complete graph is
// labelled "i-j" with i < j, and complete graphs list edges
// lexicographically.
inline std::string edge_label(int i, int j) {
  return std::to_string(i) + "-" + std::to_string(j);
}

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

inline std::vector<std::string> with_label(const Matroid& m,
                                           const std::string& label) {
  std::vector<std::string> labels = m.ground().labels();
  labels.push_back(label);
  return labels;
}

class TruncationOracle final : public RankOracle {
 public:
  explicit TruncationOracle(Matroid base)
      : base_(std::move(base)), cap_(base_.rank() - 1) {}
  int rank(Subset x) const override {
    return std::min(base_.rank_unchecked(x), cap_);
  }

 private:
  Matroid base_;
  int cap_;
};

// Single-element extension by the new last element. The element lies in the
// closure of X exactly when cl(X) contains one of the generating flats.
class ModularCutOracle final : public RankOracle {
 public:
  ModularCutOracle(Matroid base, std::vector<Subset> generators)
      : base_(std::move(base)),
        generators_(std::move(generators)),
        e_(bit(base_.size())) {}

  int rank(Subset x) const override {
    const Subset rest = x & ~e_;
    const int r = base_.rank_unchecked(rest);
    if (!(x & e_)) return r;
    for (Subset g : generators_) {
      if (base_.rank_unchecked(rest | g) == r) return r;
    }
    return r + 1;
  }

 private:
  Matroid base_;
  std::vector<Subset> generators_;
  Subset e_;
};

class PrincipalOracle final : public RankOracle {
 public:
  PrincipalOracle(Matroid base, Subset flat)
      : base_(std::move(base)), flat_(flat), e_(bit(base_.size())) {}

  int rank(Subset x) const override {
    const Subset rest = x & ~e_;
    const int r = base_.rank_unchecked(rest);
    if (!(x & e_)) return r;
    return std::min(r + 1, base_.rank_unchecked(rest | flat_));
  }

 private:
  Matroid base_;
  Subset flat_;
  Subset e_;
};

class WhirlOracle final : public RankOracle {
 public:
  WhirlOracle(Matroid wheel, Subset rim)
      : wheel_(std::move(wheel)), rim_(rim) {}
  int rank(Subset x) const override {
    if (x == rim_) return popcount(rim_);
    return wheel_.rank_unchecked(x);
  }

 private:
  Matroid wheel_;
  Subset rim_;
};

inline GraphRep complete_graph(int n) {
  GraphRep g;
  g.vertices = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.edges.push_back({i, j});
  }
  return g;
}

inline std::vector<std::string> complete_graph_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) labels.push_back(edge_label(i, j));
  }
  return labels;
}

}  // namespace detail

// M(K_n): rank n-1 on C(n,2) elements.
inline Matroid clique(int n) {
  detail::require(n >= 1, "clique needs n >= 1");
  detail::require(n * (n - 1) / 2 <= kMaxGroundSize,
                  "clique exceeds the ground set cap");
  return from_graph(detail::complete_graph(n), detail::complete_graph_labels(n));
}

// M(K_{m,n}); side vertices a1..am and b1..bn, edge "ai-bj".
inline Matroid biclique(int m, int n) {
  detail::require(m >= 1 && n >= 1, "biclique needs m, n >= 1");
  detail::require(m * n <= kMaxGroundSize, "biclique exceeds the cap");
  GraphRep g;
  g.vertices = m + n;
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      g.edges.push_back({i, m + j});
      labels.push_back("a" + std::to_string(i + 1) + "-b" +
                       std::to_string(j + 1));
    }
  }
  return from_graph(g, std::move(labels));
}

inline Matroid uniform(int r, int n) {
  detail::require(n >= 0 && n <= kMaxGroundSize, "uniform size out of range");
  detail::require(r >= 0 && r <= n, "uniform needs 0 <= r <= n");
  return Matroid(GroundSet(n), std::make_shared<detail::UniformOracle>(r),
                 UniformSpec{r, n});
}

// The rank-r whirl: the wheel with r spokes s1..sr and rim edges r1..rr,
// where rim edge ri joins rim vertices i and i+1, with the rim relaxed from a
// circuit-hyperplane to a basis.
inline Matroid whirl(int r) {
  detail::require(r >= 2, "whirl needs r >= 2");
  detail::require(2 * r <= kMaxGroundSize, "whirl exceeds the cap");
  GraphRep g;
  g.vertices = r + 1;  // vertex r is the hub
  std::vector<std::string> labels;
  for (int i = 0; i < r; ++i) {
    g.edges.push_back({r, i});
    labels.push_back("s" + std::to_string(i + 1));
  }
  for (int i = 0; i < r; ++i) {
    g.edges.push_back({i, (i + 1) % r});
    labels.push_back("r" + std::to_string(i + 1));
  }
  Matroid wheel = from_graph(g);
  const Subset rim = full_set(2 * r) & ~full_set(r);
  return Matroid(GroundSet(std::move(labels)),
                 std::make_shared<detail::WhirlOracle>(wheel, rim),
                 WhirlSpec{r});
}

// All nonzero vectors of GF(2)^k, labelled by their integer value with the
// first row as the least significant bit.
inline Matroid binary_projective_geometry(int k) {
  detail::require(k >= 1 && k <= 6, "projective geometry rank out of range");
  std::vector<std::vector<int>> columns;
  std::vector<std::string> labels;
  for (int v = 1; v < (1 << k); ++v) {
    std::vector<int> col(k);
    for (int i = 0; i < k; ++i) col[i] = (v >> i) & 1;
    columns.push_back(std::move(col));
    labels.push_back(std::to_string(v));
  }
  return from_matrix(2, columns, k, std::move(labels));
}

inline Matroid pg32() { return binary_projective_geometry(4); }
inline Matroid fano() { return binary_projective_geometry(3); }

// M_n^square: the binary matroid [D_n | v] with v the characteristic vector
// of vertices 1..4. The extension element is labelled "v".
inline Matroid square_ext(int n) {
  detail::require(n >= 4, "square extension needs n >= 4");
  detail::require(n * (n - 1) / 2 + 1 <= kMaxGroundSize, "n too large");
  std::vector<std::vector<int>> columns;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> col(n, 0);
      col[i] = col[j] = 1;
      columns.push_back(std::move(col));
    }
  }
  std::vector<int> v(n, 0);
  v[0] = v[1] = v[2] = v[3] = 1;
  columns.push_back(std::move(v));
  std::vector<std::string> labels = detail::complete_graph_labels(n);
  labels.push_back("v");
  return from_matrix(2, columns, n, std::move(labels));
}

// M_n^triangle as the ternary matroid [I_{n-1} | D'_{n-1} | w]: vertex n is
// the reference vertex, edge i-j has column b_i - b_j (b_n = 0), and
// w = b_1 + b_2 is labelled "e". The point e lies freely on the line
// spanned by the triangle on vertices 1, 2, n.
inline Matroid triangle_ext(int n) {
  detail::require(n >= 3, "triangle extension needs n >= 3");
  detail::require(n * (n - 1) / 2 + 1 <= kMaxGroundSize, "n too large");
  const int rows = n - 1;
  std::vector<std::vector<int>> columns;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> col(rows, 0);
      col[i] = 1;
      if (j < rows) col[j] = 2;
      columns.push_back(std::move(col));
    }
  }
  std::vector<int> w(rows, 0);
  w[0] = w[1] = 1;
  columns.push_back(std::move(w));
  std::vector<std::string> labels = detail::complete_graph_labels(n);
  labels.push_back("e");
  return from_matrix(3, columns, rows, std::move(labels));
}

// Truncation to rank r(M) - 1.
inline Matroid truncation(const Matroid& m) {
  detail::require(m.rank() >= 1, "truncation needs rank >= 1");
  Recipe recipe;
  recipe.kind = RecipeKind::kTruncation;
  recipe.operands.push_back(m);
  return Matroid(m.ground(), std::make_shared<detail::TruncationOracle>(m),
                 std::move(recipe));
}

// Adds a new last element placed freely in the flat F.
inline Matroid principal_extension(const Matroid& m, Subset flat,
                                   const std::string& label = "e") {
  check_subset(m, flat);
  detail::require(is_flat(m, flat), "principal extension needs a flat");
  detail::require(m.size() < kMaxGroundSize, "extension exceeds the cap");
  Recipe recipe;
  recipe.kind = RecipeKind::kPrincipalExtension;
  recipe.operands.push_back(m);
  recipe.flat = flat;
  return Matroid(GroundSet(detail::with_label(m, label)),
                 std::make_shared<detail::PrincipalOracle>(m, flat),
                 std::move(recipe));
}

// Adds a new last element in general position.
inline Matroid free_extension(const Matroid& m,
                              const std::string& label = "e") {
  detail::require(m.size() < kMaxGroundSize, "extension exceeds the cap");
  Recipe recipe;
  recipe.kind = RecipeKind::kFreeExtension;
  recipe.operands.push_back(m);
  return Matroid(GroundSet(detail::with_label(m, label)),
                 std::make_shared<detail::PrincipalOracle>(m, m.mask()),
                 std::move(recipe));
}

// Whether the up-closure of `generators` (a list of flats) is a modular cut:
// it must be closed under intersecting modular pairs.
inline bool is_modular_cut(const Matroid& m,
                           const std::vector<Subset>& generators) {
  const std::vector<Subset> flats = all_flats(m);
  std::vector<Subset> cut;
  for (Subset f : flats) {
    for (Subset g : generators) {
      if (!is_flat(m, g)) return false;
      if (is_subset(g, f)) {
        cut.push_back(f);
        break;
      }
    }
  }
  auto in_cut = [&](Subset f) {
    return std::find(cut.begin(), cut.end(), f) != cut.end();
  };
  for (std::size_t i = 0; i < cut.size(); ++i) {
    for (std::size_t j = i + 1; j < cut.size(); ++j) {
      const Subset a = cut[i];
      const Subset b = cut[j];
      if (m.rank(a) + m.rank(b) == m.rank(a | b) + m.rank(a & b) &&
          !in_cut(a & b)) {
        return false;
      }
    }
  }
  return true;
}

// Single-element extension determined by the modular cut generated by
// `generators`. The empty cut adds a coloop. Throws DomainError when the
// up-closure of the generators is not a modular cut.
inline Matroid modular_cut_extension(const Matroid& m,
                                     std::vector<Subset> generators,
                                     const std::string& label = "e") {
  detail::require(m.size() < kMaxGroundSize, "extension exceeds the cap");
  for (Subset g : generators) {
    check_subset(m, g);
    detail::require(is_flat(m, g), "modular cut generators must be flats");
  }
  detail::require(is_modular_cut(m, generators),
                  "generators do not span a modular cut");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  Recipe recipe;
  recipe.kind = RecipeKind::kModularCutExtension;
  recipe.operands.push_back(m);
  recipe.flats = generators;
  return Matroid(GroundSet(detail::with_label(m, label)),
                 std::make_shared<detail::ModularCutOracle>(m, generators),
                 std::move(recipe));
}

// Every modular cut of m, each given by its minimal flats, in a fixed order.
// The empty cut comes first. Needs at most 64 flats.
inline std::vector<std::vector<Subset>> all_modular_cuts(const Matroid& m) {
  const std::vector<Subset> flats = all_flats(m);
  const int f = static_cast<int>(flats.size());
  if (f > 64) throw ResourceError("modular cut enumeration needs <= 64 flats");
  std::vector<Subset> up(f, 0);
  std::vector<std::vector<int>> meet(f, std::vector<int>(f, -1));
  std::map<Subset, int> index;
  for (int i = 0; i < f; ++i) index[flats[i]] = i;
  std::vector<int> rk(f);
  for (int i = 0; i < f; ++i) rk[i] = m.rank(flats[i]);
  for (int i = 0; i < f; ++i) {
    for (int j = 0; j < f; ++j) {
      if (is_subset(flats[i], flats[j])) up[i] |= bit(j);
      const Subset a = flats[i];
      const Subset b = flats[j];
      if (rk[i] + rk[j] == m.rank(a | b) + m.rank(a & b)) {
        meet[i][j] = index.at(a & b);
      }
    }
  }
  auto close = [&](Subset cut) {
    for (bool changed = true; changed;) {
      changed = false;
      Subset next = cut;
      for (int i : bits(cut)) next |= up[i];
      for (int i : bits(next)) {
        for (int j : bits(next)) {
          if (meet[i][j] >= 0) next |= bit(meet[i][j]);
        }
      }
      if (next != cut) {
        cut = next;
        changed = true;
      }
    }
    return cut;
  };
  std::vector<Subset> found{0};
  std::vector<Subset> frontier{0};
  std::unordered_set<Subset> seen{0};
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (Subset cut : frontier) {
      for (int i = 0; i < f; ++i) {
        if (contains(cut, i)) continue;
        const Subset c = close(cut | bit(i));
        if (seen.insert(c).second) {
          next.push_back(c);
          found.push_back(c);
        }
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  std::vector<std::vector<Subset>> out;
  for (Subset cut : found) {
    std::vector<Subset> minimal;
    for (int i : bits(cut)) {
      bool is_min = true;
      for (int j : bits(cut)) {
        if (j != i && is_subset(flats[j], flats[i])) is_min = false;
      }
      if (is_min) minimal.push_back(flats[i]);
    }
    std::sort(minimal.begin(), minimal.end());
    out.push_back(std::move(minimal));
  }
  return out;
}

// M_n^circle: the free extension of M(K_n), new element "e".
inline Matroid free_ext_clique(int n) {
  detail::require(n >= 3, "free extension of a clique needs n >= 3");
  return free_extension(clique(n), "e");
}

// The triangle on vertices 1, 2, 3 of M(K_n) as a flat.
inline Subset clique_triangle(const Matroid& k, int a = 1, int b = 2,
                              int c = 3) {
  return subset_of(k, {edge_label(a, b), edge_label(a, c), edge_label(b, c)});
}

// N_n^square = M_{n+2}^square / v.
inline Matroid n_square(int n) {
  detail::require(n >= 2, "n_square needs n >= 2");
  const Matroid m = square_ext(n + 2);
  return contraction(m, bit(m.size() - 1));
}

// N_n^triangle = M_{n+2}^triangle / e.
inline Matroid n_triangle(int n) {
  detail::require(n >= 2, "n_triangle needs n >= 2");
  const Matroid m = triangle_ext(n + 2);
  return contraction(m, bit(m.size() - 1));
}

// Even-cycle representation (G, W) of the simplification of N_n^square on n
// vertices: the even edges form K_n, and W holds an odd loop at vertex 1
// together with an odd copy of every edge meeting vertex 1 or 2. Vertices
// 1 and 2 form a blocking pair.
inline EvenCycleRep n_square_even_cycle(int n) {
  detail::require(n >= 2, "n_square_even_cycle needs n >= 2");
  EvenCycleRep rep;
  rep.graph = detail::complete_graph(n);
  const int base = static_cast<int>(rep.graph.edges.size());
  rep.graph.edges.push_back({0, 0});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (i <= 1) rep.graph.edges.push_back({i, j});
    }
  }
  rep.odd = full_set(static_cast<int>(rep.graph.edges.size())) &
            ~full_set(base);
  return rep;
}

// Signed-graph representation (G, W) of the simplification of
// N_n^triangle: K_n with positive edges, a negative edge from vertex 1 to
// every other vertex and a negative loop at every vertex.
inline SignedGraphRep n_triangle_signed(int n) {
  detail::require(n >= 2, "n_triangle_signed needs n >= 2");
  SignedGraphRep rep;
  rep.graph = detail::complete_graph(n);
  const int base = static_cast<int>(rep.graph.edges.size());
  for (int j = 1; j < n; ++j) rep.graph.edges.push_back({0, j});
  for (int i = 0; i < n; ++i) rep.graph.edges.push_back({i, i});
  rep.odd = full_set(static_cast<int>(rep.graph.edges.size())) &
            ~full_set(base);
  return rep;
}

// A spike: tips T, and leg pairs (x_i, y_i) with X = {x_i}, Y = {y_i}.
struct SpikeDecomposition {
  Subset tips = 0;
  std::vector<std::pair<int, int>> legs;
  int rank = 0;

  Subset x_set() const {
    Subset s = 0;
    for (const auto& l : legs) s |= bit(l.first);
    return s;
  }
  Subset y_set() const {
    Subset s = 0;
    for (const auto& l : legs) s |= bit(l.second);
    return s;
  }
  bool operator==(const SpikeDecomposition&) const = default;
};

// The free rank-r spike with one tip: the truncation of the cycle matroid of
// K_{2,r} plus an edge joining its two hubs. Legs are "x1".."xr" (at the
// first hub), "y1".."yr" (at the second), and the tip is "t".
inline Matroid spike(int r) {
  detail::require(r >= 3, "spike needs r >= 3");
  detail::require(2 * r + 1 <= kMaxGroundSize, "spike exceeds the cap");
  GraphRep g;
  g.vertices = r + 2;
  std::vector<std::string> labels;
  for (int i = 0; i < r; ++i) {
    g.edges.push_back({0, 2 + i});
    labels.push_back("x" + std::to_string(i + 1));
  }
  for (int i = 0; i < r; ++i) {
    g.edges.push_back({1, 2 + i});
    labels.push_back("y" + std::to_string(i + 1));
  }
  g.edges.push_back({0, 1});
  labels.push_back("t");
  return truncation(from_graph(g, std::move(labels)));
}

// Searches tip classes in order of least element, pairs the remaining
// elements by the lines through the tip class, and tries every X/Y
// orientation of the pairs (the first pair fixed, by symmetry).
inline std::optional<SpikeDecomposition> is_spike(const Matroid& m) {
  const int r = m.rank();
  if (r < 3 || loops(m) != 0) return std::nullopt;
  const std::vector<Subset> classes = parallel_classes(m);
  for (Subset tips : classes) {
    const Subset rest = m.mask() & ~tips;
    if (popcount(rest) != 2 * r) continue;
    bool simple_rest = true;
    for (Subset c : classes) {
      if (c != tips && popcount(c) != 1) simple_rest = false;
    }
    if (!simple_rest) continue;
    std::vector<std::pair<int, int>> legs;
    Subset seen = 0;
    bool ok = true;
    for (int z : bits(rest)) {
      if (contains(seen, z)) continue;
      const Subset line = closure(m, tips | bit(z)) & rest;
      if (popcount(line) != 2) {
        ok = false;
        break;
      }
      seen |= line;
      legs.emplace_back(lowest(line), lowest(line & (line - 1)));
    }
    if (!ok || static_cast<int>(legs.size()) != r) continue;

    // X is a circuit of S/T: rank r - 1 there while every proper subset
    // obtained by dropping one element stays independent.
    auto circuit_mod_tips = [&](Subset x) {
      if (m.rank_unchecked(x | tips) - 1 != popcount(x) - 1) return false;
      for (int e : bits(x)) {
        if (m.rank_unchecked((x & ~bit(e)) | tips) - 1 != popcount(x) - 1) {
          return false;
        }
      }
      return true;
    };
    const int k = static_cast<int>(legs.size());
    for (Subset flip = 0; flip < (Subset{1} << (k - 1)); ++flip) {
      std::vector<std::pair<int, int>> oriented = legs;
      for (int i = 1; i < k; ++i) {
        if (contains(flip, i - 1)) {
          std::swap(oriented[i].first, oriented[i].second);
        }
      }
      SpikeDecomposition d{tips, oriented, r};
      if (circuit_mod_tips(d.x_set()) && circuit_mod_tips(d.y_set())) {
        return d;
      }
    }
  }
  return std::nullopt;
}

}  // namespace matroids

#endif  // MATROIDS_CONSTRUCTIONS_HPP_
