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

#ifndef MATROIDS_REPRESENTATIONS_HPP_
#define MATROIDS_REPRESENTATIONS_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroids/errors.hpp"
#include "matroids/matroid.hpp"
#include "matroids/rep_types.hpp"
#include "matroids/subset.hpp"

namespace matroids {

inline constexpr int kMaxMatrixRows = 64;

inline bool is_supported_prime(int p) {
  return p == 2 || p == 3 || p == 5 || p == 7;
}

// Arithmetic in GF(p) by table lookup, p in {2, 3, 5, 7}.
class PrimeField {
 public:
  explicit PrimeField(int p) : p_(p) {
    if (!is_supported_prime(p)) {
      throw DomainError("unsupported field characteristic " +
                        std::to_string(p));
    }
    for (int a = 0; a < p; ++a) {
      for (int b = 0; b < p; ++b) {
        mul_[a][b] = static_cast<std::uint8_t>((a * b) % p);
        if ((a * b) % p == 1) inv_[a] = static_cast<std::uint8_t>(b);
      }
    }
  }

  int prime() const { return p_; }
  int reduce(int x) const { return ((x % p_) + p_) % p_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const {
    const int s = a + b;
    return static_cast<std::uint8_t>(s >= p_ ? s - p_ : s);
  }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::uint8_t>(a >= b ? a - b : a + p_ - b);
  }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a][b]; }
  std::uint8_t inv(std::uint8_t a) const { return inv_[a]; }

 private:
  int p_;
  std::array<std::array<std::uint8_t, 7>, 7> mul_{};
  std::array<std::uint8_t, 7> inv_{};
};

namespace detail {

// Rank of column subsets of a GF(p) matrix by incremental elimination.
class LinearOracle final : public RankOracle {
 public:
  explicit LinearOracle(const LinearRep& rep)
      : field_(rep.prime), rows_(rep.rows) {
    if (rep.prime == 2) {
      packed_.reserve(rep.columns.size());
      for (const auto& col : rep.columns) {
        std::uint64_t w = 0;
        for (int i = 0; i < rows_; ++i) {
          if (col[i] & 1) w |= std::uint64_t{1} << i;
        }
        packed_.push_back(w);
      }
    } else {
      for (const auto& col : rep.columns) {
        std::vector<std::uint8_t> v(rows_);
        for (int i = 0; i < rows_; ++i) {
          v[i] = static_cast<std::uint8_t>(field_.reduce(col[i]));
        }
        wide_.push_back(std::move(v));
      }
    }
  }

  int rank(Subset x) const override {
    return field_.prime() == 2 ? rank_binary(x) : rank_general(x);
  }

 private:
  int rank_binary(Subset x) const {
    // basis[i] has lowest set bit i.
    std::array<std::uint64_t, kMaxMatrixRows> basis{};
    int r = 0;
    for (int e : bits(x)) {
      std::uint64_t v = packed_[e];
      while (v != 0) {
        const int p = std::countr_zero(v);
        if (basis[p] == 0) {
          basis[p] = v;
          ++r;
          break;
        }
        v ^= basis[p];
      }
      if (r == rows_) break;
    }
    return r;
  }

  int rank_general(Subset x) const {
    std::vector<std::vector<std::uint8_t>> basis;  // normalized pivot rows
    std::vector<int> pivots;
    std::vector<std::uint8_t> v(rows_);
    for (int e : bits(x)) {
      v = wide_[e];
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const std::uint8_t c = v[pivots[b]];
        if (c == 0) continue;
        for (int i = 0; i < rows_; ++i) {
          v[i] = field_.sub(v[i], field_.mul(c, basis[b][i]));
        }
      }
      int pivot = -1;
      for (int i = 0; i < rows_; ++i) {
        if (v[i] != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) continue;
      const std::uint8_t s = field_.inv(v[pivot]);
      for (int i = 0; i < rows_; ++i) v[i] = field_.mul(v[i], s);
      basis.push_back(v);
      pivots.push_back(pivot);
      if (static_cast<int>(basis.size()) == rows_) break;
    }
    return static_cast<int>(basis.size());
  }

  PrimeField field_;
  int rows_;
  std::vector<std::uint64_t> packed_;
  std::vector<std::vector<std::uint8_t>> wide_;
};

class GraphOracle final : public RankOracle {
 public:
  explicit GraphOracle(GraphRep g) : g_(std::move(g)) {}

  int rank(Subset x) const override {
    std::vector<int> parent(g_.vertices);
    for (int i = 0; i < g_.vertices; ++i) parent[i] = i;
    auto find = [&](int a) {
      while (parent[a] != a) {
        parent[a] = parent[parent[a]];
        a = parent[a];
      }
      return a;
    };
    int r = 0;
    for (int e : bits(x)) {
      const int a = find(g_.edges[e].u);
      const int b = find(g_.edges[e].v);
      if (a != b) {
        parent[a] = b;
        ++r;
      }
    }
    return r;
  }

 private:
  GraphRep g_;
};

inline void check_graph(const GraphRep& g) {
  if (g.vertices < 0) throw DomainError("negative vertex count");
  if (static_cast<int>(g.edges.size()) > kMaxGroundSize) {
    throw DomainError("graph has more edges than the ground set cap");
  }
  for (const Edge& e : g.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.vertices || e.v >= g.vertices) {
      throw DomainError("edge endpoint out of range");
    }
  }
}

inline GroundSet make_ground(int n, std::vector<std::string> labels) {
  if (labels.empty()) return GroundSet(n);
  if (static_cast<int>(labels.size()) != n) {
    throw DomainError("label count does not match element count");
  }
  return GroundSet(std::move(labels));
}

// Column of the stacked incidence / odd-row matrix over GF(2).
inline LinearRep even_cycle_matrix(const EvenCycleRep& rep) {
  LinearRep lin;
  lin.prime = 2;
  lin.rows = rep.graph.vertices + 1;
  for (std::size_t i = 0; i < rep.graph.edges.size(); ++i) {
    const Edge& e = rep.graph.edges[i];
    std::vector<int> col(lin.rows, 0);
    col[e.u] ^= 1;
    col[e.v] ^= 1;
    col[rep.graph.vertices] = contains(rep.odd, static_cast<int>(i)) ? 1 : 0;
    lin.columns.push_back(std::move(col));
  }
  return lin;
}

inline LinearRep signed_graph_matrix(const SignedGraphRep& rep) {
  LinearRep lin;
  lin.prime = 3;
  lin.rows = rep.graph.vertices;
  for (std::size_t i = 0; i < rep.graph.edges.size(); ++i) {
    const Edge& e = rep.graph.edges[i];
    std::vector<int> col(lin.rows, 0);
    const bool odd = contains(rep.odd, static_cast<int>(i));
    col[e.u] = (col[e.u] + 1) % 3;
    col[e.v] = (col[e.v] + (odd ? 1 : 2)) % 3;
    lin.columns.push_back(std::move(col));
  }
  return lin;
}

}  // namespace detail

inline Matroid from_matrix(int p, const std::vector<std::vector<int>>& columns,
                           int rows = -1, std::vector<std::string> labels = {}) {
  if (!is_supported_prime(p)) {
    throw DomainError("unsupported field characteristic " + std::to_string(p));
  }
  LinearRep rep;
  rep.prime = p;
  rep.rows = columns.empty() ? (rows < 0 ? 0 : rows)
                             : static_cast<int>(columns.front().size());
  if (rows >= 0 && rows != rep.rows) {
    throw DomainError("column length does not match the row count");
  }
  if (rep.rows > kMaxMatrixRows) throw DomainError("too many matrix rows");
  if (static_cast<int>(columns.size()) > kMaxGroundSize) {
    throw DomainError("too many columns for the ground set cap");
  }
  for (const auto& col : columns) {
    if (static_cast<int>(col.size()) != rep.rows) {
      throw DomainError("ragged matrix: columns differ in length");
    }
    std::vector<int> reduced(col.size());
    for (std::size_t i = 0; i < col.size(); ++i) {
      reduced[i] = ((col[i] % p) + p) % p;
    }
    rep.columns.push_back(std::move(reduced));
  }
  const int n = static_cast<int>(rep.columns.size());
  auto oracle = std::make_shared<detail::LinearOracle>(rep);
  return Matroid(detail::make_ground(n, std::move(labels)), std::move(oracle),
                 std::move(rep));
}

inline Matroid from_graph(const GraphRep& g,
                          std::vector<std::string> labels = {}) {
  detail::check_graph(g);
  const int n = static_cast<int>(g.edges.size());
  return Matroid(detail::make_ground(n, std::move(labels)),
                 std::make_shared<detail::GraphOracle>(g), g);
}

inline Matroid even_cycle(const GraphRep& g, Subset odd,
                          std::vector<std::string> labels = {}) {
  detail::check_graph(g);
  const int n = static_cast<int>(g.edges.size());
  if (odd & ~full_set(n)) throw DomainError("odd set is not a set of edges");
  if (g.vertices + 1 > kMaxMatrixRows) throw DomainError("too many vertices");
  EvenCycleRep rep{g, odd};
  auto oracle =
      std::make_shared<detail::LinearOracle>(detail::even_cycle_matrix(rep));
  return Matroid(detail::make_ground(n, std::move(labels)), std::move(oracle),
                 std::move(rep));
}

inline Matroid signed_graphic(const GraphRep& g, Subset odd,
                              std::vector<std::string> labels = {}) {
  detail::check_graph(g);
  const int n = static_cast<int>(g.edges.size());
  if (odd & ~full_set(n)) throw DomainError("odd set is not a set of edges");
  if (g.vertices > kMaxMatrixRows) throw DomainError("too many vertices");
  SignedGraphRep rep{g, odd};
  auto oracle =
      std::make_shared<detail::LinearOracle>(detail::signed_graph_matrix(rep));
  return Matroid(detail::make_ground(n, std::move(labels)), std::move(oracle),
                 std::move(rep));
}

// Least pair u < v (lexicographically) such that every odd edge meets u or v.
// A loop at u or v counts as meeting it. A single covering vertex also yields
// a pair. Graphs with fewer than two vertices use the pair (0, 0).
inline std::optional<std::pair<int, int>> has_blocking_pair(const GraphRep& g,
                                                            Subset odd) {
  detail::check_graph(g);
  auto covers = [&](int u, int v) {
    for (int i : bits(odd)) {
      const Edge& e = g.edges.at(i);
      if (e.u != u && e.u != v && e.v != u && e.v != v) return false;
    }
    return true;
  };
  if (g.vertices == 0) return std::nullopt;
  if (g.vertices == 1) {
    if (covers(0, 0)) return std::make_pair(0, 0);
    return std::nullopt;
  }
  for (int u = 0; u < g.vertices; ++u) {
    for (int v = u + 1; v < g.vertices; ++v) {
      if (covers(u, v)) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

}  // namespace matroids

#endif  // MATROIDS_REPRESENTATIONS_HPP_
