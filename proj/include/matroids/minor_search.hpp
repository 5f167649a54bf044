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

#ifndef MATROIDS_MINOR_SEARCH_HPP_
#define MATROIDS_MINOR_SEARCH_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "matroids/connectivity.hpp"
#include "matroids/constructions.hpp"
#include "matroids/core.hpp"
#include "matroids/errors.hpp"
#include "matroids/flats.hpp"
#include "matroids/isomorphism.hpp"
#include "matroids/matroid.hpp"
#include "matroids/representations.hpp"

namespace matroids {

struct MinorSearchOptions {
  int size_cap = 24;
  int workers = 1;
};

namespace detail {

// Runs fn(0), fn(1), ... and returns the result of the least index that
// succeeds, whatever the number of workers.
template <typename T, typename Fn>
std::optional<T> first_success(std::size_t count, int workers, Fn fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (std::optional<T> r = fn(i)) return r;
    }
    return std::nullopt;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::optional<T> result;
  std::exception_ptr error;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        if (i > best.load()) return;
        try {
          std::optional<T> r = fn(i);
          if (!r) continue;
          std::lock_guard<std::mutex> lock(mu);
          if (i < best.load()) {
            best = i;
            result = std::move(r);
          }
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!error) error = std::current_exception();
          best = 0;
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return result;
}

// Number of parallel classes among the nonloops of `allowed` under `rank`.
inline int count_points(Subset allowed, const RankFn& rank) {
  std::vector<int> reps;
  for (int e : bits(allowed)) {
    if (rank(bit(e)) == 0) continue;
    bool fresh = true;
    for (int f : reps) {
      if (rank(bit(e) | bit(f)) == 1) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(e);
  }
  return static_cast<int>(reps.size());
}

inline Subset greedy_basis(const Matroid& m, Subset x) {
  Subset b = 0;
  for (int e : bits(x)) {
    if (m.rank_unchecked(b | bit(e)) > popcount(b)) b |= bit(e);
  }
  return b;
}

}  // namespace detail

// Searches for n as a minor of m. Contracting an independent set C leaves the
// flat F = cl(C) as the loops, and the contraction depends only on F, so the
// search runs over the flats of rank r(m) - r(n): the nonloops of n must
// embed into (m / F) | (E - F) and its loops into F - C. Certificates come
// from the least flat (by mask) that works.
inline std::optional<MinorCertificate> has_minor(
    const Matroid& m, const Matroid& n, const MinorSearchOptions& opt = {}) {
  if (m.size() > opt.size_cap) {
    throw ResourceError("minor search is capped at |E| <= " +
                        std::to_string(opt.size_cap));
  }
  if (n.size() > m.size()) return std::nullopt;
  const int k = m.rank() - n.rank();
  if (k < 0) return std::nullopt;
  if (n.size() - n.rank() > m.size() - m.rank()) return std::nullopt;
  const Subset nloops = loops(n);
  const int loop_count = popcount(nloops);
  const std::vector<int> pattern_elems = to_indices(n.mask() & ~nloops);
  const Matroid pattern = restriction(n, n.mask() & ~nloops);
  const int points = epsilon(n);
  const std::vector<Subset> flats = flats_of_rank(m, k);

  auto attempt = [&](std::size_t i) -> std::optional<MinorCertificate> {
    const Subset f = flats[i];
    if (popcount(f) - k < loop_count) return std::nullopt;
    const Subset allowed = m.mask() & ~f;
    if (popcount(allowed) < pattern.size()) return std::nullopt;
    const RankFn host = [&m, f, k](Subset x) {
      return m.rank_unchecked(x | f) - k;
    };
    if (detail::count_points(allowed, host) < points) return std::nullopt;
    const std::optional<std::vector<int>> emb =
        find_restriction_embedding(pattern, allowed, host);
    if (!emb) return std::nullopt;
    MinorCertificate cert;
    cert.contract = detail::greedy_basis(m, f);
    cert.mapping.assign(n.size(), -1);
    for (std::size_t j = 0; j < pattern_elems.size(); ++j) {
      cert.mapping[pattern_elems[j]] = (*emb)[j];
    }
    Subset spare = f & ~cert.contract;
    for (int l : bits(nloops)) {
      cert.mapping[l] = lowest(spare);
      spare &= spare - 1;
    }
    cert.deleted = m.mask() & ~cert.contract & ~cert.image();
    return cert;
  };
  std::optional<MinorCertificate> cert =
      detail::first_success<MinorCertificate>(flats.size(), opt.workers,
                                              attempt);
  if (cert && !validate_certificate(m, n, *cert)) {
    throw InternalError("minor search produced an invalid certificate");
  }
  return cert;
}

// An M(K_{n+1})-minor.
inline std::optional<MinorCertificate> find_clique_minor(
    const Matroid& m, int n, const MinorSearchOptions& opt = {}) {
  if (n < 2) throw DomainError("clique minor search needs n >= 2");
  if (n * (n + 1) / 2 > m.size()) return std::nullopt;
  return has_minor(m, clique(n + 1), opt);
}

struct BicliqueWitness {
  std::vector<int> left;
  std::vector<int> right;

  bool operator==(const BicliqueWitness&) const = default;
};

// Vertex sets A, B of size m, disjoint, with every A-B pair adjacent. A is
// grown in increasing vertex order while the common neighbourhood still has
// m vertices; B is the m least common neighbours.
inline std::optional<BicliqueWitness> find_biclique_subgraph(
    const GraphRep& g, int m) {
  if (m < 1) throw DomainError("biclique search needs m >= 1");
  detail::check_graph(g);
  if (g.vertices > 64) {
    throw ResourceError("biclique search needs <= 64 vertices");
  }
  std::vector<Subset> adj(g.vertices, 0);
  for (const Edge& e : g.edges) {
    if (e.is_loop()) continue;
    adj[e.u] |= bit(e.v);
    adj[e.v] |= bit(e.u);
  }
  std::vector<int> left;
  std::optional<BicliqueWitness> found;
  auto grow = [&](auto&& self, int from, Subset common) -> void {
    if (found) return;
    if (static_cast<int>(left.size()) == m) {
      BicliqueWitness w{left, {}};
      for (int v : bits(common)) {
        if (static_cast<int>(w.right.size()) == m) break;
        w.right.push_back(v);
      }
      found = w;
      return;
    }
    for (int v = from; v < g.vertices; ++v) {
      const Subset next = common & adj[v];
      if (popcount(next) < m) continue;
      left.push_back(v);
      self(self, v + 1, next);
      left.pop_back();
      if (found) return;
    }
  };
  grow(grow, 0, full_set(g.vertices));
  return found;
}

// A restriction of m isomorphic to M(K_{k,k}); the certificate deletes the
// rest.
inline std::optional<MinorCertificate> find_biclique_restriction(
    const Matroid& m, int k) {
  if (k < 1) throw DomainError("biclique search needs m >= 1");
  if (k * k > m.size()) return std::nullopt;
  const Matroid target = biclique(k, k);
  std::optional<std::vector<int>> emb = find_restriction_embedding(target, m);
  if (!emb) return std::nullopt;
  MinorCertificate cert;
  cert.mapping = *emb;
  cert.deleted = m.mask() & ~cert.image();
  return cert;
}

struct GraphicOptions {
  int size_cap = 18;
  std::uint64_t node_cap = 20'000'000;
};

namespace detail {

inline bool same_ranks(const Matroid& a, const Matroid& b) {
  const Subset count = Subset{1} << a.size();
  for (Subset x = 0; x < count; ++x) {
    if (a.rank_unchecked(x) != b.rank_unchecked(x)) return false;
  }
  return true;
}

// For a connected matroid with at least two elements: r + 1 cocircuits
// covering every element exactly twice, read as vertex stars, such that the
// resulting graph has exactly the matroid's rank function.
inline std::optional<GraphRep> graph_of_connected(const Matroid& m,
                                                  std::uint64_t node_cap) {
  const int n = m.size();
  const int vertices = m.rank() + 1;
  if (vertices == 2) {
    // a parallel class: both vertex stars are the whole ground set
    GraphRep g;
    g.vertices = 2;
    g.edges.assign(n, Edge{0, 1});
    return g;
  }
  const std::vector<Subset> stars = cocircuits(m);
  std::vector<int> count(n, 0);
  std::vector<int> chosen;
  std::uint64_t nodes = 0;
  std::optional<GraphRep> found;

  auto fits = [&](Subset c) {
    for (int e : bits(c)) {
      if (count[e] >= 2) return false;
    }
    return true;
  };
  auto add = [&](std::size_t i, int d) {
    for (int e : bits(stars[i])) count[e] += d;
  };
  auto build = [&]() {
    GraphRep g;
    g.vertices = vertices;
    g.edges.assign(n, Edge{});
    std::vector<int> first(n, -1);
    for (int v = 0; v < vertices; ++v) {
      for (int e : bits(stars[chosen[v]])) {
        if (first[e] < 0) {
          first[e] = v;
        } else {
          g.edges[e] = Edge{first[e], v};
        }
      }
    }
    return g;
  };
  auto dfs = [&](auto&& self) -> void {
    if (found) return;
    if (++nodes > node_cap) {
      throw ResourceError("graphicness search exceeded its node cap");
    }
    int e = -1;
    for (int i = 0; i < n; ++i) {
      if (count[i] < 2) {
        e = i;
        break;
      }
    }
    const int left = vertices - static_cast<int>(chosen.size());
    if (e < 0) {
      if (left != 0) return;
      GraphRep g = build();
      if (same_ranks(from_graph(g), m)) found = std::move(g);
      return;
    }
    const int need = 2 - count[e];
    if (left < need) return;
    for (std::size_t i = 0; i < stars.size(); ++i) {
      if (!contains(stars[i], e) || !fits(stars[i])) continue;
      if (std::find(chosen.begin(), chosen.end(), static_cast<int>(i)) !=
          chosen.end()) {
        continue;
      }
      chosen.push_back(static_cast<int>(i));
      add(i, 1);
      if (need == 2) {
        // Both stars at e are chosen here, in increasing order.
        for (std::size_t j = i + 1; j < stars.size(); ++j) {
          if (!contains(stars[j], e) || !fits(stars[j])) continue;
          if (std::find(chosen.begin(), chosen.end(), static_cast<int>(j)) !=
              chosen.end()) {
            continue;
          }
          chosen.push_back(static_cast<int>(j));
          add(j, 1);
          self(self);
          add(j, -1);
          chosen.pop_back();
          if (found) break;
        }
      } else {
        self(self);
      }
      add(i, -1);
      chosen.pop_back();
      if (found) return;
    }
  };
  dfs(dfs);
  return found;
}

}  // namespace detail

// A graph whose cycle matroid equals m, with edge i standing for element i,
// or nullopt when m is not graphic. Each connected component is rebuilt from
// a family of cocircuits forming its vertex stars; loops sit on vertex 0 and
// coloops are bridges on fresh vertices.
inline std::optional<GraphRep> is_graphic(const Matroid& m,
                                          const GraphicOptions& opt = {}) {
  if (m.size() > opt.size_cap) {
    throw ResourceError("graphicness test is capped at |E| <= " +
                        std::to_string(opt.size_cap));
  }
  const int r = m.rank();
  if (epsilon(m) > r * (r + 1) / 2) return std::nullopt;
  for (Subset line : lines(m)) {
    if (epsilon(restriction(m, line)) > 3) return std::nullopt;
  }
  GraphRep g;
  g.edges.assign(m.size(), Edge{});
  std::vector<int> pending_loops;
  for (Subset comp : connected_components(m)) {
    if (popcount(comp) == 1) {
      const int e = lowest(comp);
      if (m.rank_unchecked(comp) == 0) {
        pending_loops.push_back(e);
      } else {
        g.edges[e] = Edge{g.vertices, g.vertices + 1};
        g.vertices += 2;
      }
      continue;
    }
    const std::optional<GraphRep> part =
        detail::graph_of_connected(restriction(m, comp), opt.node_cap);
    if (!part) return std::nullopt;
    const std::vector<int> elems = to_indices(comp);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      g.edges[elems[i]] = Edge{part->edges[i].u + g.vertices,
                               part->edges[i].v + g.vertices};
    }
    g.vertices += part->vertices;
  }
  if (!pending_loops.empty() && g.vertices == 0) g.vertices = 1;
  for (int e : pending_loops) g.edges[e] = Edge{0, 0};
  if (!detail::same_ranks(from_graph(g), m)) {
    throw InternalError("graphicness test built a wrong graph");
  }
  return g;
}

enum class ExtensionReason { kLoop, kColoop, kParallel, kNoneOfThese };

inline const char* reason_name(ExtensionReason r) {
  switch (r) {
    case ExtensionReason::kLoop:
      return "loop";
    case ExtensionReason::kColoop:
      return "coloop";
    case ExtensionReason::kParallel:
      return "parallel";
    case ExtensionReason::kNoneOfThese:
      return "none-of-these";
  }
  return "";
}

struct ExtensionClass {
  bool graphic = false;
  ExtensionReason reason = ExtensionReason::kNoneOfThese;
  int n = 0;                  // m \ e is M(K_{n+1})
  std::optional<int> partner; // an element parallel to e
  std::vector<int> clique_map;  // clique(n+1) element i -> element of m
};

// For an extension m of M(K_{n+1}) by e: graphic exactly when e is a loop, a
// coloop, or parallel to another element.
inline ExtensionClass classify_clique_extension(const Matroid& m, int e) {
  if (e < 0 || e >= m.size()) throw DomainError("element out of range");
  const Matroid rest = deletion(m, bit(e));
  ExtensionClass out;
  out.n = rest.rank();
  const int k = out.n + 1;
  if (rest.size() != k * (k - 1) / 2) {
    throw DomainError("m \\ e is not the cycle matroid of a clique");
  }
  const std::optional<std::vector<int>> iso = is_isomorphic(clique(k), rest);
  if (!iso) throw DomainError("m \\ e is not the cycle matroid of a clique");
  for (int x : *iso) out.clique_map.push_back(x < e ? x : x + 1);

  if (m.rank_unchecked(bit(e)) == 0) {
    out.graphic = true;
    out.reason = ExtensionReason::kLoop;
  } else if (m.rank_unchecked(m.mask() & ~bit(e)) < m.rank()) {
    out.graphic = true;
    out.reason = ExtensionReason::kColoop;
  } else {
    for (int f : bits(m.mask() & ~bit(e))) {
      if (m.rank_unchecked(bit(e) | bit(f)) == 1) {
        out.graphic = true;
        out.reason = ExtensionReason::kParallel;
        out.partner = f;
        break;
      }
    }
  }
  return out;
}

enum class ExtensionFamily { kCircle, kTriangle, kSquare };

inline std::string family_name(ExtensionFamily f, int m) {
  switch (f) {
    case ExtensionFamily::kCircle:
      return "M_" + std::to_string(m) + "^circle";
    case ExtensionFamily::kTriangle:
      return "M_" + std::to_string(m) + "^triangle";
    case ExtensionFamily::kSquare:
      return "M_" + std::to_string(m) + "^square";
  }
  return "";
}

inline Matroid family_member(ExtensionFamily f, int m) {
  switch (f) {
    case ExtensionFamily::kCircle:
      return free_ext_clique(m);
    case ExtensionFamily::kTriangle:
      return triangle_ext(m);
    case ExtensionFamily::kSquare:
      return square_ext(m);
  }
  return Matroid();
}

struct ReductionResult {
  bool closed = false;
  ExtensionFamily family = ExtensionFamily::kCircle;
  int index = 0;
  MinorCertificate certificate;
  std::vector<std::string> transcript;
};

namespace detail {

// A minor of m of the form (m / contracted) restricted to e and the edges
// between surviving clique vertices. Contracting the edge uv merges v into
// u; the edge uw then stands for the merged class and vw is dropped.
class CliqueMinorState {
 public:
  CliqueMinorState(const Matroid& m, int e,
                   const std::vector<std::vector<int>>& edge, int vertices)
      : m_(&m), e_(e), edge_(&edge) {
    for (int v = 0; v < vertices; ++v) alive_.push_back(v);
  }

  const std::vector<int>& alive() const { return alive_; }
  Subset contracted() const { return contracted_; }

  int rank(Subset x) const {
    return m_->rank_unchecked(x | contracted_) - contract_rank_;
  }

  Subset edges(const std::vector<int>& vs) const {
    Subset s = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        s |= bit((*edge_)[vs[i]][vs[j]]);
      }
    }
    return s;
  }

  bool spans(const std::vector<int>& vs) const {
    const Subset s = edges(vs);
    return rank(s | bit(e_)) == rank(s);
  }

  bool e_nongraphic() const {
    if (rank(bit(e_)) == 0) return false;
    const Subset all = edges(alive_);
    if (rank(all) < rank(all | bit(e_))) return false;
    for (int f : bits(all)) {
      if (rank(bit(e_) | bit(f)) == 1) return false;
    }
    return true;
  }

  void contract(int u, int v) {
    contracted_ |= bit((*edge_)[u][v]);
    contract_rank_ = m_->rank_unchecked(contracted_);
    alive_.erase(std::find(alive_.begin(), alive_.end(), v));
  }

 private:
  const Matroid* m_;
  int e_;
  const std::vector<std::vector<int>>* edge_;
  std::vector<int> alive_;
  Subset contracted_ = 0;
  int contract_rank_ = 0;
};

inline std::string vertex_list(const std::vector<int>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vs[i] + 1);
  }
  return s + "}";
}

}  // namespace detail

// Follows the constructive proof that a nongraphic extension of a large clique
// has an M_m^circle, M_m^triangle or M_m^square minor. Vertices in the
// transcript are those of the clique m \ e, numbered from 1 through the
// isomorphism with clique(n+1).
inline ReductionResult reduce_clique_extension(const Matroid& m, int e,
                                               int target_m) {
  if (target_m < 4) throw DomainError("reduction needs m >= 4");
  const ExtensionClass cls = classify_clique_extension(m, e);
  if (cls.graphic) throw DomainError("the extension is graphic");
  const int vertices = cls.n + 1;
  std::vector<std::vector<int>> edge(vertices, std::vector<int>(vertices, -1));
  {
    int idx = 0;
    for (int i = 0; i < vertices; ++i) {
      for (int j = i + 1; j < vertices; ++j) {
        edge[i][j] = edge[j][i] = cls.clique_map[idx++];
      }
    }
  }
  ReductionResult out;
  auto log = [&](std::string line) {
    out.transcript.push_back(std::move(line));
  };

  // Flats of the clique are vertex partitions; F is a union of cliques on
  // disjoint blocks. Descend from E - e by splitting blocks while e stays
  // spanned.
  std::vector<std::vector<int>> blocks(1);
  for (int v = 0; v < vertices; ++v) blocks[0].push_back(v);
  auto flat_of = [&](const std::vector<std::vector<int>>& bs) {
    Subset s = 0;
    for (const auto& b : bs) {
      for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i + 1; j < b.size(); ++j) {
          s |= bit(edge[b[i]][b[j]]);
        }
      }
    }
    return s;
  };
  auto spans_e = [&](Subset f) {
    return m.rank_unchecked(f | bit(e)) == m.rank_unchecked(f);
  };
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t b = 0; b < blocks.size() && !progress; ++b) {
      const std::vector<int> block = blocks[b];
      const int s = static_cast<int>(block.size());
      for (Subset split = 1; split < (Subset{1} << (s - 1)) && !progress;
           ++split) {
        // block[s-1] always stays in the second part.
        std::vector<int> first;
        std::vector<int> second;
        for (int i = 0; i < s; ++i) {
          (contains(split, i) ? first : second).push_back(block[i]);
        }
        std::vector<std::vector<int>> next = blocks;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(b));
        if (first.size() >= 2) next.push_back(first);
        if (second.size() >= 2) next.push_back(second);
        if (spans_e(flat_of(next))) {
          std::sort(next.begin(), next.end());
          blocks = std::move(next);
          progress = true;
        }
      }
    }
  }
  {
    std::string line = "minimal flat F spanning e: blocks";
    for (const auto& b : blocks) line += " " + detail::vertex_list(b);
    log(line);
  }
  const Subset flat = flat_of(blocks);
  std::vector<int> hull;
  for (const auto& b : blocks) hull.insert(hull.end(), b.begin(), b.end());
  std::sort(hull.begin(), hull.end());
  const int hull_rank = static_cast<int>(hull.size()) - 1;
  log("F has rank " + std::to_string(m.rank_unchecked(flat)) + " in " +
      std::to_string(blocks.size()) + " block(s); connected hull " +
      detail::vertex_list(hull) + " has rank " + std::to_string(hull_rank));

  auto finish = [&](const detail::CliqueMinorState& st,
                    const std::vector<int>& keep, ExtensionFamily family) {
    const Subset kept = st.edges(keep) | bit(e);
    const Subset deleted = m.mask() & ~kept & ~st.contracted();
    const Matroid minor_m = minor(m, st.contracted(), deleted);
    const Matroid target = family_member(family, target_m);
    const std::optional<std::vector<int>> iso =
        is_isomorphic(target, minor_m);
    if (!iso) {
      log("minor on " + detail::vertex_list(keep) + " is not " +
          family_name(family, target_m));
      return false;
    }
    const std::vector<int> kept_elems = to_indices(kept);
    MinorCertificate cert;
    cert.contract = st.contracted();
    cert.deleted = deleted;
    for (int x : *iso) cert.mapping.push_back(kept_elems[x]);
    if (!validate_certificate(m, target, cert)) {
      throw InternalError("reduction certificate failed validation");
    }
    out.closed = true;
    out.family = family;
    out.index = target_m;
    out.certificate = std::move(cert);
    log("certified " + family_name(family, target_m) + " on vertices " +
        detail::vertex_list(keep));
    return true;
  };

  // Reduction from a modular flat (the clique on `s`) spanning e.
  auto modular_branch = [&](detail::CliqueMinorState st, std::vector<int> s) {
    for (;;) {
      bool shrunk = true;
      while (shrunk) {
        shrunk = false;
        for (std::size_t i = 0; i < s.size(); ++i) {
          std::vector<int> smaller = s;
          smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
          if (st.spans(smaller)) {
            s = std::move(smaller);
            shrunk = true;
            break;
          }
        }
      }
      log("minimal modular flat: clique on " + detail::vertex_list(s));
      bool contracted = false;
      for (std::size_t i = 0; i < s.size() && !contracted; ++i) {
        for (std::size_t j = i + 1; j < s.size() && !contracted; ++j) {
          detail::CliqueMinorState trial = st;
          trial.contract(s[i], s[j]);
          if (trial.e_nongraphic()) {
            log("contract " + edge_label(s[i] + 1, s[j] + 1));
            st = trial;
            s.erase(s.begin() + static_cast<std::ptrdiff_t>(j));
            contracted = true;
          }
        }
      }
      if (!contracted) break;
    }
    if (s.size() != 3 && s.size() != 4) {
      log("modular flat did not shrink to rank 2 or 3");
      return false;
    }
    const ExtensionFamily family =
        s.size() == 3 ? ExtensionFamily::kTriangle : ExtensionFamily::kSquare;
    log(std::string("e lies on ") +
        (s.size() == 3 ? "a U_{2,4} line" : "an F_7 plane") + " over " +
        detail::vertex_list(s));
    std::vector<int> keep = s;
    for (int v : st.alive()) {
      if (static_cast<int>(keep.size()) >= target_m) break;
      if (std::find(s.begin(), s.end(), v) == s.end()) keep.push_back(v);
    }
    if (static_cast<int>(keep.size()) < target_m) {
      log("only " + std::to_string(st.alive().size()) +
          " vertices remain; need " + std::to_string(target_m));
      return false;
    }
    std::sort(keep.begin(), keep.end());
    return finish(st, keep, family);
  };

  const detail::CliqueMinorState start(m, e, edge, vertices);

  if (m.rank() - hull_rank >= target_m - 2) {
    log("branch: modular flat of corank " +
        std::to_string(m.rank() - hull_rank) + " >= m-2");
    if (modular_branch(start, hull)) return out;
  }

  for (const auto& b : blocks) {
    if (static_cast<int>(b.size()) - 1 < target_m - 1) continue;
    log("branch: block " + detail::vertex_list(b) + " has rank >= m-1");
    // Contract stars inside F so that block b keeps exactly m vertices and
    // every other block collapses to a point.
    detail::CliqueMinorState st = start;
    for (std::size_t j = target_m; j < b.size(); ++j) st.contract(b[0], b[j]);
    for (const auto& other : blocks) {
      if (other == b) continue;
      for (std::size_t j = 1; j < other.size(); ++j) {
        st.contract(other[0], other[j]);
      }
    }
    const std::vector<int> keep(b.begin(), b.begin() + target_m);
    if (finish(st, keep, ExtensionFamily::kCircle)) return out;
  }

  if (blocks.size() >= 2) {
    const std::vector<int>& c1 = blocks[0];
    const std::vector<int>& c2 = blocks[1];
    log("branch: cross edge " + edge_label(c1[0] + 1, c2[0] + 1) +
        " joins the first two blocks");
    detail::CliqueMinorState st = start;
    st.contract(c1[0], c2[0]);
    for (std::size_t i = 2; i < blocks.size(); ++i) {
      for (std::size_t j = 1; j < blocks[i].size(); ++j) {
        st.contract(blocks[i][0], blocks[i][j]);
      }
    }
    std::vector<int> s = c1;
    s.insert(s.end(), c2.begin() + 1, c2.end());
    std::sort(s.begin(), s.end());
    if (st.e_nongraphic() && st.spans(s) && modular_branch(st, s)) return out;
  }
  log("reduction did not close at this scale");
  return out;
}

struct KungResult {
  KungCheck check;
  bool precondition = true;  // no U_{2,ell+2}-minor
  std::optional<MinorCertificate> excluded_minor;
};

// Kung's bound together with a minor-search check of its precondition.
inline KungResult check_kung(const Matroid& m, int ell,
                             const MinorSearchOptions& opt = {}) {
  KungResult out;
  out.check = kung_bound_check(m, ell);
  out.excluded_minor = has_minor(m, uniform(2, ell + 2), opt);
  out.precondition = !out.excluded_minor.has_value();
  return out;
}

// Two spike restrictions of m whose ground sets cover z exactly, as the pair
// of element sets (A, B) with A <= B least in mask order, or nullopt.
inline std::optional<std::pair<Subset, Subset>> spike_restriction_cover(
    const Matroid& m, Subset z) {
  check_subset(m, z);
  if (popcount(z) > 20) throw ResourceError("spike cover needs |Z| <= 20");
  std::vector<Subset> spikes;
  for_each_subset(z, [&](Subset a) {
    if (popcount(a) >= 7 && is_spike(restriction(m, a))) spikes.push_back(a);
  });
  std::sort(spikes.begin(), spikes.end());
  for (std::size_t i = 0; i < spikes.size(); ++i) {
    for (std::size_t j = i; j < spikes.size(); ++j) {
      if ((spikes[i] | spikes[j]) == z) {
        return std::make_pair(spikes[i], spikes[j]);
      }
    }
  }
  return std::nullopt;
}

struct MembershipRecord {
  std::string witness;
  std::string host;  // empty when no host within range contains it
  std::optional<MinorCertificate> certificate;
};

// Minor certificates for the named members of a family: each witness is
// searched in M_k for increasing k up to 6.
inline std::vector<MembershipRecord> membership_suite(
    const std::string& name, const MinorSearchOptions& opt = {}) {
  struct Item {
    std::string witness;
    Matroid matroid;
  };
  std::vector<Item> items;
  ExtensionFamily family;
  int first = 4;
  if (name == "square-family") {
    family = ExtensionFamily::kSquare;
    items = {{"F_7", fano()}, {"M(K_4)", clique(4)}};
  } else if (name == "triangle-family") {
    family = ExtensionFamily::kTriangle;
    first = 3;
    items = {{"U_{2,4}", uniform(2, 4)}, {"whirl(3)", whirl(3)}};
  } else if (name == "circle-family") {
    family = ExtensionFamily::kCircle;
    first = 3;
    items = {{"U_{3,5}", uniform(3, 5)},
             {"Lambda_3", truncation(biclique(2, 3))}};
  } else {
    throw DomainError("unknown membership suite '" + name + "'");
  }
  std::vector<MembershipRecord> out;
  for (const Item& item : items) {
    MembershipRecord rec;
    rec.witness = item.witness;
    for (int k = first; k <= 6 && !rec.certificate; ++k) {
      if (auto cert = has_minor(family_member(family, k), item.matroid, opt)) {
        rec.host = family_name(family, k);
        rec.certificate = std::move(cert);
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace matroids

#endif  // MATROIDS_MINOR_SEARCH_HPP_
