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

// Independent brute-force oracles and random generators for the tests. None
// of these reuse the library's search code; they work straight from the
// definitions and are only meant for small ground sets.

#ifndef MATROIDS_TESTS_SUPPORT_ORACLES_HPP_
#define MATROIDS_TESTS_SUPPORT_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "matroids/matroids.hpp"

namespace oracles {

using matroids::Matroid;
using matroids::Subset;

inline int pc(Subset s) { return __builtin_popcountll(s); }

inline Subset all(int n) {
  return n == 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}

inline std::vector<int> ranks(const Matroid& m) {
  std::vector<int> r(std::size_t{1} << m.size());
  for (Subset s = 0; s < r.size(); ++s) r[s] = m.rank(s);
  return r;
}

// Global form of the rank axioms: bounded, monotone, submodular over every
// pair of subsets.
inline bool rank_axioms_pairwise(const std::vector<int>& r, int n) {
  const Subset e = all(n);
  for (Subset x = 0; x <= e; ++x) {
    if (r[x] < 0 || r[x] > pc(x)) return false;
    for (int i = 0; i < n; ++i) {
      if (!(x >> i & 1) && r[x | Subset{1} << i] < r[x]) return false;
    }
  }
  for (Subset x = 0; x <= e; ++x) {
    for (Subset y = x; y <= e; ++y) {
      if (r[x] + r[y] < r[x | y] + r[x & y]) return false;
    }
  }
  return true;
}

// Unit increase and local submodularity; equivalent to the axioms and cheap
// enough for 12 elements.
inline bool rank_axioms_local(const std::vector<int>& r, int n) {
  const Subset e = all(n);
  if (r[0] != 0) return false;
  for (Subset x = 0; x <= e; ++x) {
    for (int i = 0; i < n; ++i) {
      if (x >> i & 1) continue;
      const Subset xi = x | Subset{1} << i;
      const int d = r[xi] - r[x];
      if (d < 0 || d > 1) return false;
      for (int j = i + 1; j < n; ++j) {
        if (x >> j & 1) continue;
        const Subset xj = x | Subset{1} << j;
        if (r[xi] + r[xj] < r[xi | xj] + r[x]) return false;
      }
    }
  }
  return true;
}

// Exhaustive isomorphism test over all bijections.
inline std::optional<std::vector<int>> brute_isomorphic(const Matroid& a,
                                                        const Matroid& b) {
  if (a.size() != b.size()) return std::nullopt;
  const int n = a.size();
  const std::vector<int> ra = ranks(a);
  const std::vector<int> rb = ranks(b);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Subset s = 0; s < ra.size() && ok; ++s) {
      Subset t = 0;
      for (int i = 0; i < n; ++i) {
        if (s >> i & 1) t |= Subset{1} << perm[i];
      }
      ok = ra[s] == rb[t];
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

inline bool same_ranks(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) return false;
  for (Subset s = 0; s <= a.mask(); ++s) {
    if (a.rank(s) != b.rank(s)) return false;
    if (s == a.mask()) break;
  }
  return true;
}

// Rank of a column set over GF(p) as the largest nonsingular square minor.
inline long long det_mod(std::vector<std::vector<long long>> a, int p) {
  const int k = static_cast<int>(a.size());
  long long det = 1;
  for (int c = 0; c < k; ++c) {
    int piv = -1;
    for (int r = c; r < k; ++r) {
      if (a[r][c] % p != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = (p - det) % p;
    }
    det = det * (a[c][c] % p) % p;
    long long inv = 1;
    for (long long b = a[c][c] % p, e = p - 2; e > 0; e >>= 1) {
      if (e & 1) inv = inv * b % p;
      b = b * b % p;
    }
    for (int r = c + 1; r < k; ++r) {
      const long long f = a[r][c] % p * inv % p;
      for (int j = c; j < k; ++j) {
        a[r][j] = ((a[r][j] - f * a[c][j]) % p + p) % p;
      }
    }
  }
  return det;
}

inline int determinant_rank(const std::vector<std::vector<int>>& columns,
                            int rows, int p, Subset s) {
  std::vector<int> cols;
  for (int i = 0; i < static_cast<int>(columns.size()); ++i) {
    if (s >> i & 1) cols.push_back(i);
  }
  const int c = static_cast<int>(cols.size());
  for (int k = std::min(c, rows); k > 0; --k) {
    std::vector<int> rsel(rows, 0), csel(c, 0);
    std::fill(rsel.begin(), rsel.begin() + k, 1);
    do {
      std::fill(csel.begin(), csel.end(), 0);
      std::fill(csel.begin(), csel.begin() + k, 1);
      do {
        std::vector<std::vector<long long>> a;
        for (int r = 0; r < rows; ++r) {
          if (!rsel[r]) continue;
          std::vector<long long> row;
          for (int j = 0; j < c; ++j) {
            if (csel[j]) row.push_back(columns[cols[j]][r]);
          }
          a.push_back(row);
        }
        if (det_mod(a, p) != 0) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

// |V| minus the number of components of the spanning subgraph, counting only
// vertices touched by the edges.
inline int forest_rank(const matroids::GraphRep& g, Subset s) {
  std::vector<int> parent(g.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  int r = 0;
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    if (!(s >> i & 1)) continue;
    const int a = find(g.edges[i].u);
    const int b = find(g.edges[i].v);
    if (a != b) {
      parent[a] = b;
      ++r;
    }
  }
  return r;
}

inline int lambda(const std::vector<int>& r, int n, Subset x) {
  const Subset e = all(n);
  return r[x] + r[e & ~x] - r[e];
}

inline int brute_kappa(const Matroid& m, Subset x, Subset y) {
  const std::vector<int> r = ranks(m);
  const int n = m.size();
  const Subset rest = all(n) & ~x & ~y;
  int best = 1 << 20;
  for (Subset z = 0; z <= all(n); ++z) {
    if ((z & ~rest) != 0) continue;
    best = std::min(best, lambda(r, n, x | z));
  }
  return best;
}

// Vertical k-connectivity straight from the definition: all bipartitions.
inline bool brute_vertically_connected(const Matroid& m, int k) {
  const std::vector<int> r = ranks(m);
  const int n = m.size();
  const Subset e = all(n);
  const int rm = r[e];
  for (Subset a = 0; a <= e; ++a) {
    const Subset b = e & ~a;
    if (r[a] < rm && r[b] < rm && r[a] + r[b] - rm < k - 1) return false;
  }
  return true;
}

inline bool brute_modular_flat(const Matroid& m, Subset f) {
  const std::vector<int> r = ranks(m);
  const int n = m.size();
  auto is_flat = [&](Subset x) {
    for (int i = 0; i < n; ++i) {
      if (!(x >> i & 1) && r[x | Subset{1} << i] == r[x]) return false;
    }
    return true;
  };
  for (Subset g = 0; g <= all(n); ++g) {
    if (!is_flat(g)) continue;
    if (r[f] + r[g] != r[f | g] + r[f & g]) return false;
  }
  return true;
}

// Minor containment by enumerating every (contract, delete) pair.
inline bool unpruned_has_minor(const Matroid& m, const Matroid& n) {
  const int size = m.size();
  const int k = n.size();
  if (k > size) return false;
  const std::vector<int> rn = ranks(n);
  for (Subset kept = 0; kept <= all(size); ++kept) {
    if (pc(kept) != k) continue;
    const Subset rest = all(size) & ~kept;
    for (Subset c = rest;; c = (c - 1) & rest) {
      const int rc = m.rank(c);
      if (m.rank(kept | c) - rc == n.rank()) {
        std::vector<int> idx;
        for (int i = 0; i < size; ++i) {
          if (kept >> i & 1) idx.push_back(i);
        }
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
          bool ok = true;
          for (Subset s = 0; s < rn.size() && ok; ++s) {
            Subset t = c;
            for (int i = 0; i < k; ++i) {
              if (s >> i & 1) t |= Subset{1} << idx[perm[i]];
            }
            ok = m.rank(t) - rc == rn[s];
          }
          if (ok) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      if (c == 0) break;
    }
  }
  return false;
}

inline std::optional<std::pair<int, int>> brute_blocking_pair(
    const matroids::GraphRep& g, Subset odd) {
  for (int u = 0; u < g.vertices; ++u) {
    for (int v = u + 1; v < g.vertices; ++v) {
      bool ok = true;
      for (int i = 0; i < static_cast<int>(g.edges.size()) && ok; ++i) {
        if (!(odd >> i & 1)) continue;
        const auto& e = g.edges[i];
        ok = e.u == u || e.v == u || e.u == v || e.v == v;
      }
      if (ok) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

// Spike test from the definition over every split of E into X, Y, T.
inline bool brute_is_spike(const Matroid& m) {
  const int n = m.size();
  const std::vector<int> r = ranks(m);
  const Subset e = all(n);
  auto closure = [&](Subset x) {
    Subset c = x;
    for (int i = 0; i < n; ++i) {
      if (r[x | Subset{1} << i] == r[x]) c |= Subset{1} << i;
    }
    return c;
  };
  auto circuit_mod = [&](Subset x, Subset t) {
    auto rk = [&](Subset s) { return r[s | t] - r[t]; };
    if (x == 0 || rk(x) != pc(x) - 1) return false;
    for (int i = 0; i < n; ++i) {
      if ((x >> i & 1) && rk(x & ~(Subset{1} << i)) != pc(x) - 1) return false;
    }
    return true;
  };
  if (closure(0) != 0) return false;
  for (Subset t = 1; t <= e; ++t) {
    if (r[t] != 1 || closure(t) != t) continue;
    const Subset rest = e & ~t;
    for (Subset x = rest;; x = (x - 1) & rest) {
      const Subset y = rest & ~x;
      bool ok = pc(x) == pc(y) && x != 0;
      for (int i = 0; ok && i < n; ++i) {
        for (int j = i + 1; ok && j < n; ++j) {
          if ((rest >> i & 1) && (rest >> j & 1)) {
            ok = r[(Subset{1} << i) | (Subset{1} << j)] == 2;
          }
        }
      }
      ok = ok && circuit_mod(x, t) && circuit_mod(y, t);
      for (int i = 0; ok && i < n; ++i) {
        if (!(rest >> i & 1)) continue;
        const Subset line = closure(t | Subset{1} << i) & rest;
        ok = pc(line & x) == 1 && pc(line & y) == 1;
      }
      if (ok) return true;
      if (x == 0) break;
    }
    if (t == e) break;
  }
  return false;
}

// Modular cuts of a small matroid by enumerating every family of flats.
inline int brute_modular_cut_count(const Matroid& m) {
  const int n = m.size();
  const std::vector<int> r = ranks(m);
  std::vector<Subset> flats;
  for (Subset x = 0; x <= all(n); ++x) {
    bool flat = true;
    for (int i = 0; i < n && flat; ++i) {
      if (!(x >> i & 1) && r[x | Subset{1} << i] == r[x]) flat = false;
    }
    if (flat) flats.push_back(x);
    if (x == all(n)) break;
  }
  const int f = static_cast<int>(flats.size());
  int count = 0;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << f); ++fam) {
    bool ok = true;
    for (int i = 0; i < f && ok; ++i) {
      if (!(fam >> i & 1)) continue;
      for (int j = 0; j < f && ok; ++j) {
        const Subset a = flats[i];
        const Subset b = flats[j];
        if ((a & b) == a && !(fam >> j & 1)) ok = false;
        if (!(fam >> j & 1)) continue;
        if (r[a] + r[b] == r[a | b] + r[a & b]) {
          const auto it = std::find(flats.begin(), flats.end(), a & b);
          if (!(fam >> (it - flats.begin()) & 1)) ok = false;
        }
      }
    }
    if (ok) ++count;
  }
  return count;
}

// The three tangle axioms checked straight from their statements: every
// (order-1)-separation has a side in the family, no three members cover E,
// and no E - e is a member.
inline int brute_tangle_violation(const Matroid& m,
                                  const std::vector<Subset>& family,
                                  int order) {
  const int n = m.size();
  const std::vector<int> r = ranks(m);
  const Subset e = all(n);
  std::vector<char> member(std::size_t{1} << n, 0);
  for (Subset x : family) {
    if (lambda(r, n, x) >= order - 1) return 1;
    member[x] = 1;
  }
  for (Subset x = 0; x <= e; ++x) {
    if (lambda(r, n, x) < order - 1 && !member[x] && !member[e & ~x]) return 1;
    if (x == e) break;
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i; j < family.size(); ++j) {
      for (std::size_t k = j; k < family.size(); ++k) {
        if ((family[i] | family[j] | family[k]) == e) return 2;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (member[e & ~(Subset{1} << i)]) return 3;
  }
  return 0;
}

// Random generators -------------------------------------------------------

inline Matroid random_linear(std::mt19937& rng, int size, int rows,
                             int prime) {
  std::uniform_int_distribution<int> entry(0, prime - 1);
  std::vector<std::vector<int>> cols(size, std::vector<int>(rows));
  for (auto& c : cols) {
    for (int& x : c) x = entry(rng);
  }
  return matroids::from_matrix(prime, cols, rows);
}

inline Matroid random_linear(std::mt19937& rng, int max_size) {
  static const int primes[] = {2, 3, 5, 7};
  const int p = primes[std::uniform_int_distribution<int>(0, 3)(rng)];
  const int size = std::uniform_int_distribution<int>(1, max_size)(rng);
  const int rows = std::uniform_int_distribution<int>(1, 5)(rng);
  return random_linear(rng, size, rows, p);
}

inline matroids::GraphRep random_graph(std::mt19937& rng, int vertices,
                                       int edges, bool loops = true) {
  matroids::GraphRep g;
  g.vertices = vertices;
  std::uniform_int_distribution<int> v(0, vertices - 1);
  while (static_cast<int>(g.edges.size()) < edges) {
    const int a = v(rng);
    const int b = v(rng);
    if (a == b && !loops) continue;
    g.edges.push_back({a, b});
  }
  return g;
}

inline Subset random_subset(std::mt19937& rng, Subset within) {
  Subset s = 0;
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < 64; ++i) {
    if ((within >> i & 1) && coin(rng)) s |= Subset{1} << i;
  }
  return s;
}

}  // namespace oracles

#endif  // MATROIDS_TESTS_SUPPORT_ORACLES_HPP_
