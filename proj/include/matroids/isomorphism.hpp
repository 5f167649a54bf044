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

#ifndef MATROIDS_ISOMORPHISM_HPP_
#define MATROIDS_ISOMORPHISM_HPP_

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroids/core.hpp"
#include "matroids/errors.hpp"
#include "matroids/matroid.hpp"

namespace matroids {

using RankFn = std::function<int(Subset)>;

namespace detail {

// Per-element invariants used to restrict candidate images.
struct Profile {
  int loop = 0;
  int parallel = 0;  // size of the element's parallel class
  int circuits3 = 0;
  int circuits4 = 0;

  friend auto operator<=>(const Profile&, const Profile&) = default;
};

inline std::vector<Profile> profiles(const Matroid& m, int circuit_bound) {
  std::vector<Profile> out(m.size());
  for (int e : bits(loops(m))) out[e].loop = 1;
  for (Subset c : parallel_classes(m)) {
    for (int e : bits(c)) out[e].parallel = popcount(c);
  }
  for (Subset c : circuits(m, circuit_bound)) {
    const int k = popcount(c);
    for (int e : bits(c)) {
      if (k == 3) ++out[e].circuits3;
      if (k == 4) ++out[e].circuits4;
    }
  }
  return out;
}

// Order pattern elements so that each new element shares small circuits with
// those already placed; rare profiles go first.
inline std::vector<int> search_order(const Matroid& pattern,
                                     const std::vector<Profile>& prof) {
  const int n = pattern.size();
  std::vector<Subset> small = circuits(pattern, 3);
  std::vector<int> class_count(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (prof[i] == prof[j]) ++class_count[i];
    }
  }
  std::vector<int> order;
  Subset chosen = 0;
  while (static_cast<int>(order.size()) < n) {
    int best = -1;
    int best_links = -1;
    for (int e = 0; e < n; ++e) {
      if (contains(chosen, e)) continue;
      int links = 0;
      for (Subset c : small) {
        if (contains(c, e) && (c & chosen)) ++links;
      }
      if (best < 0 || links > best_links ||
          (links == best_links && class_count[e] < class_count[best])) {
        best = e;
        best_links = links;
      }
    }
    order.push_back(best);
    chosen |= bit(best);
  }
  return order;
}

// Backtracking search for an injective map from pattern elements into host
// elements preserving rank on subsets of the pattern. In full mode every
// subset of the placed prefix is compared, so any completed map is exact.
class EmbeddingSearch {
 public:
  struct Options {
    bool full = true;
    std::uint64_t node_cap = 200'000'000;
  };

  EmbeddingSearch(int pattern_size, RankFn pattern_rank,
                  std::vector<int> order, Subset host_allowed,
                  RankFn host_rank,
                  std::function<bool(int, int)> compatible,
                  std::function<bool(const std::vector<int>&)> accept_leaf,
                  Options options)
      : n_(pattern_size),
        prank_(std::move(pattern_rank)),
        order_(std::move(order)),
        allowed_(host_allowed),
        hrank_(std::move(host_rank)),
        compatible_(std::move(compatible)),
        accept_leaf_(std::move(accept_leaf)),
        options_(options),
        map_(pattern_size, -1) {
    if (options_.full) {
      if (n_ > 24) throw ResourceError("embedding pattern too large");
      const std::size_t count = std::size_t{1} << n_;
      amask_.assign(count, 0);
      hmask_.assign(count, 0);
      for (std::size_t s = 1; s < count; ++s) {
        amask_[s] = amask_[s & (s - 1)] |
                    bit(order_[std::countr_zero(static_cast<Subset>(s))]);
      }
      arank_.resize(count);
      for (std::size_t s = 0; s < count; ++s) arank_[s] = prank_(amask_[s]);
    }
  }

  std::optional<std::vector<int>> run() {
    if (n_ == 0) return std::vector<int>{};
    if (dfs(0)) return map_;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool dfs(int k) {
    if (k == n_) return !accept_leaf_ || accept_leaf_(map_);
    const int pe = order_[k];
    for (int h : bits(allowed_ & ~used_)) {
      if (!compatible_(pe, h)) continue;
      if (++nodes_ > options_.node_cap) {
        throw ResourceError("embedding search exceeded its node cap");
      }
      if (!(options_.full ? consistent_full(k, h) : consistent_local(k, h))) {
        continue;
      }
      map_[pe] = h;
      used_ |= bit(h);
      if (dfs(k + 1)) return true;
      used_ &= ~bit(h);
      map_[pe] = -1;
    }
    return false;
  }

  bool consistent_full(int k, int h) {
    const std::size_t top = std::size_t{1} << k;
    hmask_[top] = bit(h);
    if (arank_[top] != hrank_(bit(h))) return false;
    // Pairs and triples first: they prune most branches cheaply.
    for (int i = 0; i < k; ++i) {
      const std::size_t idx = top | (std::size_t{1} << i);
      hmask_[idx] = hmask_[std::size_t{1} << i] | bit(h);
      if (arank_[idx] != hrank_(hmask_[idx])) return false;
    }
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        const std::size_t low = (std::size_t{1} << i) | (std::size_t{1} << j);
        const std::size_t idx = top | low;
        hmask_[idx] = hmask_[low] | bit(h);
        if (arank_[idx] != hrank_(hmask_[idx])) return false;
      }
    }
    for (std::size_t s = 1; s < top; ++s) {
      const std::size_t idx = top | s;
      hmask_[idx] = hmask_[s] | bit(h);
      if (std::popcount(s) <= 2) continue;
      if (arank_[idx] != hrank_(hmask_[idx])) return false;
    }
    return true;
  }

  bool consistent_local(int k, int h) {
    const int pe = order_[k];
    auto check = [&](Subset pattern_set, Subset host_set) {
      return prank_(pattern_set | bit(pe)) == hrank_(host_set | bit(h));
    };
    if (!check(0, 0)) return false;
    for (int i = 0; i < k; ++i) {
      const int a = order_[i];
      if (!check(bit(a), bit(map_[a]))) return false;
    }
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        const int a = order_[i];
        const int b = order_[j];
        if (!check(bit(a) | bit(b), bit(map_[a]) | bit(map_[b]))) return false;
      }
    }
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        for (int l = j + 1; l < k; ++l) {
          const int a = order_[i];
          const int b = order_[j];
          const int c = order_[l];
          if (!check(bit(a) | bit(b) | bit(c),
                     bit(map_[a]) | bit(map_[b]) | bit(map_[c]))) {
            return false;
          }
        }
      }
    }
    Subset prefix = 0;
    Subset image = 0;
    for (int i = 0; i < k; ++i) {
      prefix |= bit(order_[i]);
      image |= bit(map_[order_[i]]);
    }
    return check(prefix, image);
  }

  int n_;
  RankFn prank_;
  std::vector<int> order_;
  Subset allowed_;
  RankFn hrank_;
  std::function<bool(int, int)> compatible_;
  std::function<bool(const std::vector<int>&)> accept_leaf_;
  Options options_;
  std::vector<int> map_;
  Subset used_ = 0;
  std::vector<Subset> amask_;
  std::vector<Subset> hmask_;
  std::vector<int> arank_;
  std::uint64_t nodes_ = 0;
};

inline RankFn table_or_oracle(const Matroid& m, int table_limit,
                              std::shared_ptr<RankTable>* keep) {
  if (m.size() <= table_limit) {
    *keep = std::make_shared<RankTable>(m);
    std::shared_ptr<RankTable> t = *keep;
    return [t](Subset x) { return (*t)(x); };
  }
  return [m](Subset x) { return m.rank_unchecked(x); };
}

}  // namespace detail

// Largest ground set for which is_isomorphic compares every subset.
inline constexpr int kExactIsomorphismLimit = 20;

// A bijection f with r_b(f(X)) = r_a(X) for all X, or nullopt. Exact up to
// kExactIsomorphismLimit elements; above it the search compares all subsets
// of size <= 4 plus the placed prefix, and accepts a map only after the
// sampled check in validate_certificate.
inline std::optional<std::vector<int>> is_isomorphic(const Matroid& a,
                                                     const Matroid& b) {
  const int n = a.size();
  if (n != b.size() || a.rank() != b.rank()) return std::nullopt;
  if (popcount(loops(a)) != popcount(loops(b))) return std::nullopt;
  const int bound = n <= 30 ? 4 : 3;
  std::vector<detail::Profile> pa = detail::profiles(a, bound);
  std::vector<detail::Profile> pb = detail::profiles(b, bound);
  {
    std::vector<detail::Profile> sa = pa;
    std::vector<detail::Profile> sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  if (n == 0) return std::vector<int>{};

  const bool full = n <= kExactIsomorphismLimit;
  std::shared_ptr<RankTable> ta;
  std::shared_ptr<RankTable> tb;
  RankFn ra = full ? detail::table_or_oracle(a, n, &ta)
                   : RankFn([a](Subset x) { return a.rank_unchecked(x); });
  RankFn rb = full ? detail::table_or_oracle(b, n, &tb)
                   : RankFn([b](Subset x) { return b.rank_unchecked(x); });

  std::function<bool(const std::vector<int>&)> leaf;
  if (!full) {
    leaf = [&](const std::vector<int>& map) {
      MinorCertificate cert;
      cert.mapping = map;
      return validate_certificate(b, a, cert);
    };
  }
  detail::EmbeddingSearch search(
      n, ra, detail::search_order(a, pa), b.mask(), rb,
      [&](int x, int y) { return pa[x] == pb[y]; }, leaf,
      detail::EmbeddingSearch::Options{full, 200'000'000});
  return search.run();
}

// An injective map from pattern elements into `allowed` (a subset of the
// host's elements) under which host_rank agrees with the pattern's rank on
// every subset, i.e. pattern is isomorphic to the restriction to the image.
inline std::optional<std::vector<int>> find_restriction_embedding(
    const Matroid& pattern, Subset allowed, const RankFn& host_rank) {
  const int n = pattern.size();
  if (n > 24) throw ResourceError("restriction pattern too large");
  if (popcount(allowed) < n) return std::nullopt;
  std::vector<detail::Profile> pp = detail::profiles(pattern, 2);
  // Host element data restricted to `allowed`.
  std::vector<int> hloop(64, 0);
  std::vector<int> hpar(64, 0);
  for (int e : bits(allowed)) {
    hloop[e] = host_rank(bit(e)) == 0 ? 1 : 0;
  }
  for (int e : bits(allowed)) {
    if (hloop[e]) continue;
    for (int f : bits(allowed)) {
      if (!hloop[f] && host_rank(bit(e) | bit(f)) == 1) ++hpar[e];
    }
  }
  std::shared_ptr<RankTable> tp;
  RankFn pr = detail::table_or_oracle(pattern, n, &tp);
  detail::EmbeddingSearch search(
      n, pr, detail::search_order(pattern, pp), allowed, host_rank,
      [&](int x, int y) {
        return pp[x].loop == hloop[y] && pp[x].parallel <= hpar[y];
      },
      nullptr, detail::EmbeddingSearch::Options{true, 200'000'000});
  return search.run();
}

inline std::optional<std::vector<int>> find_restriction_embedding(
    const Matroid& pattern, const Matroid& host) {
  return find_restriction_embedding(
      pattern, host.mask(),
      [host](Subset x) { return host.rank_unchecked(x); });
}

}  // namespace matroids

#endif  // MATROIDS_ISOMORPHISM_HPP_
