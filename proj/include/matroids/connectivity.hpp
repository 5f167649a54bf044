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

#ifndef MATROIDS_CONNECTIVITY_HPP_
#define MATROIDS_CONNECTIVITY_HPP_

#include <algorithm>
#include <atomic>
#include <bit>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "matroids/core.hpp"
#include "matroids/errors.hpp"
#include "matroids/flats.hpp"
#include "matroids/matroid.hpp"

namespace matroids {

// r(X) + r(E-X) - r(E).
inline int lambda(const Matroid& m, Subset x) {
  check_subset(m, x);
  return m.rank_unchecked(x) + m.rank_unchecked(m.mask() & ~x) - m.rank();
}

// r(X) + r(Y) - r(X u Y).
inline int local_conn(const Matroid& m, Subset x, Subset y) {
  check_subset(m, x | y);
  return m.rank_unchecked(x) + m.rank_unchecked(y) - m.rank_unchecked(x | y);
}

// Connected components, ordered by least element: the classes generated by
// the fundamental circuits of a fixed basis. Loops and coloops are
// singletons.
inline std::vector<Subset> connected_components(const Matroid& m) {
  const int n = m.size();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  Subset basis = 0;
  for (int e : bits(m.mask())) {
    if (m.rank_unchecked(basis | bit(e)) > popcount(basis)) basis |= bit(e);
  }
  for (int e : bits(m.mask() & ~basis)) {
    if (m.rank_unchecked(bit(e)) == 0) continue;
    // Fundamental circuit of e: basis elements b with B - b + e a basis.
    for (int b : bits(basis)) {
      if (m.rank_unchecked((basis & ~bit(b)) | bit(e)) == popcount(basis)) {
        parent[find(b)] = find(e);
      }
    }
  }
  std::vector<Subset> by_root(n, 0);
  for (int e = 0; e < n; ++e) by_root[find(e)] |= bit(e);
  std::vector<Subset> out;
  for (Subset c : by_root) {
    if (c) out.push_back(c);
  }
  std::sort(out.begin(), out.end(),
            [](Subset a, Subset b) { return lowest(a) < lowest(b); });
  return out;
}

struct SeparationCertificate {
  enum class Kind { kKappaWitness, kVerticalSeparation };

  Subset side = 0;
  int value = 0;
  Kind kind = Kind::kKappaWitness;

  bool operator==(const SeparationCertificate&) const = default;
};

struct KappaResult {
  int value = 0;
  SeparationCertificate certificate;
};

namespace detail {

// Branch and bound over the elements outside X and Y. `a` collects elements
// placed with X, `b` those placed with Y; since rank is monotone,
// r(X u a) + r(Y u b) - r(E) bounds lambda from below on the whole branch.
class KappaSearch {
 public:
  KappaSearch(const Matroid& m, Subset x, Subset y)
      : m_(m), x_(x), y_(y), free_(to_indices(m.mask() & ~x & ~y)) {}

  int minimum(int workers) {
    floor_ = local_conn(m_, x_, y_);
    best_ = std::min(lambda(m_, x_), lambda(m_, m_.mask() & ~y_));
    if (best_ <= floor_) return best_;
    const int split = std::min<int>(
        static_cast<int>(free_.size()),
        workers > 1 ? std::bit_width(static_cast<unsigned>(workers)) + 1 : 0);
    if (split == 0) {
      descend(0, 0, 0);
      return best_;
    }
    // Fan out over the assignments of the first `split` free elements.
    const int jobs = 1 << split;
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int j = next++; j < jobs; j = next++) {
          Subset a = 0;
          Subset b = 0;
          for (int i = 0; i < split; ++i) {
            (contains(j, i) ? a : b) |= bit(free_[i]);
          }
          descend(split, a, b);
        }
      });
    }
    for (std::thread& t : pool) t.join();
    return best_;
  }

  // Numerically least Z with lambda(Z) = target.
  Subset least_witness(int target) {
    target_ = target;
    witness_.reset();
    std::vector<int> order(free_.rbegin(), free_.rend());
    find_least(order, 0, 0, 0);
    if (!witness_) throw InternalError("kappa witness search failed");
    return *witness_;
  }

 private:
  int bound(Subset a, Subset b) const {
    return m_.rank_unchecked(x_ | a) + m_.rank_unchecked(y_ | b) - m_.rank();
  }

  void descend(std::size_t i, Subset a, Subset b) {
    if (best_.load() <= floor_) return;
    if (bound(a, b) >= best_.load()) return;
    if (i == free_.size()) {
      const int value = lambda(m_, x_ | a);
      int cur = best_.load();
      while (value < cur && !best_.compare_exchange_weak(cur, value)) {
      }
      return;
    }
    descend(i + 1, a | bit(free_[i]), b);
    descend(i + 1, a, b | bit(free_[i]));
  }

  // Highest free element first, excluded before included, so the first leaf
  // reached is the least mask.
  void find_least(const std::vector<int>& order, std::size_t i, Subset a,
                  Subset b) {
    if (witness_ || bound(a, b) > target_) return;
    if (i == order.size()) {
      if (lambda(m_, x_ | a) == target_) witness_ = x_ | a;
      return;
    }
    find_least(order, i + 1, a, b | bit(order[i]));
    find_least(order, i + 1, a | bit(order[i]), b);
  }

  const Matroid& m_;
  Subset x_;
  Subset y_;
  std::vector<int> free_;
  int floor_ = 0;
  std::atomic<int> best_{0};
  int target_ = 0;
  std::optional<Subset> witness_;
};

}  // namespace detail

// Minimum of lambda(Z) over X <= Z <= E - Y. The witness is the numerically
// least such Z, independent of the worker count.
inline KappaResult kappa(const Matroid& m, Subset x, Subset y,
                         int workers = 1) {
  check_subset(m, x | y);
  if (x & y) throw DomainError("kappa needs disjoint sets");
  detail::KappaSearch search(m, x, y);
  KappaResult out;
  out.value = search.minimum(workers);
  out.certificate.side = search.least_witness(out.value);
  out.certificate.value = out.value;
  out.certificate.kind = SeparationCertificate::Kind::kKappaWitness;
  return out;
}

struct LinkingResult {
  Matroid minor;  // ground set X u Y in increasing host order
  MinorCertificate certificate;
  int kappa = 0;
};

// A minor N on X u Y with N|X = M|X, N|Y = M|Y and lambda_N(X) = kappa(X,Y).
// Only the contraction set matters: it must be skew to X and to Y, and then
// lambda_N(X) = r(X) + r(Y) - r(X u Y u C) + r(C).
inline LinkingResult linking_minor(const Matroid& m, Subset x, Subset y) {
  check_subset(m, x | y);
  if (x & y) throw DomainError("linking needs disjoint sets");
  const int target = kappa(m, x, y).value;
  const Subset rest = m.mask() & ~x & ~y;
  const Subset cl = closure(m, x) | closure(m, y);
  std::vector<int> order;
  for (int e : bits(rest & ~cl)) order.push_back(e);
  for (int e : bits(rest & cl)) order.push_back(e);

  const int rx = m.rank_unchecked(x);
  const int ry = m.rank_unchecked(y);
  auto skew = [&](Subset c) {
    const int rc = m.rank_unchecked(c);
    return m.rank_unchecked(x | c) == rx + rc &&
           m.rank_unchecked(y | c) == ry + rc;
  };
  auto value = [&](Subset c) {
    return rx + ry - m.rank_unchecked(x | y | c) + m.rank_unchecked(c);
  };
  std::optional<Subset> found;
  auto dfs = [&](auto&& self, std::size_t i, Subset c) -> void {
    if (found) return;
    if (value(c) == target) {
      found = c;
      return;
    }
    if (i == order.size()) return;
    const Subset with = c | bit(order[i]);
    if (skew(with)) self(self, i + 1, with);
    self(self, i + 1, c);
  };
  dfs(dfs, 0, 0);
  if (!found) throw InternalError("linking minor search failed");

  LinkingResult out;
  out.kappa = target;
  out.certificate.contract = *found;
  out.certificate.deleted = rest & ~*found;
  out.certificate.mapping = to_indices(x | y);
  out.minor = minor(m, out.certificate.contract, out.certificate.deleted);

  const Subset kept = x | y;
  const Subset nx = extract(x, kept);
  const Subset ny = extract(y, kept);
  for_each_subset(nx, [&](Subset s) {
    if (out.minor.rank_unchecked(s) != m.rank_unchecked(deposit(s, kept))) {
      throw InternalError("linking minor changed the restriction to X");
    }
  });
  for_each_subset(ny, [&](Subset s) {
    if (out.minor.rank_unchecked(s) != m.rank_unchecked(deposit(s, kept))) {
      throw InternalError("linking minor changed the restriction to Y");
    }
  });
  if (lambda(out.minor, nx) != target) {
    throw InternalError("linking minor has the wrong connectivity");
  }
  return out;
}

struct VerticalResult {
  bool connected = true;
  std::optional<SeparationCertificate> certificate;
};

// Vertically k-connected: no partition (A, B) with r(A) < r(M), r(B) < r(M)
// and r(A) + r(B) - r(M) < k - 1. Replacing A by its closure keeps such a
// partition valid, so only flats are tried; the first separating flat in
// order of rank, then mask, is returned.
inline VerticalResult is_vertically_k_connected(const Matroid& m, int k) {
  if (k < 2) throw DomainError("vertical connectivity needs k >= 2");
  VerticalResult out;
  if (m.rank() == 0) return out;
  for (const auto& level : flats_by_rank(m, m.rank() - 1)) {
    for (Subset a : level) {
      const Subset b = m.mask() & ~a;
      if (m.rank_unchecked(b) >= m.rank()) continue;
      const int l = lambda(m, a);
      if (l < k - 1) {
        out.connected = false;
        out.certificate = SeparationCertificate{
            a, l, SeparationCertificate::Kind::kVerticalSeparation};
        return out;
      }
    }
  }
  return out;
}

inline bool is_modular_pair(const Matroid& m, Subset f1, Subset f2) {
  check_subset(m, f1 | f2);
  if (!is_flat(m, f1) || !is_flat(m, f2)) {
    throw DomainError("modular pair needs flats");
  }
  return m.rank_unchecked(f1) + m.rank_unchecked(f2) ==
         m.rank_unchecked(f1 | f2) + m.rank_unchecked(f1 & f2);
}

// A flat forming a modular pair with every flat.
inline bool is_modular_flat(const Matroid& m, Subset f) {
  check_subset(m, f);
  if (!is_flat(m, f)) throw DomainError("modular flat test needs a flat");
  for (Subset g : all_flats(m)) {
    if (!is_modular_pair(m, f, g)) return false;
  }
  return true;
}

}  // namespace matroids

#endif  // MATROIDS_CONNECTIVITY_HPP_
