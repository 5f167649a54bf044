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

#ifndef MATROIDS_SUBSET_HPP_
#define MATROIDS_SUBSET_HPP_

#include <bit>
#include <cstdint>
#include <vector>

namespace matroids {

// Subsets of a ground set are machine-word bitmasks: bit i is element i.
using Subset = std::uint64_t;

inline constexpr int kMaxGroundSize = 64;

constexpr Subset bit(int i) { return Subset{1} << i; }

constexpr Subset full_set(int n) {
  return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}

constexpr int popcount(Subset s) { return std::popcount(s); }

constexpr bool contains(Subset s, int i) { return (s >> i) & 1U; }

constexpr bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }

constexpr int lowest(Subset s) { return std::countr_zero(s); }

// Iterates the set bits of a subset in increasing order.
class BitRange {
 public:
  class iterator {
   public:
    explicit constexpr iterator(Subset s) : s_(s) {}
    constexpr int operator*() const { return std::countr_zero(s_); }
    constexpr iterator& operator++() {
      s_ &= s_ - 1;
      return *this;
    }
    constexpr bool operator!=(const iterator& o) const { return s_ != o.s_; }
    constexpr bool operator==(const iterator& o) const { return s_ == o.s_; }

   private:
    Subset s_;
  };

  explicit constexpr BitRange(Subset s) : s_(s) {}
  constexpr iterator begin() const { return iterator(s_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  Subset s_;
};

constexpr BitRange bits(Subset s) { return BitRange(s); }

inline std::vector<int> to_indices(Subset s) {
  std::vector<int> out;
  out.reserve(popcount(s));
  for (int i : bits(s)) out.push_back(i);
  return out;
}

inline Subset from_indices(const std::vector<int>& idx) {
  Subset s = 0;
  for (int i : idx) s |= bit(i);
  return s;
}

// Scatters the low bits of `compact` onto the set bits of `positions`
// (a portable pdep).
constexpr Subset deposit(Subset compact, Subset positions) {
  Subset out = 0;
  for (Subset p = positions; compact != 0 && p != 0; p &= p - 1) {
    if (compact & 1U) out |= p & (~p + 1);
    compact >>= 1;
  }
  return out;
}

// Inverse of deposit: gathers the bits of `s` at `positions` into the low
// bits of the result.
constexpr Subset extract(Subset s, Subset positions) {
  Subset out = 0;
  int k = 0;
  for (Subset p = positions; p != 0; p &= p - 1, ++k) {
    if (s & p & (~p + 1)) out |= Subset{1} << k;
  }
  return out;
}

// Calls f(sub) for every subset of `s` (including the empty set and s).
template <typename F>
void for_each_subset(Subset s, F&& f) {
  Subset sub = 0;
  while (true) {
    f(sub);
    if (sub == s) break;
    sub = (sub - s) & s;
  }
}

// Calls f(k_subset) for every k-element subset of `s`, in increasing order of
// the compact encoding.
template <typename F>
void for_each_k_subset(Subset s, int k, F&& f) {
  const int n = popcount(s);
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(Subset{0});
    return;
  }
  if (k == n) {
    f(s);
    return;
  }
  Subset c = (Subset{1} << k) - 1;
  const Subset limit = n >= 64 ? 0 : Subset{1} << n;
  while (true) {
    f(deposit(c, s));
    // Gosper's hack.
    Subset u = c & (~c + 1);
    Subset v = c + u;
    if (v == 0 || (limit != 0 && v >= limit)) break;
    c = v + (((v ^ c) / u) >> 2);
    if (limit != 0 && c >= limit) break;
  }
}

}  // namespace matroids

#endif  // MATROIDS_SUBSET_HPP_
