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

#ifndef MATROIDS_FLATS_HPP_
#define MATROIDS_FLATS_HPP_

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "matroids/core.hpp"
#include "matroids/errors.hpp"
#include "matroids/matroid.hpp"

namespace matroids {

inline constexpr std::size_t kDefaultFlatCap = 2'000'000;

// Flats grouped by rank (index = rank), each level sorted by mask. Levels
// above `max_rank` are not generated when max_rank >= 0.
inline std::vector<std::vector<Subset>> flats_by_rank(
    const Matroid& m, int max_rank = -1,
    std::size_t cap = kDefaultFlatCap) {
  const int top = max_rank < 0 ? m.rank() : std::min(max_rank, m.rank());
  std::vector<std::vector<Subset>> levels(top + 1);
  levels[0].push_back(closure(m, 0));
  std::size_t total = 1;
  for (int k = 0; k < top; ++k) {
    std::unordered_set<Subset> next;
    for (Subset f : levels[k]) {
      Subset covered = f;
      for (int e : bits(m.mask() & ~f)) {
        if (contains(covered, e)) continue;
        const Subset g = closure(m, f | bit(e));
        covered |= g;
        if (next.insert(g).second && ++total > cap) {
          throw ResourceError("flat enumeration exceeded " +
                              std::to_string(cap) + " flats");
        }
      }
    }
    levels[k + 1].assign(next.begin(), next.end());
    std::sort(levels[k + 1].begin(), levels[k + 1].end());
  }
  return levels;
}

inline std::vector<Subset> all_flats(const Matroid& m,
                                     std::size_t cap = kDefaultFlatCap) {
  std::vector<Subset> out;
  for (auto& level : flats_by_rank(m, -1, cap)) {
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

inline std::vector<Subset> flats_of_rank(const Matroid& m, int k,
                                         std::size_t cap = kDefaultFlatCap) {
  if (k < 0 || k > m.rank()) return {};
  return flats_by_rank(m, k, cap)[k];
}

inline std::vector<Subset> hyperplanes(const Matroid& m) {
  if (m.rank() == 0) return {};
  return flats_of_rank(m, m.rank() - 1);
}

// Cocircuits are the complements of hyperplanes.
inline std::vector<Subset> cocircuits(const Matroid& m) {
  std::vector<Subset> out;
  for (Subset h : hyperplanes(m)) out.push_back(m.mask() & ~h);
  std::sort(out.begin(), out.end());
  return out;
}

// Rank-2 flats.
inline std::vector<Subset> lines(const Matroid& m) {
  return flats_of_rank(m, 2);
}

}  // namespace matroids

#endif  // MATROIDS_FLATS_HPP_
