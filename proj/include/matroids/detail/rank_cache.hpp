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

#ifndef MATROIDS_DETAIL_RANK_CACHE_HPP_
#define MATROIDS_DETAIL_RANK_CACHE_HPP_

#include <array>
#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>

#include "matroids/subset.hpp"

namespace matroids::detail {

// Bounded, direct-mapped memo table for rank queries keyed by subset mask.
// Slots are guarded by striped mutexes so one matroid value can be queried
// from several threads at once. Storage is allocated on first use.
class RankCache {
 public:
  explicit RankCache(int ground_size)
      : log_slots_(ground_size < kMaxLogSlots ? ground_size : kMaxLogSlots) {}

  RankCache(const RankCache&) = delete;
  RankCache& operator=(const RankCache&) = delete;

  template <typename Compute>
  int get(Subset key, Compute&& compute) const {
    std::call_once(init_, [this] {
      slots_ = std::make_unique<Slot[]>(std::size_t{1} << log_slots_);
    });
    const std::size_t idx = index(key);
    std::mutex& lock = stripes_[idx % kStripes];
    {
      std::lock_guard<std::mutex> guard(lock);
      const Slot& s = slots_[idx];
      if (s.value >= 0 && s.key == key) {
        hits_.fetch_add(1, std::memory_order_relaxed);
        return s.value;
      }
    }
    const int value = compute(key);
    {
      std::lock_guard<std::mutex> guard(lock);
      slots_[idx] = Slot{key, value};
    }
    return value;
  }

  std::uint64_t hits() const { return hits_.load(std::memory_order_relaxed); }

 private:
  static constexpr int kMaxLogSlots = 12;
  static constexpr std::size_t kStripes = 32;

  struct Slot {
    Subset key = 0;
    int value = -1;
  };

  std::size_t index(Subset key) const {
    // Fibonacci hashing.
    const std::uint64_t h = key * 0x9E3779B97F4A7C15ULL;
    return log_slots_ == 0 ? 0 : static_cast<std::size_t>(h >> (64 - log_slots_));
  }

  int log_slots_;
  mutable std::once_flag init_;
  mutable std::unique_ptr<Slot[]> slots_;
  mutable std::array<std::mutex, kStripes> stripes_;
  mutable std::atomic<std::uint64_t> hits_{0};
};

}  // namespace matroids::detail

#endif  // MATROIDS_DETAIL_RANK_CACHE_HPP_
