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

#ifndef MATROIDS_MATROID_HPP_
#define MATROIDS_MATROID_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "matroids/detail/rank_cache.hpp"
#include "matroids/errors.hpp"
#include "matroids/rep_types.hpp"
#include "matroids/subset.hpp"

namespace matroids {

// Elements are the dense identifiers 0..size-1; labels are display names.
class GroundSet {
 public:
  GroundSet() = default;

  explicit GroundSet(int size) : labels_(check_size(size)) {
    for (int i = 0; i < size; ++i) labels_[i] = std::to_string(i);
  }

  explicit GroundSet(std::vector<std::string> labels)
      : labels_(std::move(labels)) {
    check_size(static_cast<int>(labels_.size()));
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty()) throw DomainError("empty element label");
      for (char c : labels_[i]) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r' ||
            c == '#') {
          throw DomainError("element label '" + labels_[i] +
                            "' contains a reserved character");
        }
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (labels_[j] == labels_[i]) {
          throw DomainError("duplicate element label '" + labels_[i] + "'");
        }
      }
    }
  }

  int size() const { return static_cast<int>(labels_.size()); }
  Subset mask() const { return full_set(size()); }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<int> find(const std::string& label) const {
    for (int i = 0; i < size(); ++i) {
      if (labels_[i] == label) return i;
    }
    return std::nullopt;
  }

  bool operator==(const GroundSet&) const = default;

 private:
  static std::size_t check_size(int size) {
    if (size < 0 || size > kMaxGroundSize) {
      throw DomainError("ground set size " + std::to_string(size) +
                        " exceeds the cap of " +
                        std::to_string(kMaxGroundSize));
    }
    return static_cast<std::size_t>(size);
  }

  std::vector<std::string> labels_;
};

// Pure, total rank function on subsets of {0..n-1}. Implementations may
// assume their argument lies inside the ground set.
class RankOracle {
 public:
  virtual ~RankOracle() = default;
  virtual int rank(Subset x) const = 0;
};

class Matroid;

enum class RecipeKind {
  kTruncation,
  kFreeExtension,
  kPrincipalExtension,
  kMinor,
  kDual,
  kDirectSum,
  kModularCutExtension,
  kTangleMatroid,
};

// How a derived matroid was obtained from its operands.
struct Recipe {
  RecipeKind kind = RecipeKind::kDual;
  std::vector<Matroid> operands;
  Subset contract = 0;         // kMinor
  Subset deleted = 0;          // kMinor
  Subset flat = 0;             // kPrincipalExtension
  std::vector<Subset> flats;   // kModularCutExtension generators,
                               // kTangleMatroid maximal small sets
  int order = 0;               // kTangleMatroid
};

using Provenance = std::variant<LinearRep, GraphRep, EvenCycleRep,
                                SignedGraphRep, UniformSpec, WhirlSpec, Recipe>;

// An immutable matroid value: ground set, rank oracle and provenance. Copies
// share state; rank queries are memoized and thread-safe.
class Matroid {
 public:
  Matroid();

  Matroid(GroundSet ground, std::shared_ptr<const RankOracle> oracle,
          Provenance provenance)
      : state_(std::make_shared<State>(std::move(ground), std::move(oracle),
                                       std::move(provenance))) {}

  int size() const { return state_->ground.size(); }
  Subset mask() const { return state_->ground.mask(); }
  const GroundSet& ground() const { return state_->ground; }
  const std::string& label(int i) const { return state_->ground.label(i); }
  const Provenance& provenance() const { return state_->provenance; }
  const RankOracle& oracle() const { return *state_->oracle; }
  std::shared_ptr<const RankOracle> oracle_ptr() const {
    return state_->oracle;
  }

  int rank(Subset x) const {
    if (x & ~mask()) {
      throw DomainError("subset contains elements outside the ground set");
    }
    return rank_unchecked(x);
  }

  // Rank of the whole ground set.
  int rank() const { return state_->full_rank; }

  int rank_unchecked(Subset x) const {
    return state_->cache.get(
        x, [this](Subset s) { return state_->oracle->rank(s); });
  }

  // Same matroid with different element labels.
  Matroid relabeled(std::vector<std::string> labels) const {
    GroundSet g(std::move(labels));
    if (g.size() != size()) throw DomainError("label count mismatch");
    return Matroid(std::move(g), state_->oracle, state_->provenance);
  }

  bool shares_state_with(const Matroid& other) const {
    return state_ == other.state_;
  }

 private:
  struct State {
    State(GroundSet g, std::shared_ptr<const RankOracle> o, Provenance p)
        : ground(std::move(g)),
          oracle(std::move(o)),
          provenance(std::move(p)),
          cache(ground.size()),
          full_rank(oracle->rank(ground.mask())) {}

    GroundSet ground;
    std::shared_ptr<const RankOracle> oracle;
    Provenance provenance;
    detail::RankCache cache;
    int full_rank;
  };

  std::shared_ptr<const State> state_;
};

namespace detail {

class UniformOracle final : public RankOracle {
 public:
  explicit UniformOracle(int rank) : rank_(rank) {}
  int rank(Subset x) const override {
    const int k = popcount(x);
    return k < rank_ ? k : rank_;
  }

 private:
  int rank_;
};

}  // namespace detail

inline Matroid::Matroid()
    : Matroid(GroundSet(0), std::make_shared<detail::UniformOracle>(0),
              UniformSpec{0, 0}) {}

// Witness that `target` is isomorphic to host / contract \ deleted:
// mapping[i] is the host element playing the role of target element i.
struct MinorCertificate {
  Subset contract = 0;
  Subset deleted = 0;
  std::vector<int> mapping;

  Subset image() const {
    Subset s = 0;
    for (int h : mapping) s |= bit(h);
    return s;
  }

  bool operator==(const MinorCertificate&) const = default;
};

// Dense table of all 2^n ranks, for small ground sets.
class RankTable {
 public:
  static constexpr int kMaxSize = 24;

  explicit RankTable(const Matroid& m) : size_(m.size()) {
    if (size_ > kMaxSize) {
      throw ResourceError("rank table needs |E| <= " +
                          std::to_string(kMaxSize));
    }
    const std::size_t count = std::size_t{1} << size_;
    ranks_.resize(count);
    const RankOracle& oracle = m.oracle();
    for (std::size_t x = 0; x < count; ++x) {
      ranks_[x] = static_cast<std::uint8_t>(oracle.rank(x));
    }
  }

  int size() const { return size_; }
  int operator()(Subset x) const { return ranks_[x]; }
  int rank() const { return ranks_.back(); }

 private:
  int size_;
  std::vector<std::uint8_t> ranks_;
};

}  // namespace matroids

#endif  // MATROIDS_MATROID_HPP_
