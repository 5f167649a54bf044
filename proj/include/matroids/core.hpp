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

#ifndef MATROIDS_CORE_HPP_
#define MATROIDS_CORE_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "matroids/errors.hpp"
#include "matroids/matroid.hpp"
#include "matroids/subset.hpp"

namespace matroids {

inline void check_subset(const Matroid& m, Subset x) {
  if (x & ~m.mask()) {
    throw DomainError("subset contains elements outside the ground set");
  }
}

inline int rank(const Matroid& m, Subset x) { return m.rank(x); }

// Subset named by element labels.
inline Subset subset_of(const Matroid& m,
                        const std::vector<std::string>& labels) {
  Subset s = 0;
  for (const std::string& l : labels) {
    const std::optional<int> i = m.ground().find(l);
    if (!i) throw DomainError("unknown element label '" + l + "'");
    s |= bit(*i);
  }
  return s;
}

inline Subset closure(const Matroid& m, Subset x) {
  const int r = m.rank(x);
  Subset cl = x;
  for (int e : bits(m.mask() & ~x)) {
    if (m.rank_unchecked(x | bit(e)) == r) cl |= bit(e);
  }
  return cl;
}

inline bool is_independent(const Matroid& m, Subset x) {
  return m.rank(x) == popcount(x);
}

inline bool is_flat(const Matroid& m, Subset x) { return closure(m, x) == x; }

inline bool is_spanning(const Matroid& m, Subset x) {
  return m.rank(x) == m.rank();
}

inline Subset loops(const Matroid& m) {
  Subset out = 0;
  for (int e : bits(m.mask())) {
    if (m.rank_unchecked(bit(e)) == 0) out |= bit(e);
  }
  return out;
}

inline Subset coloops(const Matroid& m) {
  Subset out = 0;
  const int r = m.rank();
  for (int e : bits(m.mask())) {
    if (m.rank_unchecked(m.mask() & ~bit(e)) < r) out |= bit(e);
  }
  return out;
}

// Parallel classes of the nonloop elements, ordered by least element.
inline std::vector<Subset> parallel_classes(const Matroid& m) {
  std::vector<Subset> classes;
  Subset seen = loops(m);
  for (int e : bits(m.mask())) {
    if (contains(seen, e)) continue;
    Subset cls = bit(e);
    for (int f : bits(m.mask() & ~seen & ~full_set(e + 1))) {
      if (m.rank_unchecked(bit(e) | bit(f)) == 1) cls |= bit(f);
    }
    seen |= cls;
    classes.push_back(cls);
  }
  return classes;
}

inline bool is_simple(const Matroid& m) {
  return loops(m) == 0 &&
         static_cast<int>(parallel_classes(m).size()) == m.size();
}

// Circuits of size at most `bound`, ordered by size then by mask.
inline std::vector<Subset> circuits(const Matroid& m, int bound) {
  std::vector<Subset> out;
  bound = std::min(bound, m.size());
  for (int k = 1; k <= bound; ++k) {
    for_each_k_subset(m.mask(), k, [&](Subset s) {
      if (m.rank_unchecked(s) != k - 1) return;
      for (int e : bits(s)) {
        if (m.rank_unchecked(s & ~bit(e)) != k - 1) return;
      }
      out.push_back(s);
    });
  }
  return out;
}

namespace detail {

class MinorOracle final : public RankOracle {
 public:
  MinorOracle(Matroid base, Subset contract, Subset kept)
      : base_(std::move(base)),
        contract_(contract),
        kept_(kept),
        contract_rank_(base_.rank(contract)) {}

  int rank(Subset x) const override {
    return base_.rank_unchecked(deposit(x, kept_) | contract_) -
           contract_rank_;
  }

 private:
  Matroid base_;
  Subset contract_;
  Subset kept_;
  int contract_rank_;
};

class DualOracle final : public RankOracle {
 public:
  explicit DualOracle(Matroid base) : base_(std::move(base)) {}

  int rank(Subset x) const override {
    return popcount(x) + base_.rank_unchecked(base_.mask() & ~x) -
           base_.rank();
  }

 private:
  Matroid base_;
};

class DirectSumOracle final : public RankOracle {
 public:
  DirectSumOracle(Matroid a, Matroid b) : a_(std::move(a)), b_(std::move(b)) {}

  int rank(Subset x) const override {
    return a_.rank_unchecked(x & a_.mask()) +
           b_.rank_unchecked(x >> a_.size());
  }

 private:
  Matroid a_;
  Matroid b_;
};

inline std::vector<std::string> labels_of(const Matroid& m, Subset s) {
  std::vector<std::string> out;
  for (int e : bits(s)) out.push_back(m.label(e));
  return out;
}

}  // namespace detail

// The minor m / contract \ deleted on the remaining elements, in increasing
// order, keeping their labels. Nested minors are flattened onto one base.
inline Matroid minor(const Matroid& m, Subset contract, Subset deleted) {
  check_subset(m, contract | deleted);
  if (contract & deleted) {
    throw DomainError("contract and delete sets overlap");
  }
  const Subset kept = m.mask() & ~contract & ~deleted;
  std::vector<std::string> labels = detail::labels_of(m, kept);

  Matroid base = m;
  Subset base_contract = contract;
  Subset base_kept = kept;
  if (const auto* r = std::get_if<Recipe>(&m.provenance());
      r != nullptr && r->kind == RecipeKind::kMinor) {
    base = r->operands.front();
    const Subset old_kept = base.mask() & ~r->contract & ~r->deleted;
    base_contract = r->contract | deposit(contract, old_kept);
    base_kept = deposit(kept, old_kept);
  }
  Recipe recipe;
  recipe.kind = RecipeKind::kMinor;
  recipe.contract = base_contract;
  recipe.deleted = base.mask() & ~base_kept & ~base_contract;
  recipe.operands.push_back(base);
  auto oracle =
      std::make_shared<detail::MinorOracle>(base, base_contract, base_kept);
  return Matroid(GroundSet(std::move(labels)), std::move(oracle),
                 std::move(recipe));
}

inline Matroid deletion(const Matroid& m, Subset d) { return minor(m, 0, d); }

inline Matroid contraction(const Matroid& m, Subset c) {
  return minor(m, c, 0);
}

inline Matroid restriction(const Matroid& m, Subset x) {
  check_subset(m, x);
  return minor(m, 0, m.mask() & ~x);
}

inline Matroid dual(const Matroid& m) {
  if (const auto* r = std::get_if<Recipe>(&m.provenance());
      r != nullptr && r->kind == RecipeKind::kDual) {
    return r->operands.front().relabeled(m.ground().labels());
  }
  Recipe recipe;
  recipe.kind = RecipeKind::kDual;
  recipe.operands.push_back(m);
  return Matroid(m.ground(), std::make_shared<detail::DualOracle>(m),
                 std::move(recipe));
}

inline Matroid direct_sum(const Matroid& a, const Matroid& b) {
  if (a.size() + b.size() > kMaxGroundSize) {
    throw DomainError("direct sum exceeds the ground set cap");
  }
  std::vector<std::string> labels = a.ground().labels();
  for (const std::string& l : b.ground().labels()) {
    std::string name = l;
    while (std::find(labels.begin(), labels.end(), name) != labels.end()) {
      name += "'";
    }
    labels.push_back(name);
  }
  Recipe recipe;
  recipe.kind = RecipeKind::kDirectSum;
  recipe.operands = {a, b};
  return Matroid(GroundSet(std::move(labels)),
                 std::make_shared<detail::DirectSumOracle>(a, b),
                 std::move(recipe));
}

struct Simplification {
  Matroid matroid;
  // representative[e] is the element of `matroid` standing for e's parallel
  // class, or -1 when e is a loop.
  std::vector<int> representative;
};

inline Simplification simplify(const Matroid& m) {
  const std::vector<Subset> classes = parallel_classes(m);
  Subset reps = 0;
  for (Subset c : classes) reps |= bit(lowest(c));
  std::vector<int> representative(m.size(), -1);
  for (Subset c : classes) {
    const int pos = popcount(reps & full_set(lowest(c)));
    for (int e : bits(c)) representative[e] = pos;
  }
  return {restriction(m, reps), std::move(representative)};
}

// Number of points (rank-1 flats).
inline int epsilon(const Matroid& m) {
  return static_cast<int>(parallel_classes(m).size());
}

// Exhaustive check of the rank axioms: r(empty) = 0, unit increase, and
// submodularity in its local form r(X+e) + r(X+f) >= r(X+e+f) + r(X), which
// implies the global inequality. Returns a description of the first
// violation found.
inline std::optional<std::string> check_rank_axioms(const Matroid& m) {
  const RankTable r(m);
  const int n = m.size();
  if (r(0) != 0) return "rank of the empty set is " + std::to_string(r(0));
  const Subset count = Subset{1} << n;
  for (Subset x = 0; x < count; ++x) {
    for (int e = 0; e < n; ++e) {
      if (contains(x, e)) continue;
      const int d = r(x | bit(e)) - r(x);
      if (d < 0 || d > 1) {
        return "unit increase fails at X=" + std::to_string(x) +
               " e=" + std::to_string(e);
      }
      for (int f = e + 1; f < n; ++f) {
        if (contains(x, f)) continue;
        if (r(x | bit(e)) + r(x | bit(f)) < r(x | bit(e) | bit(f)) + r(x)) {
          return "submodularity fails at X=" + std::to_string(x) +
                 " e=" + std::to_string(e) + " f=" + std::to_string(f);
        }
      }
    }
  }
  return std::nullopt;
}

struct KungCheck {
  std::uint64_t bound = 0;  // saturates at UINT64_MAX
  int epsilon = 0;
  bool holds = false;
};

// Point bound for matroids with no U_{2,ell+2}-minor. The excluded-minor
// precondition is the caller's responsibility here; see check_kung in
// minor_search.hpp for the verified form.
inline KungCheck kung_bound_check(const Matroid& m, int ell) {
  if (ell < 2) throw DomainError("Kung bound needs ell >= 2");
  // 1 + ell + ... + ell^(r-1)
  std::uint64_t bound = 0;
  std::uint64_t power = 1;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  for (int i = 0; i < m.rank(); ++i) {
    bound = bound > kMax - power ? kMax : bound + power;
    power = power > kMax / static_cast<std::uint64_t>(ell)
                ? kMax
                : power * static_cast<std::uint64_t>(ell);
  }
  KungCheck out;
  out.bound = bound;
  out.epsilon = epsilon(m);
  out.holds = static_cast<std::uint64_t>(out.epsilon) <= bound;
  return out;
}

// Checks that `target` is isomorphic to host / contract \ deleted via
// cert.mapping. Exhaustive over all subsets of the target when it has at most
// 22 elements, otherwise all subsets up to size 4 plus random samples.
inline bool validate_certificate(const Matroid& host, const Matroid& target,
                                 const MinorCertificate& cert) {
  if ((cert.contract | cert.deleted) & ~host.mask()) return false;
  if (cert.contract & cert.deleted) return false;
  if (static_cast<int>(cert.mapping.size()) != target.size()) return false;
  Subset image = 0;
  for (int h : cert.mapping) {
    if (h < 0 || h >= host.size() || contains(image, h)) return false;
    image |= bit(h);
  }
  if (image & (cert.contract | cert.deleted)) return false;
  if ((image | cert.contract | cert.deleted) != host.mask()) return false;

  const int rc = host.rank_unchecked(cert.contract);
  auto mapped = [&](Subset x) {
    Subset s = cert.contract;
    for (int e : bits(x)) s |= bit(cert.mapping[e]);
    return s;
  };
  auto agrees = [&](Subset x) {
    return target.rank_unchecked(x) == host.rank_unchecked(mapped(x)) - rc;
  };
  const int n = target.size();
  if (n <= 22) {
    const Subset count = Subset{1} << n;
    for (Subset x = 0; x < count; ++x) {
      if (!agrees(x)) return false;
    }
    return true;
  }
  for (int k = 0; k <= 4; ++k) {
    bool ok = true;
    for_each_k_subset(target.mask(), k, [&](Subset x) {
      if (ok && !agrees(x)) ok = false;
    });
    if (!ok) return false;
  }
  std::mt19937_64 rng(0x5eed);
  for (int i = 0; i < 200000; ++i) {
    if (!agrees(rng() & target.mask())) return false;
  }
  return true;
}

// The minor named by a certificate, with elements ordered as in the target.
inline Matroid certified_minor(const Matroid& host,
                               const MinorCertificate& cert) {
  // The minor recipe orders elements by host index; the certificate's
  // mapping is then only needed to read off the correspondence.
  return minor(host, cert.contract, cert.deleted);
}

}  // namespace matroids

#endif  // MATROIDS_CORE_HPP_
