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

#ifndef MATROIDS_TANGLE_HPP_
#define MATROIDS_TANGLE_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "matroids/connectivity.hpp"
#include "matroids/core.hpp"
#include "matroids/errors.hpp"
#include "matroids/matroid.hpp"

namespace matroids {

// Largest ground set on which tangle families are materialized.
inline constexpr int kMaxTangleGroundSize = 24;

// A family of small sets of order theta, stored by its maximal members. A set
// belongs to the family when it is (theta-1)-separating and lies inside a
// maximal member.
class Tangle {
 public:
  Tangle(Matroid m, int order, std::vector<Subset> maximal)
      : m_(std::move(m)),
        order_(order),
        maximal_(std::move(maximal)),
        table_(std::make_shared<Table>()) {
    std::sort(maximal_.begin(), maximal_.end());
  }

  const Matroid& matroid() const { return m_; }
  int order() const { return order_; }
  const std::vector<Subset>& maximal() const { return maximal_; }

  bool contains(Subset x) const {
    if (lambda(m_, x) >= order_ - 1) return false;
    return inside_maximal(x);
  }

  bool inside_maximal(Subset x) const {
    for (Subset w : maximal_) {
      if (is_subset(x, w)) return true;
    }
    return false;
  }

  // kappa_T(X): theta - 1 when X lies in no small set, otherwise the least
  // lambda(Z) over small sets Z containing X.
  int rank(Subset x) const {
    check_subset(m_, x);
    if (m_.size() <= 20) {
      std::call_once(table_->once, [this] { build_table(); });
      return table_->best[x];
    }
    int best = order_ - 1;
    for (Subset w : maximal_) {
      if (!is_subset(x, w)) continue;
      for_each_subset(w & ~x, [&](Subset s) {
        const int l = lambda(m_, x | s);
        if (l < best) best = l;
      });
    }
    return best;
  }

 private:
  struct Table {
    std::once_flag once;
    std::vector<std::uint8_t> best;
  };

  // Superset-minimum transform over the members.
  void build_table() const {
    const int n = m_.size();
    const std::size_t count = std::size_t{1} << n;
    std::vector<std::uint8_t>& best = table_->best;
    best.assign(count, static_cast<std::uint8_t>(order_ - 1));
    for (std::size_t x = 0; x < count; ++x) {
      if (inside_maximal(x)) {
        const int l = lambda(m_, x);
        if (l < order_ - 1) best[x] = static_cast<std::uint8_t>(l);
      }
    }
    for (int i = 0; i < n; ++i) {
      for (std::size_t x = 0; x < count; ++x) {
        if (!(x >> i & 1)) {
          best[x] = std::min(best[x], best[x | (std::size_t{1} << i)]);
        }
      }
    }
  }

  Matroid m_;
  int order_;
  std::vector<Subset> maximal_;
  std::shared_ptr<Table> table_;
};

struct TangleCheck {
  bool ok = true;
  int violated_axiom = 0;  // 1, 2 or 3 when !ok
  std::string detail;
};

namespace detail {

inline std::vector<Subset> maximal_members(std::vector<Subset> family) {
  std::sort(family.begin(), family.end(), [](Subset a, Subset b) {
    const int pa = popcount(a);
    const int pb = popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  std::vector<Subset> out;
  for (Subset x : family) {
    bool covered = false;
    for (Subset w : out) {
      if (is_subset(x, w)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline void check_tangle_size(const Matroid& m) {
  if (m.size() > kMaxTangleGroundSize) {
    throw ResourceError("tangle families need |E| <= " +
                        std::to_string(kMaxTangleGroundSize));
  }
}

inline std::string set_text(const Matroid& m, Subset x) {
  std::string s = "{";
  bool first = true;
  for (int e : bits(x)) {
    if (!first) s += ",";
    s += m.label(e);
    first = false;
  }
  return s + "}";
}

// Axioms 2 and 3 depend only on the maximal members.
inline TangleCheck check_axioms_2_3(const Matroid& m,
                                    const std::vector<Subset>& maximal,
                                    const std::function<bool(Subset)>& member) {
  const Subset e = m.mask();
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    for (std::size_t j = i; j < maximal.size(); ++j) {
      const Subset ab = maximal[i] | maximal[j];
      for (std::size_t k = j; k < maximal.size(); ++k) {
        if ((ab | maximal[k]) == e) {
          return {false, 2,
                  "small sets " + set_text(m, maximal[i]) + ", " +
                      set_text(m, maximal[j]) + ", " +
                      set_text(m, maximal[k]) + " cover E"};
        }
      }
    }
  }
  for (int x : bits(e)) {
    if (member(e & ~bit(x))) {
      return {false, 3, "E - " + m.label(x) + " is small"};
    }
  }
  return {};
}

}  // namespace detail

// Checks the tangle axioms for an explicit family.
inline TangleCheck is_tangle(const Matroid& m,
                             const std::vector<Subset>& family, int order) {
  detail::check_tangle_size(m);
  const std::unordered_set<Subset> members(family.begin(), family.end());
  for (Subset x : family) {
    check_subset(m, x);
    if (lambda(m, x) >= order - 1) {
      return {false, 1,
              detail::set_text(m, x) + " is not (theta-1)-separating"};
    }
  }
  const Subset e = m.mask();
  for (Subset x = 0; x <= e; ++x) {
    if (lambda(m, x) < order - 1 && !members.count(x) &&
        !members.count(e & ~x)) {
      return {false, 1,
              "neither " + detail::set_text(m, x) + " nor its complement is "
              "small"};
    }
    if (x == e) break;
  }
  return detail::check_axioms_2_3(
      m, detail::maximal_members(family),
      [&](Subset x) { return members.count(x) > 0; });
}

inline TangleCheck is_tangle(const Tangle& t) {
  const Matroid& m = t.matroid();
  detail::check_tangle_size(m);
  const int order = t.order();
  for (Subset w : t.maximal()) {
    if (lambda(m, w) >= order - 1) {
      return {false, 1,
              detail::set_text(m, w) + " is not (theta-1)-separating"};
    }
  }
  const Subset e = m.mask();
  for (Subset x = 0;; ++x) {
    if (lambda(m, x) < order - 1 && !t.inside_maximal(x) &&
        !t.inside_maximal(e & ~x)) {
      return {false, 1,
              "neither " + detail::set_text(m, x) + " nor its complement is "
              "small"};
    }
    if (x == e) break;
  }
  return detail::check_axioms_2_3(m, t.maximal(),
                                  [&](Subset x) { return t.contains(x); });
}

struct TangleResult {
  std::optional<Tangle> tangle;
  TangleCheck check;
};

namespace detail {

inline TangleResult finish_tangle(const Matroid& m, int order,
                                  std::vector<Subset> family) {
  TangleResult out;
  Tangle t(m, order, maximal_members(std::move(family)));
  out.check = is_tangle(t);
  if (out.check.ok) out.tangle = std::move(t);
  return out;
}

}  // namespace detail

// T_k(M): the (k-1)-separating sets that are neither spanning nor cospanning,
// checked as a tangle of order k.
inline TangleResult tangle_tk(const Matroid& m, int k) {
  if (k < 1) throw DomainError("tangle order must be positive");
  detail::check_tangle_size(m);
  const Subset e = m.mask();
  std::vector<Subset> family;
  for (Subset x = 0;; ++x) {
    if (lambda(m, x) < k - 1 && m.rank_unchecked(x) < m.rank() &&
        m.rank_unchecked(e & ~x) < popcount(e & ~x)) {
      family.push_back(x);
    }
    if (x == e) break;
  }
  return detail::finish_tangle(m, k, std::move(family));
}

inline int tangle_rank(const Tangle& t, Subset x) { return t.rank(x); }

namespace detail {

class TangleOracle final : public RankOracle {
 public:
  explicit TangleOracle(Tangle t) : t_(std::move(t)) {}
  int rank(Subset x) const override { return t_.rank(x); }

 private:
  Tangle t_;
};

}  // namespace detail

// The matroid with rank function kappa_T. Rank axioms are checked
// exhaustively on ground sets of at most `validate_limit` elements.
inline Matroid tangle_matroid(const Tangle& t, int validate_limit = 16) {
  Recipe recipe;
  recipe.kind = RecipeKind::kTangleMatroid;
  recipe.operands.push_back(t.matroid());
  recipe.flats = t.maximal();
  recipe.order = t.order();
  Matroid out(t.matroid().ground(), std::make_shared<detail::TangleOracle>(t),
              std::move(recipe));
  if (out.size() <= validate_limit) {
    if (auto bad = check_rank_axioms(out)) {
      throw DomainError("kappa_T is not a rank function: " + *bad);
    }
  }
  return out;
}

// The tangle on M induced by a tangle on a minor N of M, given by a
// certificate whose mapping sends N's elements into E(M).
inline TangleResult induced_tangle(const Matroid& m, const Matroid& n,
                                   const MinorCertificate& cert,
                                   const Tangle& tn) {
  if (!validate_certificate(m, n, cert)) {
    throw DomainError("invalid minor certificate");
  }
  detail::check_tangle_size(m);
  const int order = tn.order();
  const Subset e = m.mask();
  std::vector<Subset> family;
  for (Subset x = 0;; ++x) {
    if (lambda(m, x) < order - 1) {
      Subset in_n = 0;
      for (int i = 0; i < n.size(); ++i) {
        if (contains(x, cert.mapping[i])) in_n |= bit(i);
      }
      if (tn.contains(in_n)) family.push_back(x);
    }
    if (x == e) break;
  }
  return detail::finish_tangle(m, order, std::move(family));
}

inline int clique_tangle_order(int n) { return (2 * n + 2) / 3; }

// T_{ceil(2n/3)}(M, N) for a minor N of M isomorphic to M(K_{n+1}); n is
// read off as r(N).
inline TangleResult clique_tangle(const Matroid& m, const Matroid& n,
                                  const MinorCertificate& cert) {
  const TangleResult base = tangle_tk(n, clique_tangle_order(n.rank()));
  if (!base.tangle) return base;
  return induced_tangle(m, n, cert, *base.tangle);
}

}  // namespace matroids

#endif  // MATROIDS_TANGLE_HPP_
