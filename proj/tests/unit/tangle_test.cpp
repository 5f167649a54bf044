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


#include "matroids/tangle.hpp"

#include <algorithm>
#include <vector>

#include "gtest/gtest.h"
#include "matroids/constructions.hpp"
#include "matroids/core.hpp"
#include "matroids/minor_search.hpp"
#include "support/oracles.hpp"

namespace matroids {
namespace {

// All members of a tangle, listed from the definition.
std::vector<Subset> members(const Tangle& t) {
  std::vector<Subset> out;
  const Matroid& m = t.matroid();
  for (Subset x = 0;; ++x) {
    if (t.contains(x)) out.push_back(x);
    if (x == m.mask()) break;
  }
  return out;
}

std::vector<Subset> tk_family(const Matroid& m, int k) {
  std::vector<Subset> out;
  for (Subset x = 0;; ++x) {
    const Subset rest = m.mask() & ~x;
    if (lambda(m, x) < k - 1 && m.rank(x) < m.rank() &&
        m.rank(rest) < popcount(rest)) {
      out.push_back(x);
    }
    if (x == m.mask()) break;
  }
  return out;
}

TEST(TangleTest, CliqueTangleOrder) {
  EXPECT_EQ(clique_tangle_order(3), 2);
  EXPECT_EQ(clique_tangle_order(4), 3);
  EXPECT_EQ(clique_tangle_order(5), 4);
  EXPECT_EQ(clique_tangle_order(6), 4);
}

TEST(TangleTest, CliqueTanglesSatisfyTheAxioms) {
  for (int n = 2; n <= 5; ++n) {
    const Matroid k = clique(n + 1);
    const int order = clique_tangle_order(n);
    const TangleResult t = tangle_tk(k, order);
    ASSERT_TRUE(t.tangle.has_value()) << "n=" << n << ": " << t.check.detail;
    const std::vector<Subset> fam = members(*t.tangle);
    EXPECT_EQ(fam, tk_family(k, order));
    EXPECT_EQ(oracles::brute_tangle_violation(k, fam, order), 0);
    EXPECT_TRUE(is_tangle(k, fam, order).ok);
  }
}

TEST(TangleTest, ViolationsAreReportedByAxiom) {
  const Matroid k4 = clique(4);
  // Order 2 separations are those with lambda 0; M(K_4) is connected, so the
  // only ones are (empty, E).
  EXPECT_EQ(is_tangle(k4, {}, 2).violated_axiom, 1);
  EXPECT_EQ(oracles::brute_tangle_violation(k4, {}, 2), 1);
  EXPECT_EQ(is_tangle(k4, {k4.mask()}, 2).violated_axiom, 2);
  EXPECT_EQ(oracles::brute_tangle_violation(k4, {k4.mask()}, 2), 2);

  // In U_{2,4}, order 3 admits every set with lambda <= 1: all sets but the
  // 2-element ones. The small sets are the sets of size at most 1.
  const Matroid u = uniform(2, 4);
  std::vector<Subset> fam = {0};
  for (int i = 0; i < 3; ++i) fam.push_back(bit(i));
  fam.push_back(0b0111);
  EXPECT_EQ(is_tangle(u, fam, 3).violated_axiom, 3);
  EXPECT_EQ(oracles::brute_tangle_violation(u, fam, 3), 3);
  fam.back() = bit(3);
  EXPECT_TRUE(is_tangle(u, fam, 3).ok);
  EXPECT_EQ(oracles::brute_tangle_violation(u, fam, 3), 0);
}

TEST(TangleTest, AgreesWithBruteForceOnTk) {
  const std::vector<Matroid> corpus = {fano(), clique(5), biclique(3, 3),
                                       uniform(3, 7), whirl(4), spike(4)};
  for (const Matroid& m : corpus) {
    for (int k = 1; k <= 4; ++k) {
      const std::vector<Subset> fam = tk_family(m, k);
      const TangleResult t = tangle_tk(m, k);
      const int brute = oracles::brute_tangle_violation(m, fam, k);
      EXPECT_EQ(t.check.ok, brute == 0) << "k=" << k;
      if (!t.check.ok) EXPECT_EQ(t.check.violated_axiom, brute);
    }
  }
}

TEST(TangleTest, RankIsTheLeastConnectivityAbove) {
  for (const Matroid& m : {clique(5), fano(), biclique(3, 3)}) {
    const TangleResult t = tangle_tk(m, 3);
    ASSERT_TRUE(t.tangle.has_value());
    const std::vector<Subset> fam = members(*t.tangle);
    for (Subset x = 0;; ++x) {
      int want = 2;
      for (Subset z : fam) {
        if (is_subset(x, z)) want = std::min(want, lambda(m, z));
      }
      ASSERT_EQ(tangle_rank(*t.tangle, x), want);
      if (x == m.mask()) break;
    }
  }
}

TEST(TangleTest, TangleMatroidsSatisfyRankAxioms) {
  const Matroid pg = pg32();
  const std::vector<std::pair<Matroid, int>> cases = {
      {clique(4), 2},
      {clique(5), 3},
      {fano(), 2},
      {biclique(3, 3), 3},
      {deletion(pg, subset_of(pg, {"1", "2", "4"})), 3},
  };
  for (const auto& [m, k] : cases) {
    ASSERT_LE(m.size(), 12);
    const TangleResult t = tangle_tk(m, k);
    ASSERT_TRUE(t.tangle.has_value());
    const Matroid tm = tangle_matroid(*t.tangle);
    EXPECT_TRUE(oracles::rank_axioms_local(oracles::ranks(tm), tm.size()));
    EXPECT_LE(tm.rank(), k - 1);
  }
}

TEST(TangleTest, InducedTanglesFromCliqueMinors) {
  const std::vector<std::pair<Matroid, int>> cases = {
      {clique(6), 4}, {square_ext(5), 4}, {triangle_ext(5), 4},
      {pg32(), 3},    {clique(6), 3},
  };
  for (const auto& [host, n] : cases) {
    const auto cert = find_clique_minor(host, n);
    ASSERT_TRUE(cert.has_value());
    const Matroid kn = clique(n + 1);
    const TangleResult base = tangle_tk(kn, clique_tangle_order(n));
    ASSERT_TRUE(base.tangle.has_value());
    const TangleResult t = induced_tangle(host, kn, *cert, *base.tangle);
    ASSERT_TRUE(t.tangle.has_value()) << t.check.detail;
    // membership follows the definition through the certificate
    const std::vector<Subset> fam = members(*t.tangle);
    EXPECT_EQ(oracles::brute_tangle_violation(host, fam, t.tangle->order()),
              0);
    for (Subset x : fam) {
      Subset in_n = 0;
      for (int i = 0; i < kn.size(); ++i) {
        if (contains(x, cert->mapping[i])) in_n |= bit(i);
      }
      EXPECT_TRUE(base.tangle->contains(in_n));
    }
  }
}

TEST(TangleTest, RejectsInvalidCertificates) {
  const Matroid k = clique(5);
  const TangleResult base = tangle_tk(clique(4), 2);
  ASSERT_TRUE(base.tangle.has_value());
  MinorCertificate bad;
  bad.mapping = {0, 1, 2, 3, 4, 5};
  EXPECT_THROW(induced_tangle(k, clique(4), bad, *base.tangle), DomainError);
  EXPECT_THROW(tangle_tk(clique(4), 0), DomainError);
}

}  // namespace
}  // namespace matroids
