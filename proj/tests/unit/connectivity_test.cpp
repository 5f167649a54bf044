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


#include "matroids/connectivity.hpp"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "matroids/constructions.hpp"
#include "matroids/core.hpp"
#include "matroids/flats.hpp"
#include "support/oracles.hpp"

namespace matroids {
namespace {

TEST(LambdaTest, SymmetricAndSelfDual) {
  std::mt19937 rng(61);
  for (int i = 0; i < 20; ++i) {
    const Matroid m = oracles::random_linear(rng, 10);
    const Matroid d = dual(m);
    for (Subset x = 0; x <= m.mask(); ++x) {
      EXPECT_EQ(lambda(m, x), lambda(m, m.mask() & ~x));
      EXPECT_EQ(lambda(m, x), lambda(d, x));
      if (x == m.mask()) break;
    }
  }
}

TEST(LambdaTest, SubmodularOnAllPairs) {
  std::mt19937 rng(62);
  for (int i = 0; i < 4; ++i) {
    const Matroid m = oracles::random_linear(rng, 10, 4, 3);
    const std::vector<int> r = oracles::ranks(m);
    const int n = m.size();
    for (Subset x = 0; x < r.size(); ++x) {
      for (Subset y = x; y < r.size(); ++y) {
        ASSERT_GE(oracles::lambda(r, n, x) + oracles::lambda(r, n, y),
                  oracles::lambda(r, n, x | y) + oracles::lambda(r, n, x & y));
      }
    }
    for (Subset x = 0; x < r.size(); x += 37) {
      EXPECT_EQ(lambda(m, x), oracles::lambda(r, n, x));
    }
  }
}

TEST(LocalConnTest, SkewAndSpanning) {
  const Matroid k4 = clique(4);
  const Subset a = subset_of(k4, {"1-2"});
  const Subset b = subset_of(k4, {"3-4"});
  EXPECT_EQ(local_conn(k4, a, b), 0);
  const Subset t = subset_of(k4, {"1-2", "1-3", "2-3"});
  EXPECT_EQ(local_conn(k4, t, subset_of(k4, {"1-2", "1-4", "2-4"})), 1);
  EXPECT_EQ(local_conn(k4, k4.mask(), k4.mask()), 3);
}

TEST(ComponentsTest, MatchMinimalSeparators) {
  std::mt19937 rng(63);
  for (int i = 0; i < 30; ++i) {
    const Matroid m = oracles::random_linear(rng, 9);
    const std::vector<Subset> comps = connected_components(m);
    Subset seen = 0;
    for (Subset c : comps) {
      EXPECT_EQ(c & seen, 0u);
      seen |= c;
      EXPECT_EQ(lambda(m, c), 0);
      // no proper nonempty subset of a component is a separator
      for (Subset s = (c - 1) & c; s != 0; s = (s - 1) & c) {
        EXPECT_NE(lambda(m, s), 0);
      }
    }
    EXPECT_EQ(seen, m.mask());
  }
  EXPECT_EQ(connected_components(direct_sum(fano(), clique(4))).size(), 2u);
  EXPECT_EQ(connected_components(uniform(0, 3)).size(), 3u);
}

TEST(KappaTest, AgreesWithExhaustiveMinimum) {
  std::mt19937 rng(64);
  for (int i = 0; i < 40; ++i) {
    const int size = std::uniform_int_distribution<int>(4, 18)(rng);
    const int rows = std::uniform_int_distribution<int>(2, 6)(rng);
    const Matroid m = oracles::random_linear(rng, size, rows, 2 + i % 2);
    std::vector<int> order(size);
    for (int j = 0; j < size; ++j) order[j] = j;
    std::shuffle(order.begin(), order.end(), rng);
    Subset x = bit(order[0]);
    Subset y = bit(order[1]);
    if (size > 6) {
      x |= bit(order[2]);
      y |= bit(order[3]);
    }
    ASSERT_LE(popcount(m.mask() & ~x & ~y), 16);
    const int brute = oracles::brute_kappa(m, x, y);
    const KappaResult k = kappa(m, x, y);
    EXPECT_EQ(k.value, brute) << "instance " << i;
    EXPECT_EQ(kappa(m, x, y, 4).value, brute);
    EXPECT_TRUE(is_subset(x, k.certificate.side));
    EXPECT_EQ(k.certificate.side & y, 0u);
    EXPECT_EQ(lambda(m, k.certificate.side), k.value);
  }
}

TEST(KappaTest, DirectSumAndErrors) {
  const Matroid s = direct_sum(fano(), clique(4));
  const KappaResult k = kappa(s, bit(0), bit(8));
  EXPECT_EQ(k.value, 0);
  EXPECT_EQ(lambda(s, k.certificate.side), 0);
  EXPECT_THROW(kappa(s, bit(0), bit(0)), DomainError);
}

TEST(LinkingTest, PostconditionsHold) {
  std::mt19937 rng(65);
  for (int i = 0; i < 40; ++i) {
    const Matroid m = oracles::random_linear(rng, 11);
    if (m.size() < 3) continue;
    const Subset x = bit(0) | (m.size() > 4 ? bit(1) : 0);
    const Subset y = bit(m.size() - 1);
    const LinkingResult l = linking_minor(m, x, y);
    const Subset kept = x | y;
    EXPECT_EQ(l.kappa, oracles::brute_kappa(m, x, y));
    for_each_subset(kept, [&](Subset s) {
      if (is_subset(s, x) || is_subset(s, y)) {
        EXPECT_EQ(l.minor.rank(extract(s, kept)), m.rank(s));
      }
    });
    EXPECT_EQ(lambda(l.minor, extract(x, kept)), l.kappa);
    EXPECT_TRUE(validate_certificate(m, l.minor, l.certificate));
  }
}

TEST(VerticalTest, AgreesWithAllBipartitions) {
  std::mt19937 rng(66);
  for (int i = 0; i < 30; ++i) {
    const Matroid m = oracles::random_linear(rng, 12);
    for (int k = 2; k <= 4; ++k) {
      const VerticalResult v = is_vertically_k_connected(m, k);
      EXPECT_EQ(v.connected, oracles::brute_vertically_connected(m, k))
          << "instance " << i << " k=" << k;
      if (v.certificate) {
        const Subset a = v.certificate->side;
        const Subset b = m.mask() & ~a;
        EXPECT_LT(m.rank(a), m.rank());
        EXPECT_LT(m.rank(b), m.rank());
        EXPECT_LT(lambda(m, a), k - 1);
      }
    }
  }
}

TEST(VerticalTest, SmallExamples) {
  EXPECT_TRUE(is_vertically_k_connected(clique(5), 4).connected);
  EXPECT_TRUE(oracles::brute_vertically_connected(clique(5), 4));
  EXPECT_EQ(is_vertically_k_connected(clique(5), 5).connected,
            oracles::brute_vertically_connected(clique(5), 5));
  // U_{3,4}: two pairs are lines that each miss full rank, and
  // 2 + 2 - 3 = 1 < 2, so the circuit is not vertically 3-connected.
  EXPECT_FALSE(is_vertically_k_connected(uniform(3, 4), 3).connected);
  EXPECT_FALSE(oracles::brute_vertically_connected(uniform(3, 4), 3));
  EXPECT_TRUE(is_vertically_k_connected(uniform(3, 5), 3).connected);
  EXPECT_THROW(is_vertically_k_connected(clique(4), 1), DomainError);
}

TEST(ModularFlatTest, AgreesWithDefinition) {
  std::mt19937 rng(67);
  for (int i = 0; i < 15; ++i) {
    const Matroid m = oracles::random_linear(rng, 8);
    for (Subset f : all_flats(m)) {
      EXPECT_EQ(is_modular_flat(m, f), oracles::brute_modular_flat(m, f));
    }
  }
  EXPECT_THROW(is_modular_flat(clique(4), bit(0) | bit(1)), DomainError);
}

TEST(ModularFlatTest, CliqueFlatsAreModularIffConnected) {
  for (int n = 2; n <= 5; ++n) {
    const Matroid k = clique(n + 1);
    for (Subset f : all_flats(k)) {
      const bool connected =
          f == 0 || connected_components(restriction(k, f)).size() == 1;
      EXPECT_EQ(is_modular_flat(k, f), connected) << "n=" << n << " f=" << f;
    }
  }
}

}  // namespace
}  // namespace matroids
