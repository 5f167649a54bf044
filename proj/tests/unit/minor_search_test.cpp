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


#include "matroids/minor_search.hpp"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "matroids/constructions.hpp"
#include "matroids/core.hpp"
#include "matroids/representations.hpp"
#include "support/oracles.hpp"

namespace matroids {
namespace {

bool graph_matches(const Matroid& m, const GraphRep& g) {
  if (static_cast<int>(g.edges.size()) != m.size()) return false;
  for (Subset x = 0;; ++x) {
    if (oracles::forest_rank(g, x) != m.rank(x)) return false;
    if (x == m.mask()) break;
  }
  return true;
}

TEST(MinorSearchTest, AgreesWithUnprunedSearch) {
  std::mt19937 rng(20260301);
  const std::vector<Matroid> targets = {uniform(2, 4), clique(4), fano(),
                                        uniform(1, 2), uniform(2, 3),
                                        whirl(3)};
  int found = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int size = std::uniform_int_distribution<int>(5, 9)(rng);
    const int rows = std::uniform_int_distribution<int>(2, 4)(rng);
    const int prime = trial % 2 == 0 ? 2 : 3;
    const Matroid m = oracles::random_linear(rng, size, rows, prime);
    for (const Matroid& n : targets) {
      const auto cert = has_minor(m, n);
      ASSERT_EQ(cert.has_value(), oracles::unpruned_has_minor(m, n))
          << "trial " << trial;
      if (cert) {
        EXPECT_TRUE(validate_certificate(m, n, *cert));
        ++found;
      }
    }
  }
  EXPECT_GT(found, 20);
}

TEST(MinorSearchTest, KnownMinorsAndExclusions) {
  EXPECT_TRUE(has_minor(pg32(), fano()).has_value());
  EXPECT_TRUE(has_minor(clique(5), clique(4)).has_value());
  EXPECT_TRUE(has_minor(whirl(4), whirl(3)).has_value());
  EXPECT_FALSE(has_minor(pg32(), uniform(2, 4)).has_value());
  EXPECT_FALSE(has_minor(clique(5), fano()).has_value());
  EXPECT_FALSE(has_minor(uniform(3, 6), uniform(2, 6)).has_value());
  // loops of the target come from the contracted flat
  const Matroid loopy = direct_sum(uniform(1, 2), uniform(0, 1));
  const auto cert = has_minor(clique(4), loopy);
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(validate_certificate(clique(4), loopy, *cert));
  EXPECT_TRUE(oracles::unpruned_has_minor(clique(4), loopy));
  const Matroid k4_loop = direct_sum(clique(4), uniform(0, 1));
  EXPECT_FALSE(has_minor(clique(5), k4_loop).has_value());
  EXPECT_FALSE(oracles::unpruned_has_minor(clique(5), k4_loop));
}

TEST(MinorSearchTest, CertificatesAreDeterministic) {
  MinorSearchOptions serial;
  MinorSearchOptions parallel;
  parallel.workers = 4;
  const auto a = has_minor(pg32(), clique(4), serial);
  const auto b = has_minor(pg32(), clique(4), parallel);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a, b);
}

TEST(MinorSearchTest, SizeCapRaisesResourceError) {
  MinorSearchOptions opt;
  opt.size_cap = 9;
  EXPECT_THROW(has_minor(clique(5), clique(4), opt), ResourceError);
  EXPECT_NO_THROW(has_minor(clique(5), clique(4)));
}

TEST(MinorSearchTest, CliqueAndBicliqueMinors) {
  const auto k5 = find_clique_minor(clique(6), 4);
  ASSERT_TRUE(k5.has_value());
  EXPECT_TRUE(validate_certificate(clique(6), clique(5), *k5));
  EXPECT_FALSE(find_clique_minor(biclique(3, 3), 4).has_value());

  const auto kk = find_biclique_restriction(clique(6), 3);
  ASSERT_TRUE(kk.has_value());
  EXPECT_TRUE(validate_certificate(clique(6), biclique(3, 3), *kk));
  EXPECT_EQ(kk->contract, Subset{0});
  EXPECT_FALSE(find_biclique_restriction(clique(5), 3).has_value());
}

TEST(MinorSearchTest, BicliqueSubgraph) {
  GraphRep g;
  g.vertices = 6;
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) g.edges.push_back({a, b});
  }
  const auto w = find_biclique_subgraph(g, 3);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->left, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(w->right, (std::vector<int>{3, 4, 5}));
  g.edges.pop_back();
  EXPECT_FALSE(find_biclique_subgraph(g, 3).has_value());
  EXPECT_TRUE(find_biclique_subgraph(g, 2).has_value());
  EXPECT_THROW(find_biclique_subgraph(g, 0), DomainError);
}

TEST(GraphicTest, RecoversRandomGraphs) {
  std::mt19937 rng(20260302);
  for (int trial = 0; trial < 60; ++trial) {
    const int v = std::uniform_int_distribution<int>(2, 7)(rng);
    const int e = std::uniform_int_distribution<int>(1, 12)(rng);
    const GraphRep g = oracles::random_graph(rng, v, e);
    const Matroid m = from_graph(g);
    const auto h = is_graphic(m);
    ASSERT_TRUE(h.has_value()) << "trial " << trial;
    EXPECT_TRUE(graph_matches(m, *h)) << "trial " << trial;
  }
}

TEST(GraphicTest, RejectsNongraphicMatroids) {
  EXPECT_FALSE(is_graphic(fano()).has_value());
  EXPECT_FALSE(is_graphic(uniform(2, 4)).has_value());
  EXPECT_FALSE(is_graphic(dual(clique(5))).has_value());
  EXPECT_FALSE(is_graphic(dual(biclique(3, 3))).has_value());
  EXPECT_FALSE(is_graphic(spike(3)).has_value());
  EXPECT_FALSE(is_graphic(whirl(3)).has_value());
  EXPECT_FALSE(is_graphic(direct_sum(clique(4), fano())).has_value());
  // M*(K_4) = M(K_4) and a cographic planar graph stays graphic
  const auto h = is_graphic(dual(clique(4)));
  ASSERT_TRUE(h.has_value());
  EXPECT_TRUE(graph_matches(dual(clique(4)), *h));
}

TEST(GraphicTest, SizeCap) {
  GraphicOptions opt;
  opt.size_cap = 8;
  EXPECT_THROW(is_graphic(clique(5), opt), ResourceError);
}

TEST(ExtensionTest, ClassificationMatchesGraphicity) {
  for (int n = 2; n <= 3; ++n) {
    const Matroid base = clique(n + 1);
    int graphic = 0;
    for (const auto& cut : all_modular_cuts(base)) {
      const Matroid ext = modular_cut_extension(base, cut, "e");
      const ExtensionClass cls = classify_clique_extension(ext, base.size());
      const auto g = is_graphic(ext);
      EXPECT_EQ(cls.graphic, g.has_value());
      graphic += g.has_value();
      EXPECT_EQ(cls.n, n);
      if (cls.reason == ExtensionReason::kParallel) {
        ASSERT_TRUE(cls.partner.has_value());
        EXPECT_EQ(ext.rank(bit(base.size()) | bit(*cls.partner)), 1);
      }
    }
    // loop, coloop, and one parallel copy per edge
    EXPECT_EQ(graphic, 2 + base.size());
  }
}

TEST(ExtensionTest, ClassificationReasons) {
  const Matroid k = clique(5);
  const ExtensionClass loop =
      classify_clique_extension(direct_sum(k, uniform(0, 1)), 10);
  EXPECT_TRUE(loop.graphic);
  EXPECT_EQ(loop.reason, ExtensionReason::kLoop);
  const ExtensionClass coloop =
      classify_clique_extension(direct_sum(k, uniform(1, 1)), 10);
  EXPECT_EQ(coloop.reason, ExtensionReason::kColoop);
  const ExtensionClass sq = classify_clique_extension(square_ext(5), 10);
  EXPECT_FALSE(sq.graphic);
  EXPECT_EQ(sq.reason, ExtensionReason::kNoneOfThese);
  EXPECT_THROW(classify_clique_extension(uniform(3, 7), 0), DomainError);
  EXPECT_THROW(classify_clique_extension(k, 10), DomainError);
}

TEST(ExtensionTest, ReductionReachesTheExpectedFamily) {
  struct Case {
    Matroid m;
    ExtensionFamily family;
  };
  const std::vector<Case> cases = {
      {triangle_ext(6), ExtensionFamily::kTriangle},
      {square_ext(6), ExtensionFamily::kSquare},
      {free_ext_clique(8), ExtensionFamily::kCircle},
      {triangle_ext(5), ExtensionFamily::kTriangle},
  };
  for (const Case& c : cases) {
    const ReductionResult r = reduce_clique_extension(c.m, c.m.size() - 1, 4);
    ASSERT_TRUE(r.closed);
    EXPECT_EQ(r.family, c.family);
    EXPECT_GE(r.index, 4);
    EXPECT_TRUE(validate_certificate(c.m, family_member(r.family, r.index),
                                     r.certificate));
    EXPECT_FALSE(r.transcript.empty());
  }
}

TEST(ExtensionTest, ReductionRejectsBadInput) {
  const Matroid par = modular_cut_extension(clique(5), {bit(0)}, "e");
  EXPECT_THROW(reduce_clique_extension(square_ext(6), 15, 3), DomainError);
  EXPECT_THROW(reduce_clique_extension(par, par.size() - 1, 4), DomainError);
}

TEST(ExtensionTest, FamilyNames) {
  EXPECT_EQ(family_name(ExtensionFamily::kSquare, 5), "M_5^square");
  EXPECT_EQ(family_name(ExtensionFamily::kCircle, 4), "M_4^circle");
  EXPECT_EQ(family_member(ExtensionFamily::kTriangle, 4).size(), 7);
}

TEST(KungTest, VerifiedPrecondition) {
  const KungResult binary = check_kung(clique(5), 2);
  EXPECT_TRUE(binary.precondition);
  EXPECT_TRUE(binary.check.holds);
  EXPECT_EQ(binary.check.epsilon, 10);
  const KungResult u = check_kung(uniform(2, 5), 2);
  EXPECT_FALSE(u.precondition);
  ASSERT_TRUE(u.excluded_minor.has_value());
  EXPECT_TRUE(validate_certificate(uniform(2, 5), uniform(2, 4),
                                   *u.excluded_minor));
  // PG(2,2) meets the bound with equality
  const KungResult f = check_kung(fano(), 2);
  EXPECT_TRUE(f.precondition);
  EXPECT_EQ(f.check.bound, std::uint64_t{7});
  EXPECT_EQ(f.check.epsilon, 7);
}

TEST(SpikeCoverTest, FindsCoveringSpikes) {
  const Matroid s = spike(3);
  const auto cover = spike_restriction_cover(s, s.mask());
  ASSERT_TRUE(cover.has_value());
  EXPECT_EQ(cover->first | cover->second, s.mask());
  EXPECT_TRUE(is_spike(restriction(s, cover->first)).has_value());
  EXPECT_TRUE(oracles::brute_is_spike(restriction(s, cover->second)));
  EXPECT_FALSE(spike_restriction_cover(clique(4), clique(4).mask()));
  // cover existence against subsets tested directly
  const Matroid s4 = spike(4);
  for (int drop = 0; drop < s4.size(); ++drop) {
    const Subset z = s4.mask() & ~bit(drop);
    std::vector<Subset> spikes;
    for (Subset a = z;; a = (a - 1) & z) {
      if (oracles::pc(a) >= 7 && oracles::brute_is_spike(restriction(s4, a))) {
        spikes.push_back(a);
      }
      if (a == 0) break;
    }
    bool brute = false;
    for (Subset a : spikes) {
      for (Subset b : spikes) brute = brute || (a | b) == z;
    }
    EXPECT_EQ(spike_restriction_cover(s4, z).has_value(), brute) << drop;
  }
}

TEST(MembershipTest, SuitesCertifyEveryWitness) {
  for (const std::string name :
       {"square-family", "triangle-family", "circle-family"}) {
    const auto records = membership_suite(name);
    ASSERT_EQ(records.size(), 2u);
    for (const MembershipRecord& rec : records) {
      EXPECT_FALSE(rec.host.empty()) << name << " " << rec.witness;
      EXPECT_TRUE(rec.certificate.has_value());
    }
  }
  EXPECT_THROW(membership_suite("hexagon-family"), DomainError);
}

}  // namespace
}  // namespace matroids
