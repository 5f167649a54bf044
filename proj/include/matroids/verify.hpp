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

#ifndef MATROIDS_VERIFY_HPP_
#define MATROIDS_VERIFY_HPP_

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "matroids/connectivity.hpp"
#include "matroids/constructions.hpp"
#include "matroids/core.hpp"
#include "matroids/errors.hpp"
#include "matroids/isomorphism.hpp"
#include "matroids/matroid.hpp"
#include "matroids/minor_search.hpp"
#include "matroids/representations.hpp"
#include "matroids/tangle.hpp"

namespace matroids {

enum class CheckStatus { kPass, kFail, kSkipped };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkipped:
      return "skipped (resource)";
  }
  return "";
}

struct CheckRecord {
  std::string claim;   // "NN.MM"; NN numbers the group of related checks
  std::string anchor;  // the statement being reproduced, or "plumbing"
  std::string params;
  std::string expected;
  std::string computed;
  CheckStatus status = CheckStatus::kFail;
  double seconds = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckRecord> records;
  std::string toolchain;

  CheckStatus status() const {
    bool skipped = false;
    for (const CheckRecord& r : records) {
      if (r.status == CheckStatus::kFail) return CheckStatus::kFail;
      if (r.status == CheckStatus::kSkipped) skipped = true;
    }
    return skipped ? CheckStatus::kSkipped : CheckStatus::kPass;
  }
};

struct VerifyOptions {
  MinorSearchOptions minor;
  GraphicOptions graphic;
  int workers = 1;
};

inline std::string toolchain_fingerprint() {
  std::ostringstream s;
  s << "matroids 1.0; ";
#if defined(__clang__)
  s << "clang " << __clang_major__ << "." << __clang_minor__ << "."
    << __clang_patchlevel__;
#elif defined(__GNUC__)
  s << "gcc " << __GNUC__ << "." << __GNUC_MINOR__ << "." << __GNUC_PATCHLEVEL__;
#elif defined(_MSC_VER)
  s << "msvc " << _MSC_VER;
#else
  s << "unknown compiler";
#endif
  s << "; c++ " << __cplusplus;
  return s.str();
}

namespace detail {

struct Outcome {
  bool pass = false;
  std::string expected;
  std::string computed;
};

class Recorder {
 public:
  explicit Recorder(int criterion) : criterion_(criterion) {}

  void check(const std::string& anchor, const std::string& params,
             const std::function<Outcome()>& body) {
    CheckRecord rec;
    char id[16];
    std::snprintf(id, sizeof id, "%02d.%02d", criterion_, ++count_);
    rec.claim = id;
    rec.anchor = anchor;
    rec.params = params;
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = body();
      rec.expected = std::move(o.expected);
      rec.computed = std::move(o.computed);
      rec.status = o.pass ? CheckStatus::kPass : CheckStatus::kFail;
    } catch (const ResourceError& e) {
      rec.computed = e.what();
      rec.status = CheckStatus::kSkipped;
    } catch (const std::exception& e) {
      rec.computed = std::string("error: ") + e.what();
      rec.status = CheckStatus::kFail;
    }
    rec.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    records_.push_back(std::move(rec));
  }

  std::vector<CheckRecord> take() { return std::move(records_); }

 private:
  int criterion_;
  int count_ = 0;
  std::vector<CheckRecord> records_;
};

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

// Checks that `map` (a element -> b element) carries every rank of a onto b.
inline bool bijection_preserves_ranks(const Matroid& a, const Matroid& b,
                                      const std::vector<int>& map) {
  if (a.size() != b.size() || static_cast<int>(map.size()) != a.size()) {
    return false;
  }
  Subset seen = 0;
  for (int x : map) {
    if (x < 0 || x >= b.size() || contains(seen, x)) return false;
    seen |= bit(x);
  }
  for (Subset s = 0;; ++s) {
    Subset t = 0;
    for (int i : bits(s)) t |= bit(map[i]);
    if (a.rank_unchecked(s) != b.rank_unchecked(t)) return false;
    if (s == a.mask()) break;
  }
  return true;
}

inline std::string mapping_text(const Matroid& a, const Matroid& b,
                                const std::vector<int>& map) {
  std::string s;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (i) s += " ";
    s += a.label(static_cast<int>(i)) + "->" + b.label(map[i]);
  }
  return s;
}

inline std::string set_labels(const Matroid& m, Subset x) {
  std::string s = "{";
  bool first = true;
  for (int e : bits(x)) {
    if (!first) s += ",";
    s += m.label(e);
    first = false;
  }
  return s + "}";
}

// Minimum of lambda(X u Z) over all Z disjoint from X u Y.
inline int exhaustive_kappa(const Matroid& m, Subset x, Subset y) {
  const Subset rest = m.mask() & ~x & ~y;
  int best = m.rank();
  for_each_subset(rest, [&](Subset z) {
    const Subset a = x | z;
    const int v = m.rank_unchecked(a) + m.rank_unchecked(m.mask() & ~a) -
                  m.rank();
    best = std::min(best, v);
  });
  return best;
}

struct SplittingInstance {
  std::string name;
  Matroid host;
  Subset spike;  // E(S)
  int e = 0;
};

// Hosts with a spike restriction S and a nonloop e that is parallel neither
// to a tip nor to another element of S.
inline std::vector<SplittingInstance> spike_splitting_corpus() {
  std::vector<SplittingInstance> out;
  for (int r = 4; r <= 5; ++r) {
    const Matroid s = spike(r);
    for (int e = 0; e < 2 * r; ++e) {
      out.push_back({"spike(" + std::to_string(r) + "), e=" + s.label(e), s,
                     s.mask(), e});
    }
  }
  for (int r = 4; r <= 5; ++r) {
    const Matroid s = spike(r);
    const Matroid f = free_extension(s);
    out.push_back({"free extension of spike(" + std::to_string(r) + ")", f,
                   s.mask(), s.size()});
    const Subset leg =
        closure(s, bit(0) | bit(r) | bit(1) | bit(r + 1));
    const Matroid p = principal_extension(s, leg);
    out.push_back({"spike(" + std::to_string(r) + ") extended on the plane " +
                       set_labels(s, leg),
                   p, s.mask(), s.size()});
  }
  {
    const Matroid s = spike(4);
    const Matroid f = direct_sum(s, uniform(1, 1));
    out.push_back({"spike(4) plus a coloop", f, s.mask(), s.size()});
  }
  return out;
}

struct KungInstance {
  std::string name;
  Matroid matroid;
  int ell = 2;
};

inline std::vector<KungInstance> kung_corpus() {
  const Matroid pg = pg32();
  return {
      {"M(K_4)", clique(4), 2},
      {"M(K_5)", clique(5), 2},
      {"M(K_6)", clique(6), 2},
      {"M(K_3,3)", biclique(3, 3), 2},
      {"F_7 \\ e", deletion(fano(), bit(0)), 2},
      {"PG(3,2) \\ e", deletion(pg, bit(0)), 2},
      {"AG(3,2)", deletion(pg, closure(pg, bit(0) | bit(1) | bit(3))), 2},
      {"square_ext(5)", square_ext(5), 2},
      {"square_ext(6)", square_ext(6), 2},
      {"N_4^square", n_square(4), 2},
      {"N_12", deletion(pg, subset_of(pg, {"1", "2", "4"})), 2},
      {"M(K_5)", clique(5), 3},
      {"U_{3,5}", uniform(3, 5), 3},
      {"whirl(3)", whirl(3), 3},
      {"whirl(4)", whirl(4), 3},
      {"triangle_ext(4)", triangle_ext(4), 3},
      {"triangle_ext(5)", triangle_ext(5), 3},
      {"N_3^triangle", n_triangle(3), 3},
      {"N_4^triangle", n_triangle(4), 3},
      {"F_7", fano(), 3},
  };
}

}  // namespace detail

// Criterion 1: growth-rate values of the extremal members.
inline std::vector<CheckRecord> check_growth_rates() {
  using detail::binomial;
  detail::Recorder rec(1);
  for (int n = 2; n <= 6; ++n) {
    rec.check("square-class growth rate", "n=" + std::to_string(n), [n] {
      const int got = epsilon(n_square(n));
      const int want = binomial(n + 2, 2) - 3;
      return detail::Outcome{got == want, "eps(si(N_n^square)) = " +
                                              std::to_string(want),
                             std::to_string(got)};
    });
  }
  for (int n = 2; n <= 6; ++n) {
    rec.check("triangle-class growth rate", "n=" + std::to_string(n), [n] {
      const int got = epsilon(n_triangle(n));
      const int want = binomial(n + 2, 2) - 2;
      return detail::Outcome{got == want, "eps(si(N_n^triangle)) = " +
                                              std::to_string(want),
                             std::to_string(got)};
    });
  }
  for (int n = 2; n <= 5; ++n) {
    rec.check("circle-class growth rate", "n=" + std::to_string(n), [n] {
      const Matroid t = truncation(clique(n + 2));
      const int want = binomial(n + 2, 2);
      const bool ok = is_simple(t) && t.size() == want && t.rank() == n;
      std::ostringstream got;
      got << "rank " << t.rank() << ", " << t.size() << " elements, simple "
          << detail::yes_no(is_simple(t));
      return detail::Outcome{ok,
                             "rank " + std::to_string(n) + ", " +
                                 std::to_string(want) +
                                 " elements, simple yes",
                             got.str()};
    });
  }
  return rec.take();
}

// Criterion 2: the named small members with validated bijections.
inline std::vector<CheckRecord> check_named_isomorphisms() {
  detail::Recorder rec(2);
  auto iso = [&](const std::string& params, const Matroid& a,
                 const Matroid& b, const std::string& want) {
    rec.check("named isomorphisms", params, [&] {
      const auto map = is_isomorphic(a, b);
      if (!map) return detail::Outcome{false, want, "not isomorphic"};
      const bool ok = detail::bijection_preserves_ranks(a, b, *map);
      return detail::Outcome{ok, want + " (bijection valid on all subsets)",
                             detail::mapping_text(a, b, *map) +
                                 (ok ? "" : " (bijection invalid)")};
    });
  };
  iso("M_3^triangle vs U_{2,4}", triangle_ext(3), uniform(2, 4),
      "isomorphic");
  iso("M_4^square vs F_7", square_ext(4), fano(), "isomorphic");
  return rec.take();
}

// Criterion 3: si(N_4^square) is PG(3,2) minus a 3-element independent set.
inline std::vector<CheckRecord> check_n12() {
  detail::Recorder rec(3);
  rec.check("N_12 description", "si(N_4^square) vs PG(3,2) \\ {1,2,4}", [] {
    const Matroid n12 = simplify(n_square(4)).matroid;
    const Matroid pg = pg32();
    const Subset removed = subset_of(pg, {"1", "2", "4"});
    const bool independent = is_independent(pg, removed);
    const Matroid target = deletion(pg, removed);
    const auto map = is_isomorphic(n12, target);
    const bool ok = independent && n12.size() == 12 && n12.rank() == 4 &&
                    map && detail::bijection_preserves_ranks(n12, target, *map);
    std::ostringstream got;
    got << n12.size() << " elements, rank " << n12.rank()
        << ", removed set independent " << detail::yes_no(independent)
        << ", isomorphic " << detail::yes_no(map.has_value());
    return detail::Outcome{
        ok, "12 elements, rank 4, removed set independent yes, isomorphic yes",
        got.str()};
  });
  return rec.take();
}

// Criterion 4: Kung's bound.
inline std::vector<CheckRecord> check_kung_bound(
    const VerifyOptions& opt = {}) {
  detail::Recorder rec(4);
  rec.check("Kung's bound", "PG(2,2), l=2", [&] {
    const KungResult k = check_kung(fano(), 2, opt.minor);
    const bool ok =
        k.precondition &&
        static_cast<std::uint64_t>(k.check.epsilon) == k.check.bound;
    return detail::Outcome{ok, "no U_{2,4}-minor, eps = bound = 7",
                           std::string(k.precondition ? "no" : "has a") +
                               " U_{2,4}-minor, eps " +
                               std::to_string(k.check.epsilon) + ", bound " +
                               std::to_string(k.check.bound)};
  });
  for (const detail::KungInstance& inst : detail::kung_corpus()) {
    rec.check("Kung's bound",
              inst.name + ", l=" + std::to_string(inst.ell), [&] {
                const KungResult k = check_kung(inst.matroid, inst.ell,
                                                opt.minor);
                const bool ok =
                    k.precondition &&
                    static_cast<std::uint64_t>(k.check.epsilon) < k.check.bound;
                return detail::Outcome{
                    ok,
                    "no U_{2," + std::to_string(inst.ell + 2) +
                        "}-minor, eps < bound",
                    std::string(k.precondition ? "no" : "has a") +
                        " excluded minor, eps " +
                        std::to_string(k.check.epsilon) + ", bound " +
                        std::to_string(k.check.bound)};
              });
  }
  return rec.take();
}

// Criterion 5: spikes.
inline std::vector<CheckRecord> check_spikes(const VerifyOptions& opt = {}) {
  detail::Recorder rec(5);
  struct Named {
    std::string name;
    Matroid m;
  };
  const std::vector<Named> rank3 = {{"spike(3)", spike(3)}, {"F_7", fano()}};
  for (const Named& s : rank3) {
    rec.check("rank-3 spikes", s.name, [&] {
      const bool spike_ok = is_spike(s.m).has_value() && s.m.rank() == 3;
      const int eps = epsilon(s.m);
      const bool graphic = is_graphic(s.m, opt.graphic).has_value();
      return detail::Outcome{
          spike_ok && eps == 7 && !graphic, "rank-3 spike, eps 7, nongraphic",
          std::string(spike_ok ? "rank-3 spike" : "not a rank-3 spike") +
              ", eps " + std::to_string(eps) + ", " +
              (graphic ? "graphic" : "nongraphic")};
    });
  }
  for (int r = 4; r <= 6; ++r) {
    rec.check("contracting a non-tip", "spike(" + std::to_string(r) + ")",
              [r] {
                const Matroid s = spike(r);
                const auto dec = is_spike(s);
                if (!dec) return detail::Outcome{false, "spike", "not a spike"};
                int good = 0;
                int total = 0;
                for (int e : bits(s.mask() & ~dec->tips)) {
                  ++total;
                  const Matroid c = contraction(s, bit(e));
                  const auto d = is_spike(c);
                  if (d && c.rank() == r - 1) ++good;
                }
                return detail::Outcome{
                    good == total,
                    "all " + std::to_string(total) + " contractions are rank-" +
                        std::to_string(r - 1) + " spikes",
                    std::to_string(good) + "/" + std::to_string(total)};
              });
  }
  for (const detail::SplittingInstance& inst : detail::spike_splitting_corpus()) {
    rec.check("spike splitting under contraction", inst.name, [&] {
      if (!is_spike(restriction(inst.host, inst.spike))) {
        return detail::Outcome{false, "S is a spike", "S is not a spike"};
      }
      const Matroid c = contraction(inst.host, bit(inst.e));
      const Subset z = extract(inst.spike & ~bit(inst.e),
                               inst.host.mask() & ~bit(inst.e));
      const auto cover = spike_restriction_cover(c, z);
      if (!cover) {
        return detail::Outcome{false, "two spikes covering E(S) - e",
                               "no cover"};
      }
      return detail::Outcome{true, "two spikes covering E(S) - e",
                             detail::set_labels(c, cover->first) + " u " +
                                 detail::set_labels(c, cover->second)};
    });
  }
  return rec.take();
}

// Criterion 6: tangles.
inline std::vector<CheckRecord> check_tangles(const VerifyOptions& opt = {}) {
  detail::Recorder rec(6);
  for (int n = 3; n <= 6; ++n) {
    const int k = clique_tangle_order(n);
    rec.check("clique tangle",
              "T_" + std::to_string(k) + "(M(K_" + std::to_string(n + 1) + "))",
              [n, k] {
                const TangleResult t = tangle_tk(clique(n + 1), k);
                std::string got = t.check.ok ? "valid tangle"
                                             : "violates axiom " +
                                                   std::to_string(
                                                       t.check.violated_axiom);
                return detail::Outcome{t.check.ok && t.tangle.has_value(),
                                       "valid tangle", got};
              });
  }
  struct TangleCase {
    std::string name;
    Matroid m;
    int order;
  };
  const std::vector<TangleCase> small = {
      {"T_2(M(K_4))", clique(4), 2},
      {"T_3(M(K_5))", clique(5), 3},
      {"T_2(F_7)", fano(), 2},
      {"T_3(N_12)", deletion(pg32(), subset_of(pg32(), {"1", "2", "4"})), 3},
      {"T_3(M(K_3,3))", biclique(3, 3), 3},
      {"T_2(U_{3,6})", uniform(3, 6), 2},
  };
  for (const TangleCase& c : small) {
    rec.check("tangle matroid", c.name, [&] {
      const TangleResult t = tangle_tk(c.m, c.order);
      if (!t.tangle) return detail::Outcome{false, "valid tangle", "no tangle"};
      const Matroid tm = tangle_matroid(*t.tangle);
      const auto bad = check_rank_axioms(tm);
      return detail::Outcome{!bad, "rank axioms hold on all subsets",
                             bad ? *bad : "rank axioms hold, rank " +
                                              std::to_string(tm.rank())};
    });
  }
  struct InducedCase {
    std::string name;
    Matroid host;
    int n;
  };
  const std::vector<InducedCase> induced = {
      {"M(K_5)", clique(5), 3},
      {"M(K_6)", clique(6), 3},
      {"M(K_6)", clique(6), 4},
      {"F_7", fano(), 3},
      {"square_ext(4)", square_ext(4), 3},
      {"square_ext(5)", square_ext(5), 4},
      {"triangle_ext(5)", triangle_ext(5), 4},
      {"free_ext_clique(5)", free_ext_clique(5), 4},
      {"M(K_3,4)", biclique(3, 4), 3},
      {"PG(3,2)", pg32(), 3},
      {"M(K_3,3)", biclique(3, 3), 3},
      {"square_ext(6)", square_ext(6), 5},
  };
  for (const InducedCase& c : induced) {
    rec.check("induced tangle",
              c.name + " with an M(K_" + std::to_string(c.n + 1) + ")-minor",
              [&] {
                const auto cert = find_clique_minor(c.host, c.n, opt.minor);
                if (!cert) {
                  return detail::Outcome{false, "valid tangle",
                                         "no clique minor"};
                }
                const TangleResult t =
                    clique_tangle(c.host, clique(c.n + 1), *cert);
                const bool ok = t.tangle && is_tangle(*t.tangle).ok;
                return detail::Outcome{
                    ok, "valid tangle",
                    ok ? "valid tangle of order " +
                             std::to_string(t.tangle->order())
                       : "invalid: " + t.check.detail};
              });
  }
  return rec.take();
}

// A random matroid represented over GF(p), p in {2, 3, 5}.
inline Matroid random_linear_matroid(std::mt19937& rng, int size, int rows) {
  static const int primes[] = {2, 3, 5};
  const int p = primes[std::uniform_int_distribution<int>(0, 2)(rng)];
  std::uniform_int_distribution<int> entry(0, p - 1);
  std::vector<std::vector<int>> cols(size, std::vector<int>(rows));
  for (auto& c : cols) {
    for (int& x : c) x = entry(rng);
  }
  return from_matrix(p, cols, rows);
}

// Criterion 7: linking.
inline std::vector<CheckRecord> check_linking(int instances = 60,
                                              std::uint32_t seed = 20260115) {
  detail::Recorder rec(7);
  std::mt19937 rng(seed);
  for (int i = 0; i < instances; ++i) {
    const int size = std::uniform_int_distribution<int>(6, 12)(rng);
    const int rows = std::uniform_int_distribution<int>(2, 5)(rng);
    const Matroid m = random_linear_matroid(rng, size, rows);
    std::vector<int> perm(size);
    for (int j = 0; j < size; ++j) perm[j] = j;
    std::shuffle(perm.begin(), perm.end(), rng);
    const int nx = std::uniform_int_distribution<int>(1, 3)(rng);
    const int ny = std::uniform_int_distribution<int>(1, 3)(rng);
    Subset x = 0;
    Subset y = 0;
    for (int j = 0; j < nx; ++j) x |= bit(perm[j]);
    for (int j = nx; j < nx + ny; ++j) y |= bit(perm[j]);
    std::ostringstream params;
    params << "seed " << seed << " #" << i << ": |E|=" << size
           << ", X=" << detail::set_labels(m, x)
           << ", Y=" << detail::set_labels(m, y);
    rec.check("linking", params.str(), [m, x, y] {
      const int brute = detail::exhaustive_kappa(m, x, y);
      const LinkingResult l = linking_minor(m, x, y);
      const Subset kept = x | y;
      bool restrictions = true;
      for_each_subset(x, [&](Subset s) {
        restrictions &= l.minor.rank(extract(s, kept)) == m.rank(s);
      });
      for_each_subset(y, [&](Subset s) {
        restrictions &= l.minor.rank(extract(s, kept)) == m.rank(s);
      });
      const int lam = lambda(l.minor, extract(x, kept));
      const bool ok = restrictions && l.kappa == brute && lam == brute &&
                      validate_certificate(m, l.minor, l.certificate);
      return detail::Outcome{
          ok, "kappa " + std::to_string(brute) + ", restrictions kept",
          "kappa " + std::to_string(l.kappa) + ", lambda_N " +
              std::to_string(lam) + ", restrictions " +
              (restrictions ? "kept" : "changed")};
    });
  }
  return rec.take();
}

// Criterion 8: family memberships.
inline std::vector<CheckRecord> check_memberships(
    const VerifyOptions& opt = {}) {
  detail::Recorder rec(8);
  struct Want {
    std::string suite;
    std::string witness;
  };
  const std::vector<Want> wants = {{"square-family", "F_7"},
                                   {"circle-family", "U_{3,5}"},
                                   {"triangle-family", "whirl(3)"}};
  for (const Want& w : wants) {
    rec.check("family membership", w.witness + " in " + w.suite, [&] {
      for (const MembershipRecord& r : membership_suite(w.suite, opt.minor)) {
        if (r.witness != w.witness) continue;
        if (!r.certificate) {
          return detail::Outcome{false, "certificate", "no host up to k = 6"};
        }
        return detail::Outcome{
            true, "certificate",
            "minor of " + r.host + ": contract " +
                std::to_string(popcount(r.certificate->contract)) +
                ", delete " + std::to_string(popcount(r.certificate->deleted))};
      }
      return detail::Outcome{false, "certificate", "witness not in suite"};
    });
  }
  rec.check("family membership", "F_7 vs M_4^square", [&] {
    const Matroid host = square_ext(4);
    const auto cert = has_minor(host, fano(), opt.minor);
    const bool ok = cert && validate_certificate(host, fano(), *cert);
    return detail::Outcome{ok, "validated certificate",
                           ok ? "validated certificate" : "none"};
  });
  for (int r = 3; r <= 5; ++r) {
    rec.check("free spike", "Lambda_" + std::to_string(r), [r] {
      const Matroid lam = truncation(biclique(2, r));
      const Matroid s = spike(r);
      const auto dec = is_spike(s);
      if (!dec) return detail::Outcome{false, "spike", "spike(r) not a spike"};
      const Matroid tipless = deletion(s, dec->tips);
      const auto map = is_isomorphic(lam, tipless);
      const bool ok = map && detail::bijection_preserves_ranks(lam, tipless,
                                                               *map);
      return detail::Outcome{
          ok, "Lambda_r = S \\ T for the spike S = spike(r)",
          ok ? "isomorphic to spike(" + std::to_string(r) +
                   ") minus its tip; spike(r) passes is_spike"
             : "not isomorphic"};
    });
  }
  return rec.take();
}

// Criterion 9: the extension dichotomy on all extensions of small cliques.
inline std::vector<CheckRecord> check_extension_classification(
    const VerifyOptions& opt = {}) {
  detail::Recorder rec(9);
  for (int n = 2; n <= 4; ++n) {
    rec.check("extension dichotomy",
              "all extensions of M(K_" + std::to_string(n + 1) + ")", [&, n] {
                const Matroid base = clique(n + 1);
                const auto cuts = all_modular_cuts(base);
                int agree = 0;
                int graphic = 0;
                std::string first_bad;
                for (const auto& cut : cuts) {
                  const Matroid ext = modular_cut_extension(base, cut, "e");
                  const ExtensionClass cls =
                      classify_clique_extension(ext, base.size());
                  const bool g = is_graphic(ext, opt.graphic).has_value();
                  graphic += g;
                  if (cls.graphic == g) {
                    ++agree;
                  } else if (first_bad.empty()) {
                    first_bad = ", first disagreement at a cut with " +
                                std::to_string(cut.size()) + " generators";
                  }
                }
                const int total = static_cast<int>(cuts.size());
                return detail::Outcome{
                    agree == total,
                    "agreement on all " + std::to_string(total) + " extensions",
                    std::to_string(agree) + "/" + std::to_string(total) +
                        " agree, " + std::to_string(graphic) + " graphic" +
                        first_bad};
              });
  }
  return rec.take();
}

// Constructive reduction of nongraphic clique extensions to the three
// families, replayed and validated.
inline std::vector<CheckRecord> check_extension_reduction() {
  detail::Recorder rec(11);
  struct Case {
    std::string name;
    Matroid m;
    ExtensionFamily family;
  };
  const std::vector<Case> cases = {
      {"triangle_ext(6)", triangle_ext(6), ExtensionFamily::kTriangle},
      {"free_ext_clique(8)", free_ext_clique(8), ExtensionFamily::kCircle},
      {"square_ext(6)", square_ext(6), ExtensionFamily::kSquare},
  };
  for (const Case& c : cases) {
    rec.check("clique extension reduction", c.name + ", m=4", [&] {
      const ReductionResult r = reduce_clique_extension(c.m, c.m.size() - 1, 4);
      const std::string want = family_name(c.family, 4);
      if (!r.closed) return detail::Outcome{false, want, "did not close"};
      const Matroid target = family_member(r.family, r.index);
      const bool valid = validate_certificate(c.m, target, r.certificate);
      const std::string got = family_name(r.family, r.index);
      return detail::Outcome{valid && r.family == c.family && r.index >= 4,
                             "certified minor " + want,
                             (valid ? "certified minor " : "invalid ") + got};
    });
  }
  return rec.take();
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "growth-rates", "isomorphisms", "kung",        "spikes",
      "tangles",      "linking",      "memberships", "extension-reduction"};
  return names;
}

inline SuiteReport run_suite(const std::string& name,
                             const VerifyOptions& opt = {}) {
  SuiteReport report;
  report.suite = name;
  report.toolchain = toolchain_fingerprint();
  auto add = [&](std::vector<CheckRecord> rs) {
    for (CheckRecord& r : rs) report.records.push_back(std::move(r));
  };
  if (name == "growth-rates") {
    add(check_growth_rates());
  } else if (name == "isomorphisms") {
    add(check_named_isomorphisms());
    add(check_n12());
  } else if (name == "kung") {
    add(check_kung_bound(opt));
  } else if (name == "spikes") {
    add(check_spikes(opt));
  } else if (name == "tangles") {
    add(check_tangles(opt));
  } else if (name == "linking") {
    add(check_linking());
  } else if (name == "memberships") {
    add(check_memberships(opt));
  } else if (name == "extension-reduction") {
    add(check_extension_classification(opt));
    add(check_extension_reduction());
  } else {
    throw DomainError("unknown suite '" + name + "'");
  }
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     return a.claim < b.claim;
                   });
  return report;
}

inline std::string format_report(const SuiteReport& r, bool timings = false) {
  std::ostringstream out;
  out << "suite " << r.suite << "\n";
  out << "toolchain " << r.toolchain << "\n";
  for (const CheckRecord& c : r.records) {
    out << c.claim << "  " << status_name(c.status) << "  [" << c.anchor
        << "] " << c.params << "\n";
    out << "       expected: " << c.expected << "\n";
    out << "       computed: " << c.computed << "\n";
    if (timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", c.seconds);
      out << "       seconds: " << buf << "\n";
    }
  }
  out << "overall " << status_name(r.status()) << "\n";
  return out.str();
}

}  // namespace matroids

#endif  // MATROIDS_VERIFY_HPP_
