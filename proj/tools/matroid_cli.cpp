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

// matroid: command-line front end for the matroids library.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "matroids/matroids.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace matroids;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const long x = std::strtol(v, &end, 10);
  if (*end != '\0' || x < 1 || x > 1024) {
    throw UsageError(std::string("invalid value for ") + name);
  }
  return static_cast<int>(x);
}

struct Caps {
  int workers = 0;
  int minor_cap = 0;
  int graphic_cap = 0;

  VerifyOptions options() const {
    VerifyOptions o;
    o.workers = workers > 0 ? workers : env_int("MATROID_WORKERS", 1);
    o.minor.workers = o.workers;
    o.minor.size_cap =
        minor_cap > 0 ? minor_cap : env_int("MATROID_MINOR_CAP", 24);
    o.graphic.size_cap =
        graphic_cap > 0 ? graphic_cap : env_int("MATROID_GRAPHIC_CAP", 18);
    return o;
  }
};

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Subset parse_set(const Matroid& m, const std::string& text) {
  return subset_of(m, split_labels(text));
}

int element_of(const Matroid& m, const std::string& label) {
  const auto e = m.ground().find(label);
  if (!e) throw DomainError("unknown element '" + label + "'");
  return *e;
}

std::vector<std::string> labels(const Matroid& m, Subset x) {
  std::vector<std::string> out;
  for (int e : bits(x)) out.push_back(m.label(e));
  return out;
}

std::string set_text(const Matroid& m, Subset x) {
  std::string s = "{";
  bool first = true;
  for (int e : bits(x)) {
    if (!first) s += ",";
    s += m.label(e);
    first = false;
  }
  return s + "}";
}

json certificate_json(const Matroid& host, const Matroid& target,
                      const MinorCertificate& c) {
  json j;
  j["contract"] = labels(host, c.contract);
  j["delete"] = labels(host, c.deleted);
  json map = json::object();
  for (std::size_t i = 0; i < c.mapping.size(); ++i) {
    map[target.label(static_cast<int>(i))] = host.label(c.mapping[i]);
  }
  j["mapping"] = map;
  return j;
}

std::string certificate_text(const Matroid& host, const Matroid& target,
                             const MinorCertificate& c) {
  std::ostringstream out;
  out << "minor-certificate 1\n";
  out << "contract";
  for (const std::string& l : labels(host, c.contract)) out << " " << l;
  out << "\ndelete";
  for (const std::string& l : labels(host, c.deleted)) out << " " << l;
  out << "\n";
  for (std::size_t i = 0; i < c.mapping.size(); ++i) {
    out << "map " << target.label(static_cast<int>(i)) << " "
        << host.label(c.mapping[i]) << "\n";
  }
  return out.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << text;
}

// construct ----------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  int n = -1;
  int m = -1;
  int r = -1;
  std::string out;
  bool json = false;
};

int need(int v, const char* flag, const std::string& family) {
  if (v < 0) {
    throw UsageError("family '" + family + "' needs " + flag);
  }
  return v;
}

Matroid build_family(const ConstructArgs& a) {
  const std::string& f = a.family;
  if (f == "clique") return clique(need(a.n, "--n", f));
  if (f == "biclique") return biclique(need(a.m, "--m", f), need(a.n, "--n", f));
  if (f == "uniform") return uniform(need(a.r, "--r", f), need(a.n, "--n", f));
  if (f == "whirl") return whirl(need(a.r, "--r", f));
  if (f == "pg32") return pg32();
  if (f == "fano") return fano();
  if (f == "square") return square_ext(need(a.n, "--n", f));
  if (f == "triangle") return triangle_ext(need(a.n, "--n", f));
  if (f == "circle") return free_ext_clique(need(a.n, "--n", f));
  if (f == "n-square") return n_square(need(a.n, "--n", f));
  if (f == "n-triangle") return n_triangle(need(a.n, "--n", f));
  if (f == "n-square-even-cycle") {
    const EvenCycleRep rep = n_square_even_cycle(need(a.n, "--n", f));
    return even_cycle(rep.graph, rep.odd, {});
  }
  if (f == "n-triangle-signed") {
    const SignedGraphRep rep = n_triangle_signed(need(a.n, "--n", f));
    return signed_graphic(rep.graph, rep.odd, {});
  }
  if (f == "spike") return spike(need(a.r, "--r", f));
  if (f == "free-spike") return truncation(biclique(2, need(a.r, "--r", f)));
  throw UsageError("unknown family '" + f + "'");
}

int cmd_construct(const ConstructArgs& a) {
  Matroid m;
  try {
    m = build_family(a);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const std::string doc = serialize(m);
  if (!a.out.empty()) write_text(a.out, doc);
  if (a.json) {
    json j;
    j["family"] = a.family;
    j["rank"] = m.rank();
    j["size"] = m.size();
    j["epsilon"] = epsilon(m);
    if (!a.out.empty()) {
      j["path"] = a.out;
    } else {
      j["document"] = doc;
    }
    std::cout << j.dump(2) << "\n";
    return kExitPass;
  }
  std::ostringstream summary;
  summary << "rank " << m.rank() << "\n";
  summary << "elements " << m.size() << "\n";
  summary << "epsilon " << epsilon(m) << "\n";
  if (!a.out.empty()) {
    std::cout << summary.str();
  } else {
    std::istringstream lines(summary.str());
    std::string line;
    while (std::getline(lines, line)) std::cout << "# " << line << "\n";
    std::cout << doc;
  }
  return kExitPass;
}

// query --------------------------------------------------------------------

struct QueryArgs {
  std::string file;
  std::string query;
  std::string x;
  std::string y;
  int k = -1;
  int order = -1;
  bool json = false;
  Caps caps;
};

int cmd_query(const QueryArgs& a) {
  const Matroid m = read_matroid_file(a.file);
  const VerifyOptions opt = a.caps.options();
  json j;
  j["query"] = a.query;
  std::ostringstream text;
  auto need_x = [&] {
    if (a.x.empty()) throw UsageError("query '" + a.query + "' needs --x");
    return parse_set(m, a.x);
  };
  auto need_y = [&] {
    if (a.y.empty()) throw UsageError("query '" + a.query + "' needs --y");
    return parse_set(m, a.y);
  };

  if (a.query == "rank") {
    const Subset x = a.x.empty() ? m.mask() : parse_set(m, a.x);
    j["value"] = m.rank(x);
    text << m.rank(x) << "\n";
  } else if (a.query == "epsilon") {
    j["value"] = epsilon(m);
    text << epsilon(m) << "\n";
  } else if (a.query == "lambda") {
    const int v = lambda(m, need_x());
    j["value"] = v;
    text << v << "\n";
  } else if (a.query == "local-conn") {
    const int v = local_conn(m, need_x(), need_y());
    j["value"] = v;
    text << v << "\n";
  } else if (a.query == "kappa") {
    const KappaResult r = kappa(m, need_x(), need_y(), opt.workers);
    j["value"] = r.value;
    j["witness"] = labels(m, r.certificate.side);
    text << r.value << "\n";
    text << "witness " << set_text(m, r.certificate.side) << " (lambda "
         << r.certificate.value << ")\n";
  } else if (a.query == "vertical") {
    if (a.k < 0) throw UsageError("query 'vertical' needs --k");
    const VerticalResult r = is_vertically_k_connected(m, a.k);
    j["value"] = r.connected;
    text << (r.connected ? "true" : "false") << "\n";
    if (r.certificate) {
      j["separation"] = labels(m, r.certificate->side);
      j["lambda"] = r.certificate->value;
      text << "separation " << set_text(m, r.certificate->side) << " | "
           << set_text(m, m.mask() & ~r.certificate->side) << " (lambda "
           << r.certificate->value << ")\n";
    }
  } else if (a.query == "tangle") {
    if (a.order < 1) throw UsageError("query 'tangle' needs --order");
    const TangleResult r = tangle_tk(m, a.order);
    j["valid"] = r.check.ok;
    if (r.check.ok) {
      text << "valid tangle\n";
      json maximal = json::array();
      for (Subset s : r.tangle->maximal()) maximal.push_back(labels(m, s));
      j["maximal"] = maximal;
      text << "maximal small sides " << r.tangle->maximal().size() << "\n";
    } else {
      j["violated_axiom"] = r.check.violated_axiom;
      j["detail"] = r.check.detail;
      text << "not a tangle: axiom " << r.check.violated_axiom << " ("
           << r.check.detail << ")\n";
    }
  } else if (a.query == "modular-flat") {
    const Subset x = need_x();
    const bool v = is_modular_flat(m, x);
    j["value"] = v;
    text << (v ? "true" : "false") << "\n";
  } else if (a.query == "blocking-pair") {
    const auto* rep = std::get_if<EvenCycleRep>(&m.provenance());
    if (!rep) {
      throw UsageError("query 'blocking-pair' needs an even-cycle matroid");
    }
    const auto pair = has_blocking_pair(rep->graph, rep->odd);
    j["value"] = pair.has_value();
    text << (pair ? "true" : "false") << "\n";
    if (pair) {
      j["vertices"] = {pair->first, pair->second};
      text << "vertices " << pair->first << " " << pair->second << "\n";
    }
  } else {
    throw UsageError("unknown query '" + a.query + "'");
  }
  if (a.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text.str();
  }
  return kExitPass;
}

// verify -------------------------------------------------------------------

json report_json(const SuiteReport& r, bool timings) {
  json j;
  j["suite"] = r.suite;
  j["toolchain"] = r.toolchain;
  j["status"] = status_name(r.status());
  json records = json::array();
  for (const CheckRecord& c : r.records) {
    json rec;
    rec["claim"] = c.claim;
    rec["anchor"] = c.anchor;
    rec["params"] = c.params;
    rec["expected"] = c.expected;
    rec["computed"] = c.computed;
    rec["status"] = status_name(c.status);
    if (timings) rec["seconds"] = c.seconds;
    records.push_back(rec);
  }
  j["records"] = records;
  return j;
}

int exit_for(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return kExitPass;
    case CheckStatus::kFail:
      return kExitFail;
    case CheckStatus::kSkipped:
      return kExitResource;
  }
  return kExitFail;
}

struct VerifyArgs {
  std::string suite;
  std::string out;
  bool json = false;
  bool timings = false;
  Caps caps;
};

int cmd_verify(const VerifyArgs& a) {
  std::vector<std::string> suites;
  if (a.suite == "all") {
    suites = suite_names();
  } else {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), a.suite) == names.end()) {
      throw UsageError("unknown suite '" + a.suite + "'");
    }
    suites.push_back(a.suite);
  }
  const VerifyOptions opt = a.caps.options();
  std::string output;
  json all = json::array();
  CheckStatus overall = CheckStatus::kPass;
  for (const std::string& s : suites) {
    const SuiteReport r = run_suite(s, opt);
    if (r.status() == CheckStatus::kFail ||
        (r.status() == CheckStatus::kSkipped &&
         overall == CheckStatus::kPass)) {
      overall = r.status();
    }
    if (a.json) {
      all.push_back(report_json(r, a.timings));
    } else {
      output += format_report(r, a.timings);
    }
  }
  if (a.json) output = (all.size() == 1 ? all[0] : all).dump(2) + "\n";
  if (!a.out.empty()) write_text(a.out, output);
  std::cout << output;
  return exit_for(overall);
}

// growth-table -------------------------------------------------------------

struct GrowthArgs {
  std::string family;
  int from = 2;
  int to = 6;
  bool json = false;
};

int binomial2(int n) { return n * (n - 1) / 2; }

int cmd_growth_table(const GrowthArgs& a) {
  if (a.from < 1 || a.to < a.from) throw UsageError("invalid n-range");
  std::function<int(int)> eps;
  std::function<int(int)> closed;
  std::string formula;
  if (a.family == "square") {
    eps = [](int n) { return epsilon(n_square(n)); };
    closed = [](int n) { return binomial2(n + 2) - 3; };
    formula = "C(n+2,2)-3";
  } else if (a.family == "triangle") {
    eps = [](int n) { return epsilon(n_triangle(n)); };
    closed = [](int n) { return binomial2(n + 2) - 2; };
    formula = "C(n+2,2)-2";
  } else if (a.family == "circle") {
    eps = [](int n) {
      const Matroid t = truncation(clique(n + 2));
      return is_simple(t) ? t.size() : -1;
    };
    closed = [](int n) { return binomial2(n + 2); };
    formula = "C(n+2,2)";
  } else if (a.family == "graphic") {
    eps = [](int n) { return epsilon(clique(n + 1)); };
    closed = [](int n) { return binomial2(n + 1); };
    formula = "C(n+1,2)";
  } else {
    throw UsageError("unknown family '" + a.family + "'");
  }
  bool ok = true;
  json rows = json::array();
  std::ostringstream text;
  text << "family " << a.family << ", closed form " << formula << "\n";
  text << "n\tepsilon\tclosed\tstatus\n";
  for (int n = a.from; n <= a.to; ++n) {
    const int e = eps(n);
    const int c = closed(n);
    ok = ok && e == c;
    rows.push_back({{"n", n}, {"epsilon", e}, {"closed", c}, {"match", e == c}});
    text << n << "\t" << e << "\t" << c << "\t"
         << (e == c ? "ok" : "MISMATCH") << "\n";
  }
  if (a.json) {
    json j;
    j["family"] = a.family;
    j["formula"] = formula;
    j["rows"] = rows;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text.str();
  }
  return ok ? kExitPass : kExitFail;
}

// minor-test, graphic-test, extensions, memberships -------------------------

struct MinorArgs {
  std::string host;
  std::string target;
  std::string cert_out;
  bool json = false;
  Caps caps;
};

int cmd_minor_test(const MinorArgs& a) {
  const Matroid host = read_matroid_file(a.host);
  const Matroid target = read_matroid_file(a.target);
  const auto cert = has_minor(host, target, a.caps.options().minor);
  if (cert && !a.cert_out.empty()) {
    write_text(a.cert_out, certificate_text(host, target, *cert));
  }
  if (a.json) {
    json j;
    j["minor"] = cert.has_value();
    if (cert) j["certificate"] = certificate_json(host, target, *cert);
    std::cout << j.dump(2) << "\n";
  } else if (cert) {
    std::cout << "minor found\n" << certificate_text(host, target, *cert);
  } else {
    std::cout << "no minor\n";
  }
  return kExitPass;
}

struct GraphicArgs {
  std::string file;
  bool json = false;
  Caps caps;
};

int cmd_graphic_test(const GraphicArgs& a) {
  const Matroid m = read_matroid_file(a.file);
  const auto g = is_graphic(m, a.caps.options().graphic);
  if (a.json) {
    json j;
    j["graphic"] = g.has_value();
    if (g) {
      j["vertices"] = g->vertices;
      json edges = json::object();
      for (int i = 0; i < m.size(); ++i) {
        edges[m.label(i)] = {g->edges[i].u, g->edges[i].v};
      }
      j["edges"] = edges;
    }
    std::cout << j.dump(2) << "\n";
  } else if (g) {
    std::cout << "graphic\nvertices " << g->vertices << "\n";
    for (int i = 0; i < m.size(); ++i) {
      std::cout << "edge " << m.label(i) << " " << g->edges[i].u << " "
                << g->edges[i].v << "\n";
    }
  } else {
    std::cout << "not graphic\n";
  }
  return kExitPass;
}

struct ExtensionArgs {
  std::string file;
  std::string element;
  int m = 4;
  std::string cert_out;
  bool json = false;
};

int cmd_classify_extension(const ExtensionArgs& a) {
  const Matroid m = read_matroid_file(a.file);
  const int e = element_of(m, a.element);
  const ExtensionClass c = classify_clique_extension(m, e);
  if (a.json) {
    json j;
    j["graphic"] = c.graphic;
    j["reason"] = reason_name(c.reason);
    j["n"] = c.n;
    if (c.partner) j["partner"] = m.label(*c.partner);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (c.graphic ? "graphic" : "nongraphic") << "\n";
    std::cout << "reason " << reason_name(c.reason) << "\n";
    std::cout << "clique M(K_" << c.n + 1 << ")\n";
    if (c.partner) std::cout << "parallel to " << m.label(*c.partner) << "\n";
  }
  return kExitPass;
}

int cmd_reduce_extension(const ExtensionArgs& a) {
  const Matroid m = read_matroid_file(a.file);
  const int e = element_of(m, a.element);
  const ReductionResult r = reduce_clique_extension(m, e, a.m);
  std::optional<Matroid> target;
  if (r.closed) target = family_member(r.family, r.index);
  if (target && !a.cert_out.empty()) {
    write_text(a.cert_out, certificate_text(m, *target, r.certificate));
  }
  if (a.json) {
    json j;
    j["closed"] = r.closed;
    if (r.closed) {
      j["target"] = family_name(r.family, r.index);
      j["certificate"] = certificate_json(m, *target, r.certificate);
    }
    j["transcript"] = r.transcript;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const std::string& line : r.transcript) std::cout << line << "\n";
    if (r.closed) {
      std::cout << "target " << family_name(r.family, r.index) << "\n";
      std::cout << certificate_text(m, *target, r.certificate);
    }
  }
  return r.closed ? kExitPass : kExitFail;
}

struct MembershipArgs {
  std::string name;
  bool json = false;
  Caps caps;
};

int cmd_membership_suite(const MembershipArgs& a) {
  const std::vector<MembershipRecord> recs =
      membership_suite(a.name, a.caps.options().minor);
  bool all = true;
  json arr = json::array();
  for (const MembershipRecord& r : recs) {
    all = all && r.certificate.has_value();
    json j;
    j["witness"] = r.witness;
    j["host"] = r.certificate ? json(r.host) : json(nullptr);
    if (r.certificate) {
      j["contract"] = popcount(r.certificate->contract);
      j["delete"] = popcount(r.certificate->deleted);
      j["mapping"] = r.certificate->mapping;
    }
    arr.push_back(j);
    if (!a.json) {
      std::cout << r.witness << "\t"
                << (r.certificate ? "minor of " + r.host : "not found")
                << "\n";
    }
  }
  if (a.json) {
    json j;
    j["suite"] = a.name;
    j["records"] = arr;
    std::cout << j.dump(2) << "\n";
  }
  return all ? kExitPass : kExitFail;
}

void add_caps(CLI::App* app, Caps* caps) {
  app->add_option("--workers", caps->workers,
                  "worker threads (env MATROID_WORKERS)")
      ->check(CLI::Range(1, 1024));
  app->add_option("--minor-cap", caps->minor_cap,
                  "largest host for minor search (env MATROID_MINOR_CAP)")
      ->check(CLI::Range(1, 64));
  app->add_option("--graphic-cap", caps->graphic_cap,
                  "largest input for graphicness (env MATROID_GRAPHIC_CAP)")
      ->check(CLI::Range(1, 64));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Desk-scale matroid workbench"};
  app.require_subcommand(1);
  std::function<int()> run;

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "build a named matroid");
  c->add_option("--family", construct.family,
                "clique, biclique, uniform, whirl, pg32, fano, square, "
                "triangle, circle, n-square, n-triangle, n-square-even-cycle, "
                "n-triangle-signed, spike, free-spike")
      ->required();
  c->add_option("--n", construct.n, "size parameter");
  c->add_option("--m", construct.m, "second size parameter (biclique)");
  c->add_option("--r", construct.r, "rank parameter");
  c->add_option("--out", construct.out, "write the document here");
  c->add_flag("--json", construct.json, "structured output");
  c->callback([&] { run = [&] { return cmd_construct(construct); }; });

  QueryArgs query;
  auto* q = app.add_subcommand("query", "evaluate a query on a matroid file");
  q->add_option("file", query.file, "exchange document")->required();
  q->add_option("query", query.query,
                "rank, epsilon, lambda, kappa, local-conn, vertical, tangle, "
                "modular-flat, blocking-pair")
      ->required();
  q->add_option("--x", query.x, "comma-separated element labels");
  q->add_option("--y", query.y, "comma-separated element labels");
  q->add_option("--k", query.k, "connectivity for 'vertical'");
  q->add_option("--order", query.order, "order for 'tangle'");
  q->add_flag("--json", query.json, "structured output");
  add_caps(q, &query.caps);
  q->callback([&] { run = [&] { return cmd_query(query); }; });

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "run a verification suite");
  v->add_option("suite", verify.suite,
                "growth-rates, isomorphisms, kung, spikes, tangles, linking, "
                "memberships, extension-reduction, or all")
      ->required();
  v->add_option("--out", verify.out, "also write the report here");
  v->add_flag("--json", verify.json, "structured report");
  v->add_flag("--timings", verify.timings,
              "include per-check runtimes (reports stop being reproducible)");
  add_caps(v, &verify.caps);
  v->callback([&] { run = [&] { return cmd_verify(verify); }; });

  GrowthArgs growth;
  auto* g = app.add_subcommand("growth-table", "tabulate extremal point counts");
  g->add_option("--family", growth.family, "square, triangle, circle, graphic")
      ->required();
  g->add_option("--from", growth.from, "first n");
  g->add_option("--to", growth.to, "last n");
  g->add_flag("--json", growth.json, "structured output");
  g->callback([&] { run = [&] { return cmd_growth_table(growth); }; });

  MinorArgs minor_args;
  auto* mt = app.add_subcommand("minor-test", "search for a minor");
  mt->add_option("host", minor_args.host, "host document")->required();
  mt->add_option("target", minor_args.target, "target document")->required();
  mt->add_option("--cert-out", minor_args.cert_out, "write the certificate");
  mt->add_flag("--json", minor_args.json, "structured output");
  add_caps(mt, &minor_args.caps);
  mt->callback([&] { run = [&] { return cmd_minor_test(minor_args); }; });

  GraphicArgs graphic;
  auto* gt = app.add_subcommand("graphic-test", "decide graphicness");
  gt->add_option("file", graphic.file, "exchange document")->required();
  gt->add_flag("--json", graphic.json, "structured output");
  add_caps(gt, &graphic.caps);
  gt->callback([&] { run = [&] { return cmd_graphic_test(graphic); }; });

  ExtensionArgs ext;
  auto* ce = app.add_subcommand("classify-extension",
                                "classify an extension of a clique");
  ce->add_option("file", ext.file, "exchange document")->required();
  ce->add_option("--element", ext.element, "label of the new element")
      ->required();
  ce->add_flag("--json", ext.json, "structured output");
  ce->callback([&] { run = [&] { return cmd_classify_extension(ext); }; });

  auto* re = app.add_subcommand("reduce-extension",
                                "reduce a nongraphic clique extension");
  re->add_option("file", ext.file, "exchange document")->required();
  re->add_option("--element", ext.element, "label of the new element")
      ->required();
  re->add_option("--m", ext.m, "target index");
  re->add_option("--cert-out", ext.cert_out, "write the certificate");
  re->add_flag("--json", ext.json, "structured output");
  re->callback([&] { run = [&] { return cmd_reduce_extension(ext); }; });

  MembershipArgs member;
  auto* ms = app.add_subcommand("membership-suite",
                                "certify named members of a family");
  ms->add_option("name", member.name,
                 "square-family, triangle-family, circle-family")
      ->required();
  ms->add_flag("--json", member.json, "structured output");
  add_caps(ms, &member.caps);
  ms->callback([&] { run = [&] { return cmd_membership_suite(member); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }
  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
}
