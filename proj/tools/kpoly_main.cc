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

// kpoly: command-line front end for the kpoly library.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kpoly/errors.h"
#include "kpoly/json_io.h"
#include "kpoly/linear_polymatroid.h"
#include "kpoly/mobius.h"
#include "kpoly/monomial_oracle.h"
#include "kpoly/polymatroid.h"
#include "kpoly/schubert.h"
#include "kpoly/stalactite.h"

namespace {

using kpoly::json_io::Json;
namespace jio = kpoly::json_io;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

// Human text and JSON payload of one command.
struct Report {
  std::ostringstream text;
  Json json = Json::object();
  int status = kOk;

  void verdict(const std::string& label, const kpoly::Verdict& v) {
    text << label << ": " << v.describe() << '\n';
    json[label] = jio::to_json(v);
    if (!v.holds()) status = kViolation;
  }
};

struct GlobalOptions {
  bool json = false;
  std::string out;
};

std::size_t subset_cap() {
  const char* env = std::getenv("KPOLY_CAP_SUBSETS");
  if (env == nullptr || *env == '\0') return kpoly::kDefaultSubsetCap;
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(env, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || env[pos] != '\0') {
    throw kpoly::ArgumentError("KPOLY_CAP_SUBSETS must be a nonnegative integer");
  }
  return v;
}

std::vector<std::int64_t> parse_vector(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string s = text;
  if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != tok.size()) {
      throw kpoly::ArgumentError("malformed integer list '" + text + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw kpoly::ArgumentError("empty integer list");
  return out;
}

kpoly::LatticePoint max_point(const kpoly::PointSet& s) {
  kpoly::LatticePoint m = s[0];
  for (const auto& a : s) m = kpoly::componentwise_max(m, a);
  return m;
}

// A multidegree support file: either a bare point list or an object with
// "msupp" and an optional ambient "m".
struct MsuppInput {
  kpoly::PointSet msupp;
  kpoly::LatticePoint m;
};

MsuppInput load_msupp(const std::string& path) {
  const Json j = jio::read_file(path);
  MsuppInput in;
  if (j.is_array()) {
    in.msupp = jio::parse_point_set(j);
  } else if (j.is_object() && j.contains("msupp")) {
    in.msupp = jio::parse_point_set(j["msupp"]);
    if (j.contains("m")) in.m = jio::parse_point(j["m"]);
  } else {
    throw kpoly::ArgumentError(path + ": expected a point list or {\"msupp\": ...}");
  }
  if (in.msupp.empty()) throw kpoly::ArgumentError(path + ": empty support");
  if (in.m.size() == 0) in.m = max_point(in.msupp);
  if (in.m.size() != in.msupp.ambient_p()) {
    throw kpoly::ArgumentError(path + ": m and msupp differ in length");
  }
  return in;
}

kpoly::PointSet load_points(const std::string& path) {
  const Json j = jio::read_file(path);
  if (j.is_object() && j.contains("points")) return jio::parse_point_set(j["points"]);
  return jio::parse_point_set(j);
}

kpoly::PointSet support_of(const kpoly::IntPolynomial& f) {
  return kpoly::to_signed_support(f).keys();
}

std::string subset_label(std::uint32_t mask, const std::vector<std::size_t>& labels) {
  std::string s;
  for (std::size_t i : kpoly::mask_indices(mask)) {
    if (!s.empty()) s += '+';
    s += "n" + std::to_string(labels[i] + 1);
  }
  return s;
}

void print_system(Report& r, const kpoly::GPolyInequalitySystem& sys,
                  const std::vector<std::size_t>& labels) {
  Json rows = Json::array();
  for (std::uint32_t mask = 1; mask < sys.num_subsets(); ++mask) {
    r.text << sys.c(mask) << " <= " << subset_label(mask, labels) << " <= " << sys.b(mask)
           << '\n';
    Json js = Json::array();
    for (std::size_t i : kpoly::mask_indices(mask)) js.push_back(labels[i] + 1);
    rows.push_back({{"J", js}, {"c", sys.c(mask)}, {"b", sys.b(mask)}});
  }
  r.json["inequalities"] = rows;
}

// ---- grothendieck / schubert ----

struct GrothendieckArgs {
  std::string perm;
  bool schubert = false;
  std::string via = "divided-diff";
  bool verify = false;
};

kpoly::IntPolynomial route(const kpoly::Permutation& w, const std::string& via) {
  if (via == "divided-diff") return kpoly::grothendieck(w);
  if (via == "stalactites") return kpoly::grothendieck_via_stalactites(w);
  return kpoly::grothendieck_via_mobius(w);
}

void run_grothendieck(const GrothendieckArgs& a, Report& r) {
  const kpoly::Permutation w = kpoly::Permutation::parse(a.perm);
  r.json["permutation"] = jio::to_json(w);
  kpoly::IntPolynomial g;
  try {
    g = route(w, a.via);
  } catch (const kpoly::PreconditionError& e) {
    throw kpoly::ArgumentError(std::string("route '") + a.via + "': " + e.what());
  }
  const kpoly::IntPolynomial out = a.schubert ? g.lowest_degree_part() : g;
  r.text << out.to_text() << '\n';
  r.json["polynomial"] = jio::to_json(out);
  r.json["text"] = out.to_text();
  if (!a.verify) return;

  std::vector<std::string> routes = {"divided-diff"};
  if (kpoly::is_zero_one(w)) {
    routes.push_back("stalactites");
    routes.push_back("mobius");
  } else {
    r.text << "note: " << w.to_string()
           << " is not zero-one; only the divided-difference route applies\n";
  }
  Json agree = Json::object();
  bool all = true;
  for (const auto& name : routes) {
    kpoly::IntPolynomial h = route(w, name);
    if (a.schubert) h = h.lowest_degree_part();
    const bool same = h == out;
    all = all && same;
    agree[name] = same;
    r.text << "route " << name << ": " << (same ? "agrees" : "DIFFERS: " + h.to_text()) << '\n';
  }
  if (a.schubert) {
    const bool same = kpoly::schubert_by_divided_differences(w) == out;
    all = all && same;
    agree["schubert-divided-diff"] = same;
    r.text << "route schubert-divided-diff: " << (same ? "agrees" : "DIFFERS") << '\n';
  }
  r.json["routes"] = agree;
  r.json["routes_agree"] = all;
  if (!all) r.status = kViolation;
}

// ---- census ----

void run_census(std::size_t p, std::size_t jobs, Report& r) {
  if (jobs == 0) throw kpoly::ArgumentError("--jobs must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  const std::int64_t count = kpoly::count_zero_one(p, jobs);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.text << "p: " << p << '\n' << "count: " << count << '\n';
  r.text << "elapsed: " << std::fixed << std::setprecision(3) << secs << " s\n";
  r.json = {{"p", p}, {"count", count}, {"elapsed_seconds", secs}, {"jobs", jobs}};
}

// ---- verify ----

struct VerifyArgs {
  std::string kind;
  std::string file;
  std::string perm;
  std::string orders = "all";
  std::size_t samples = 10;
  std::optional<std::uint64_t> seed;
  std::string method = "all";
};

kpoly::CaveOrderPolicy order_policy(const VerifyArgs& a) {
  if (a.orders == "natural") return kpoly::CaveOrderPolicy::natural();
  if (a.orders == "all") return kpoly::CaveOrderPolicy::all_orders();
  if (!a.seed) throw kpoly::ArgumentError("--orders sample needs --seed");
  return kpoly::CaveOrderPolicy::sample(a.samples, *a.seed);
}

void verify_gpolymatroid(const VerifyArgs& a, Report& r) {
  const kpoly::PointSet g = load_points(a.file);
  std::optional<bool> first;
  for (kpoly::GPolyMethod m : kpoly::kAllGPolyMethods) {
    const std::string name = kpoly::method_name(m);
    if (a.method != "all" && a.method != name) continue;
    const kpoly::Verdict v = kpoly::is_g_polymatroid(g, m);
    r.verdict(name, v);
    if (first && *first != v.holds()) {
      throw kpoly::InternalError("g-polymatroid methods disagree on " + g.to_string());
    }
    first = v.holds();
  }
}

void verify_cave(const VerifyArgs& a, Report& r) {
  const kpoly::PointSet c = load_points(a.file);
  r.verdict("cave", kpoly::is_cave(c, order_policy(a)));
}

void verify_shelling(const VerifyArgs& a, Report& r) {
  const MsuppInput in = load_msupp(a.file);
  const auto facets = kpoly::facets_from_msupp(in.msupp, in.m);
  r.text << "facets: " << facets.size() << '\n';
  r.verdict("shelling", kpoly::verify_shelling(facets));
}

void verify_matroid_mu(const VerifyArgs& a, Report& r) {
  const kpoly::Matroid m = jio::parse_matroid(jio::read_file(a.file));
  const std::int64_t chi = kpoly::reduced_euler_characteristic(m);
  const auto cl = kpoly::coloops(m);
  r.text << "reduced Euler characteristic: " << chi << '\n';
  r.text << "coloops:";
  Json jc = Json::array();
  for (std::size_t i : cl) {
    r.text << ' ' << i + 1;
    jc.push_back(i + 1);
  }
  r.text << '\n';
  r.json["reduced_euler_characteristic"] = chi;
  r.json["coloops"] = jc;
  r.json["mu_support"] = jio::to_json(kpoly::mu_support(m.bases()));
  r.verdict("matroid-mu", kpoly::verify_matroid_mu_theorem(m));
}

kpoly::Permutation permutation_input(const VerifyArgs& a) {
  if (!a.perm.empty()) return kpoly::Permutation::parse(a.perm);
  if (!a.file.empty()) return jio::parse_permutation(jio::read_file(a.file));
  throw kpoly::ArgumentError("theorem-a needs --perm or an input file");
}

void verify_support_inequalities(const VerifyArgs& a, Report& r) {
  const kpoly::Permutation w = permutation_input(a);
  const kpoly::PointSet supp = support_of(kpoly::grothendieck(w));
  const auto collapse = kpoly::CoordinateCollapse::of(supp);
  const kpoly::PointSet reduced = collapse.collapse(supp);
  r.json["permutation"] = jio::to_json(w);
  r.json["support_size"] = supp.size();
  r.text << "support: " << supp.size() << " points\n";
  if (reduced.ambient_p() == 0) {
    r.text << "support is a single point\n";
    r.verdict("theorem-a", kpoly::Verdict::pass());
    return;
  }
  const kpoly::GPolyInequalitySystem sys = kpoly::inequality_system(reduced);
  print_system(r, sys, collapse.kept());
  kpoly::Verdict v = kpoly::is_g_polymatroid(reduced);
  if (v.holds() && kpoly::integer_points(sys) != reduced) {
    v = kpoly::Verdict::fail(
        {"inequality-points", {}, {}, "integer points of the system differ from the support"});
  }
  r.verdict("theorem-a", v);
}

void report_linear(const kpoly::SubspaceConfig& c, Report& r) {
  const std::vector<std::int64_t> table = kpoly::rank_table(c);
  const kpoly::PointSet bases = kpoly::linear_polymatroid(c);
  const kpoly::PointSet mu = kpoly::mu_support(bases);
  Json ranks = Json::array();
  r.text << "rank function:\n";
  for (std::uint32_t mask = 1; mask < table.size(); ++mask) {
    std::vector<std::size_t> labels(c.p());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = i;
    r.text << "  r(" << subset_label(mask, labels) << ") = " << table[mask] << '\n';
    Json js = Json::array();
    for (std::size_t i : kpoly::mask_indices(mask)) js.push_back(i + 1);
    ranks.push_back({{"J", js}, {"rank", table[mask]}});
  }
  r.text << "polymatroid: " << bases.to_string() << '\n';
  r.text << "mu support: " << mu.to_string() << '\n';
  r.json["config"] = jio::to_json(c);
  r.json["ranks"] = ranks;
  r.json["polymatroid"] = jio::to_json(bases);
  r.json["mu_support"] = jio::to_json(mu);
  r.verdict("theorem-c", kpoly::is_g_polymatroid(mu));
}

void run_verify(const VerifyArgs& a, Report& r) {
  if (a.kind != "theorem-a" && a.file.empty()) {
    throw kpoly::ArgumentError("verify " + a.kind + " needs an input file");
  }
  if (a.kind == "gpolymatroid") return verify_gpolymatroid(a, r);
  if (a.kind == "cave") return verify_cave(a, r);
  if (a.kind == "shelling") return verify_shelling(a, r);
  if (a.kind == "matroid-mu") return verify_matroid_mu(a, r);
  if (a.kind == "theorem-a") return verify_support_inequalities(a, r);
  report_linear(jio::parse_subspace_config(jio::read_file(a.file)), r);
}

// ---- hilbert ----

struct HilbertArgs {
  std::string file;
  std::string eval;
  bool oracle = false;
};

void run_hilbert(const HilbertArgs& a, Report& r) {
  const MsuppInput in = load_msupp(a.file);
  const kpoly::Verdict base = kpoly::is_base_polymatroid(in.msupp);
  if (!base.holds()) {
    r.verdict("polymatroid", base);
    return;
  }
  const kpoly::SignedSupport h = kpoly::hsupp_from_msupp_collapsed(in.msupp);
  r.text << kpoly::format_hilbert(h) << '\n';
  r.json["hilbert"] = jio::to_json(h);
  r.json["text"] = kpoly::format_hilbert(h);
  std::optional<kpoly::SquareFreeIdeal> ideal;
  if (a.oracle) {
    ideal = kpoly::msupp_to_ideal(in.msupp, in.m);
    const bool same = kpoly::hilbert_poly_ie(*ideal, subset_cap()) == h;
    r.text << "oracle (inclusion-exclusion): " << (same ? "agrees" : "DIFFERS") << '\n';
    r.json["oracle_agrees"] = same;
    if (!same) r.status = kViolation;
  }
  if (a.eval.empty()) return;
  const std::vector<std::int64_t> t = parse_vector(a.eval);
  if (t.size() != in.msupp.ambient_p()) {
    throw kpoly::ArgumentError("--eval needs " + std::to_string(in.msupp.ambient_p()) +
                               " entries");
  }
  const std::int64_t value = kpoly::hilbert_eval(h, t);
  r.text << "value: " << value << '\n';
  r.json["value"] = value;
  if (ideal) {
    std::vector<int> v;
    for (std::int64_t x : t) {
      if (x < 0 || x > 1'000'000) throw kpoly::ArgumentError("--eval entry out of range");
      v.push_back(static_cast<int>(x));
    }
    const std::int64_t brute = kpoly::hilbert_function_bruteforce(*ideal, kpoly::LatticePoint(v));
    r.text << "brute force: " << brute << (brute == value ? " (agrees)" : " (DIFFERS)") << '\n';
    r.json["bruteforce"] = brute;
    if (brute != value) r.status = kViolation;
  }
}

// ---- mobius ----

void run_mobius(const std::string& file, Report& r) {
  const MsuppInput in = load_msupp(file);
  const kpoly::SignedSupport mu = kpoly::mobius_to_top(in.msupp);
  r.text << "mu(u, top):\n";
  for (const auto& [u, v] : mu) r.text << "  " << u.to_string() << ": " << v << '\n';
  r.json["mobius"] = jio::to_json(mu);
  const kpoly::IntPolynomial k = kpoly::kpoly_from_mobius(in.msupp, in.m);
  r.text << "K-polynomial: " << k.to_text() << '\n';
  r.json["kpoly"] = jio::to_json(k);
  r.verdict("deg-equals-neg-mobius", kpoly::verify_deg_equals_neg_mobius(in.msupp));
}

// ---- linear-polymatroid ----

struct LinearArgs {
  std::string file;
  bool random = false;
  std::size_t p = 3;
  std::size_t q = 3;
  std::optional<std::uint64_t> seed;
};

void run_linear(const LinearArgs& a, Report& r) {
  if (a.random) {
    if (!a.seed) throw kpoly::ArgumentError("--random needs --seed");
    return report_linear(kpoly::random_config(a.p, a.q, *a.seed), r);
  }
  if (a.file.empty()) throw kpoly::ArgumentError("give an input file or --random");
  report_linear(jio::parse_subspace_config(jio::read_file(a.file)), r);
}

// ---- explore ----

struct ExploreArgs {
  std::size_t trials = 100;
  std::size_t max_p = 4;
  int max_coord = 2;
  std::uint64_t seed = 0;
};

void run_explore(const ExploreArgs& a, Report& r) {
  const kpoly::ExploreReport rep =
      kpoly::explore_mu_support(a.trials, a.max_p, a.max_coord, a.seed);
  r.text << "mu-support g-polymatroid: " << rep.holds << " of " << rep.trials << " trials\n";
  r.json = {{"trials", rep.trials}, {"holds", rep.holds}, {"seed", a.seed}};
  if (rep.counterexample) {
    r.text << "counterexample: " << rep.counterexample->to_string() << '\n';
    r.json["counterexample"] = jio::to_json(*rep.counterexample);
  }
  if (rep.witness) {
    r.json["witness"] = jio::to_json(*rep.witness);
  }
}

void emit(const Report& r, const GlobalOptions& g) {
  const std::string text = r.text.str();
  if (g.json) {
    std::cerr << text;
    std::cout << r.json.dump(2) << '\n';
  } else {
    std::cout << text;
  }
  if (!g.out.empty()) {
    std::ofstream f(g.out);
    if (!f) throw kpoly::ArgumentError("cannot write " + g.out);
    f << r.json.dump(2) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted K-polynomials, Hilbert supports and polymatroid checks"};
  app.require_subcommand(1);
  GlobalOptions global;
  app.add_flag("--json", global.json, "Print JSON to stdout and the text to stderr");
  app.add_option("--out", global.out, "Also write the JSON payload to this path");

  GrothendieckArgs ga;
  auto* groth = app.add_subcommand("grothendieck", "Grothendieck polynomial of a permutation");
  auto* schub = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
  for (auto* sub : {groth, schub}) {
    sub->add_option("permutation", ga.perm, "One-line notation, e.g. 1,5,3,2,4")->required();
    sub->add_option("--via", ga.via, "Computation route")
        ->check(CLI::IsMember({"divided-diff", "stalactites", "mobius"}));
    sub->add_flag("--verify", ga.verify, "Run every applicable route and compare");
  }
  groth->add_flag("--schubert", ga.schubert, "Print the lowest-degree part");

  std::size_t census_p = 0, census_jobs = 1;
  auto* census = app.add_subcommand("census", "Count zero-one Schubert polynomials in S_p");
  census->add_option("p", census_p)->required();
  census->add_option("--jobs", census_jobs, "Worker threads");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a structural property");
  verify->add_option("kind", va.kind)
      ->required()
      ->check(CLI::IsMember(
          {"gpolymatroid", "cave", "shelling", "matroid-mu", "theorem-a", "theorem-c"}));
  verify->add_option("file", va.file, "JSON input");
  verify->add_option("--perm", va.perm, "Permutation for theorem-a");
  verify->add_option("--orders", va.orders, "Axis orders for cave")
      ->check(CLI::IsMember({"natural", "all", "sample"}));
  verify->add_option("--samples", va.samples, "Number of sampled orders");
  verify->add_option("--seed", va.seed, "Seed for sampled orders");
  verify->add_option("--method", va.method, "g-polymatroid method")
      ->check(CLI::IsMember({"all", "axioms", "homogenization", "inequality_points"}));

  HilbertArgs ha;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert polynomial from a multidegree support");
  hilbert->add_option("file", ha.file, "JSON multidegree support")->required();
  hilbert->add_option("--eval", ha.eval, "Evaluate at t, e.g. 1,1,1");
  hilbert->add_flag("--oracle", ha.oracle, "Cross-check against inclusion-exclusion");

  std::string mobius_file;
  auto* mobius = app.add_subcommand("mobius", "Mobius function and K-polynomial of a support");
  mobius->add_option("file", mobius_file, "JSON multidegree support")->required();

  LinearArgs la;
  auto* linear = app.add_subcommand("linear-polymatroid", "Polymatroid of a subspace arrangement");
  linear->add_option("file", la.file, "JSON subspace configuration");
  linear->add_flag("--random", la.random, "Use a random configuration");
  linear->add_option("--p", la.p, "Number of subspaces for --random");
  linear->add_option("--q", la.q, "Ambient dimension for --random");
  linear->add_option("--seed", la.seed, "Seed for --random");

  ExploreArgs ea;
  auto* explore = app.add_subcommand("explore", "Search for mu-supports that are not g-polymatroids");
  explore->add_option("--trials", ea.trials);
  explore->add_option("--max-p", ea.max_p);
  explore->add_option("--max-coord", ea.max_coord);
  explore->add_option("--seed", ea.seed)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  Report report;
  try {
    if (groth->parsed()) {
      run_grothendieck(ga, report);
    } else if (schub->parsed()) {
      ga.schubert = true;
      run_grothendieck(ga, report);
    } else if (census->parsed()) {
      run_census(census_p, census_jobs, report);
    } else if (verify->parsed()) {
      run_verify(va, report);
    } else if (hilbert->parsed()) {
      run_hilbert(ha, report);
    } else if (mobius->parsed()) {
      run_mobius(mobius_file, report);
    } else if (linear->parsed()) {
      run_linear(la, report);
    } else if (explore->parsed()) {
      run_explore(ea, report);
    }
    emit(report, global);
  } catch (const kpoly::PreconditionError& e) {
    std::cerr << "violation: " << e.what() << '\n';
    return kViolation;
  } catch (const kpoly::InternalError& e) {
    std::cerr << "violation: " << e.what() << '\n';
    return kViolation;
  } catch (const kpoly::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return report.status;
}
