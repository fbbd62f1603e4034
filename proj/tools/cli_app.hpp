#pragma once

// Command-line front end. Exit codes: 0 success or all checks passed,
// 1 check failed or infeasible request, 2 usage or malformed input,
// 3 capacity limit.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cograph/cograph.hpp"

namespace cograph::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kCapacity = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Global {
  unsigned threads = 1;
  std::uint64_t seed = 1;
  int catalog_max = Limits{}.catalog_max;
  int adjacency_max = Limits{}.adjacency_max;
  std::size_t witness_max = 8;
  std::string out;
  Limits limits() const { return {adjacency_max, catalog_max}; }
};

// --- file handling -------------------------------------------------------------

inline std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

/// Destination for an artifact: --out (relative paths resolve against
/// COGRAPH_OUT_DIR when set), else COGRAPH_OUT_DIR/default_name, else stdout.
inline std::string resolve_output(const std::string& requested, const std::string& default_name) {
  const char* dir = std::getenv("COGRAPH_OUT_DIR");
  if (!requested.empty()) {
    std::filesystem::path p(requested);
    if (dir && *dir && p.is_relative()) return (std::filesystem::path(dir) / p).string();
    return requested;
  }
  if (dir && *dir) return (std::filesystem::path(dir) / default_name).string();
  return "";
}

/// Writes to a sibling temporary file and renames it into place, so a
/// failure never leaves a partial artifact.
inline void write_artifact(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  const std::filesystem::path target(path);
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << content;
    f.flush();
    if (!f) {
      std::filesystem::remove(tmp);
      throw UsageError("write failed for '" + path + "'");
    }
  }
  std::filesystem::rename(tmp, target);
}

inline std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

/// Cotree from a JSON document (bare or wrapped in {"cotree": ...}) or an
/// encoding string.
inline Cotree load_cotree(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError("byte " + std::to_string(e.byte), "JSON syntax error");
    }
    if (j.is_object() && j.contains("cotree")) return cotree_from_json(j["cotree"], "/cotree");
    return cotree_from_json(j);
  }
  return parse_cotree_any(text);
}

inline ChildPath parse_path(const std::string& text) {
  ChildPath path;
  if (text.empty()) return path;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '/')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("path component '" + part + "' is not an index");
    path.push_back(std::stoul(part));
  }
  return path;
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      out.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw UsageError("not an integer list: '" + text + "'");
    }
  }
  return out;
}

inline void require_pair(int s, int t) {
  if (s < 1 || t < s) throw UsageError("need 1 <= s <= t, got s=" + std::to_string(s) + " t=" + std::to_string(t));
}

// --- cotree rendering ------------------------------------------------------------

inline std::string render_cotree(const Cotree& g, const std::string& format) {
  if (format == "json") return dump(cotree_to_json(g));
  if (format == "encoding" || format == "text") return g.encoding() + "\n";
  if (format == "dot") return to_dot(g);
  if (format == "graph6") return to_graph6(to_adjacency(g, AdjacencyGraph::kHardMax)) + "\n";
  throw UsageError("unknown format '" + format + "'");
}

/// Structural facts plus profile fulfillment for a constructed cograph.
inline nlohmann::json verification_stanza(const Cotree& g, const std::optional<BicliqueProfile>& profile,
                                          std::optional<std::int64_t> degree,
                                          std::optional<std::int64_t> expected_edges, bool& passed) {
  nlohmann::json v;
  passed = true;
  v["vertices"] = g.vertex_count();
  v["edges"] = g.edge_count();
  if (degree) {
    const bool ok = is_regular(g, *degree);
    v["regular"] = {{"degree", *degree}, {"passed", ok}};
    passed = passed && ok;
  }
  if (profile) {
    const bool ok = fulfills(biclique_sequence(g), *profile);
    v["profile"] = {{"profile", profile->to_string()}, {"fulfilled", ok}};
    passed = passed && ok;
  }
  if (expected_edges) {
    const bool ok = g.edge_count() == *expected_edges;
    v["edge_formula"] = {{"expected", *expected_edges}, {"passed", ok}};
    passed = passed && ok;
  }
  v["passed"] = passed;
  return v;
}

// --- subcommand drivers -------------------------------------------------------------

struct EnumerateArgs {
  int s = 0, t = 0;
  std::string profile;
  int n_min = 1, n_max = 0;
  std::size_t cap = 0;
  bool exhaustive = false;
  std::string format = "json";
  std::string snapshot;
};

inline int cmd_enumerate(const EnumerateArgs& a, const Global& g, std::ostream& out, std::ostream& err) {
  const bool by_pair = a.s != 0 || a.t != 0;
  if (by_pair == !a.profile.empty()) throw UsageError("give either --s/--t or --profile");
  if (a.n_max < 1 || a.n_min < 1 || a.n_min > a.n_max) throw UsageError("need 1 <= --n-min <= --n-max");
  if (a.format != "json" && a.format != "csv" && a.format != "text") throw UsageError("unknown format '" + a.format + "'");
  std::optional<BicliqueProfile> p;
  std::optional<Rational> alpha;
  std::string label;
  if (by_pair) {
    require_pair(a.s, a.t);
    p = biclique_free_profile(a.s, a.t);
    alpha = biclique_alpha(a.s, a.t);
    label = "(" + std::to_string(a.s) + "," + std::to_string(a.t) + ")";
  } else {
    p = parse_profile(a.profile);
    label = p->to_string();
  }
  BuildOptions opt;
  opt.threads = g.threads;
  opt.exhaustive = a.exhaustive;
  opt.witness_limit = g.witness_max;
  opt = options_for(*p, a.n_max, opt);
  if (a.cap != 0) {
    if (a.cap < constrained_window(*p))
      throw UsageError("--cap " + std::to_string(a.cap) + " is below the constrained window " +
                       std::to_string(constrained_window(*p)));
    opt.cap = a.cap;
  }
  const auto levels = build_registry(opt);
  auto series = series_from_registry(levels, *p, a.n_min, a.n_max, a.exhaustive ? SIZE_MAX : g.witness_max);
  series.constraint = label;
  series.alpha = alpha;

  std::string body;
  if (a.format == "csv") {
    body = series_to_csv(series);
  } else if (a.format == "text") {
    std::ostringstream os;
    for (const auto& [n, ex] : series.values)
      os << n << " " << ex << " " << series.witnesses.at(n).front().encoding() << "\n";
    body = os.str();
  } else {
    body = dump(series_to_json(series));
  }
  const std::string base = by_pair ? "ex-" + std::to_string(a.s) + "-" + std::to_string(a.t) : "ex-profile";
  const std::string ext = a.format == "json" ? ".json" : a.format == "csv" ? ".csv" : ".txt";
  const std::string snapshot = a.snapshot.empty() ? "" : resolve_output(a.snapshot, "");
  const std::string snapshot_body = snapshot.empty() ? "" : dump(registry_to_json(levels));
  write_artifact(resolve_output(g.out, base + ext), body, out);
  if (!snapshot.empty()) write_artifact(snapshot, snapshot_body, out);

  err << "constraint " << label << ", profile " << p->to_string() << ", cap " << opt.cap << "\n";
  if (alpha) {
    for (const auto& [n, ex] : series.values) {
      const Rational bound = *alpha * Rational(n);
      err << "n=" << n << " ex=" << ex << (Rational(ex) < bound ? " < " : " >= ") << bound.to_string()
          << " = alpha*n\n";
    }
  }
  return kOk;
}

struct ConstructArgs {
  std::string family;
  std::int64_t n = 0, d = -1, s = 0, t = 0, r = -1, k = 0;
  std::string input, path;
  std::string format = "json";
};

inline int cmd_construct(const ConstructArgs& a, const Global& g, std::ostream& out, std::ostream& err) {
  if (a.format != "json" && a.format != "graph6" && a.format != "dot" && a.format != "text")
    throw UsageError("unknown format '" + a.format + "'");
  std::optional<Cotree> built;
  std::optional<BicliqueProfile> profile;
  std::optional<std::int64_t> degree, expected_edges;
  nlohmann::json params;
  const auto& f = a.family;
  if (f == "regular") {
    if (a.n < 1 || a.d < 0 || a.d >= a.n) throw UsageError("regular needs --n >= 1 and 0 <= --d < n");
    params = {{"n", a.n}, {"d", a.d}};
    auto res = regular_cograph(a.n, a.d);
    if (!res.graph) {
      err << "infeasible: " << res.reason << "\n";
      write_artifact("", "", out);
      return kCheckFailed;
    }
    built = res.graph;
    degree = a.d;
  } else if (f == "star") {
    if (a.t < 2 || a.n < 1) throw UsageError("star needs --t >= 2 and --n >= 1");
    params = {{"t", a.t}, {"n", a.n}};
    built = star_extremal(a.t, a.n, g.limits());
    profile = biclique_free_profile(1, static_cast<int>(a.t));
  } else if (f == "k2t") {
    if (a.n < 2) throw UsageError("k2t needs --n >= 2");
    params = {{"t", a.t}, {"n", a.n}};
    built = k2t_extremal(a.t, a.n);
    profile = forbidden_biclique_profile(2, static_cast<int>(a.t));
  } else if (f == "k33") {
    if (a.n < 2) throw UsageError("k33 needs --n >= 2");
    params = {{"n", a.n}};
    built = k33_extremal(a.n);
    profile = forbidden_biclique_profile(3, 3);
  } else if (f == "clique-product") {
    if (a.s < 1 || a.t < a.s || a.r < 0) throw UsageError("clique-product needs 1 <= --s <= --t and --r >= 0");
    params = {{"s", a.s}, {"t", a.t}, {"r", a.r}};
    built = clique_product_family(a.s, a.t, a.r);
    profile = biclique_free_profile(static_cast<int>(a.s), static_cast<int>(a.t));
    // C(s-1,2) + (s-1 + (t-1)/2) r t, kept integral: (t-1) r t is even.
    expected_edges = (a.s - 1) * (a.s - 2) / 2 + (a.s - 1) * a.r * a.t + (a.t - 1) * a.r * a.t / 2;
  } else if (f == "pump") {
    if (a.input.empty()) throw UsageError("pump needs --input");
    if (a.k < 0) throw UsageError("pump needs --k >= 0");
    const Cotree base = load_cotree(read_input(a.input));
    const ChildPath at = parse_path(a.path);
    params = {{"input", base.encoding()}, {"path", a.path}, {"k", a.k}};
    expected_edges = pumped_edge_count(base, at, a.k);
    built = pump(base, at, a.k);
  } else {
    throw UsageError("unknown family '" + f + "'");
  }

  bool passed = false;
  const auto stanza = verification_stanza(*built, profile, degree, expected_edges, passed);
  std::string body;
  if (a.format == "json") {
    nlohmann::json j{{"family", f},
                     {"parameters", params},
                     {"encoding", built->encoding()},
                     {"cotree", cotree_to_json(*built)},
                     {"verification", stanza}};
    body = dump(j);
  } else {
    body = render_cotree(*built, a.format);
    err << stanza.dump() << "\n";
  }
  const std::string ext = a.format == "json" ? ".json" : a.format == "graph6" ? ".g6" : a.format == "dot" ? ".dot" : ".txt";
  write_artifact(resolve_output(g.out, f + ext), body, out);
  err << f << ": " << built->vertex_count() << " vertices, " << built->edge_count() << " edges, verification "
      << (passed ? "passed" : "FAILED") << "\n";
  return passed ? kOk : kCheckFailed;
}

struct VerifyArgs {
  std::string check;
  int n = 0, n_min = 0, n_max = 0, s = 0, t = 0;
  int n1_max = 3, n2_max = 5, exhaustive_max = 9, trials = 200;
  std::string which = "all";
  bool small = false;
};

inline CheckReport run_bound(int s, int t, int n_max, const Global& g) {
  BuildOptions opt;
  opt.threads = g.threads;
  const auto series = extremal_function(s, t, 1, n_max, opt);
  CheckReport r = check_strict_bound(series, biclique_alpha(s, t), "bound");
  r.absorb(check_monotone(series));
  r.parameters = {{"s", s}, {"t", t}, {"n_max", n_max}, {"alpha", biclique_alpha(s, t).to_string()}};
  return r;
}

/// The bundled small-range suite.
inline CheckReport run_small_suite(const Global& g) {
  const auto limits = g.limits();
  CheckReport all;
  all.check = "all";
  all.parameters = {{"small", true}, {"seed", g.seed}};
  // t = floor(n/6 + 1) is 1 for n <= 5, and K_1 has no K_{1,1} on either
  // side, so the balanced-biclique sweep starts at n = 2.
  for (int n = 2; n <= 8; ++n) all.absorb(check_balanced_biclique(n, limits));
  for (auto [s, t] : small_biclique_pairs()) all.absorb(check_dp_vs_oracle(s, t, 8, limits, g.threads));
  all.absorb(check_sequence_agreement(7, limits));
  all.absorb(check_fulfillment_agreement(7, {{2, 2}, {2, 3}, {3, 3}}, limits));
  all.absorb(check_restriction(3, 5, {{2, 2}, {2, 3}, {3, 3}}, limits));
  all.absorb(check_regular(2, 40, 8, limits));
  all.absorb(check_pareto(8, small_biclique_pairs(), g.threads));
  all.absorb(check_structure_theorems(1, 8, StructureCheck::all, limits));
  all.absorb(check_pumping(g.seed, 100, 8, small_biclique_pairs(), limits));
  all.absorb(check_constructions(8, limits));
  for (auto [s, t] : std::vector<BicliquePair>{{2, 2}, {2, 3}, {3, 3}}) all.absorb(run_bound(s, t, 8, g));
  return all;
}

inline int cmd_verify(const VerifyArgs& a, const Global& g, std::ostream& out, std::ostream& err) {
  const auto limits = g.limits();
  auto need = [](bool ok, const char* what) {
    if (!ok) throw UsageError(what);
  };
  CheckReport r;
  const auto& c = a.check;
  if (c == "balanced-biclique") {
    const int lo = a.n ? a.n : (a.n_min ? a.n_min : 1);
    const int hi = a.n ? a.n : a.n_max;
    need(lo >= 1 && hi >= lo, "balanced-biclique needs --n or --n-max");
    r.check = "balanced-biclique";
    r.parameters = {{"n_min", lo}, {"n_max", hi}};
    for (int n = lo; n <= hi; ++n) r.absorb(check_balanced_biclique(n, limits));
  } else if (c == "dp-vs-oracle") {
    require_pair(a.s, a.t);
    need(a.n_max >= 1, "dp-vs-oracle needs --n-max");
    r = check_dp_vs_oracle(a.s, a.t, a.n_max, limits, g.threads);
  } else if (c == "bound-2t") {
    need(a.t >= 2 && a.n_max >= 1, "bound-2t needs --t >= 2 and --n-max");
    BuildOptions opt;
    opt.threads = g.threads;
    const Rational slope(a.t + 1, 2);
    r = check_strict_bound(extremal_function(2, a.t, 1, a.n_max, opt), slope, "bound-2t");
    r.parameters = {{"t", a.t}, {"n_max", a.n_max}, {"slope", slope.to_string()}};
  } else if (c == "bound") {
    require_pair(a.s, a.t);
    need(a.s >= 2 && a.n_max >= 1, "bound needs --s >= 2 and --n-max");
    r = run_bound(a.s, a.t, a.n_max, g);
  } else if (c == "sequence") {
    r = check_sequence_agreement(a.n_max ? a.n_max : 7, limits);
  } else if (c == "fulfillment") {
    r = check_fulfillment_agreement(a.n_max ? a.n_max : 7, {{2, 2}, {2, 3}, {3, 3}}, limits);
  } else if (c == "restriction") {
    r = check_restriction(a.n1_max, a.n2_max, {{2, 2}, {2, 3}, {3, 3}}, limits);
  } else if (c == "regular") {
    r = check_regular(a.n_min ? a.n_min : 1, a.n_max ? a.n_max : 40, a.exhaustive_max, limits);
  } else if (c == "pareto") {
    r = check_pareto(a.n_max ? a.n_max : 8, small_biclique_pairs(), g.threads);
  } else if (c == "structure") {
    auto which = parse_structure_check(a.which);
    need(which.has_value(), "--which must be star, k2t, k33, lifting, component-bound or all");
    r = check_structure_theorems(a.n_min ? a.n_min : 1, a.n_max ? a.n_max : 9, *which, limits);
  } else if (c == "pumping") {
    r = check_pumping(g.seed, a.trials, a.n_max ? a.n_max : 8, small_biclique_pairs(), limits);
  } else if (c == "constructions") {
    r = check_constructions(a.n_max ? a.n_max : 12, limits);
  } else if (c == "all") {
    need(a.small, "only the bundled suite 'all --small' is available");
    r = run_small_suite(g);
  } else {
    throw UsageError("unknown check '" + c + "'");
  }
  write_artifact(resolve_output(g.out, "verify-" + c + ".json"), dump(to_json(r)), out);
  err << r.check << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.cases << " cases)\n";
  for (std::size_t i = 0; i < r.counterexamples.size(); ++i)
    err << "  counterexample " << r.counterexamples[i] << ": " << r.notes[i] << "\n";
  return r.passed ? kOk : kCheckFailed;
}

struct AnalyzeArgs {
  int s = 0, t = 0, n_min = 1, n_max = 0;
  std::string input, alpha, periods;
};

inline int cmd_analyze(const AnalyzeArgs& a, const Global& g, std::ostream& out, std::ostream& err) {
  std::optional<ExtremalSeries> series;
  if (!a.input.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_input(a.input));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError("byte " + std::to_string(e.byte), "JSON syntax error");
    }
    series = series_from_json(j);
  } else {
    require_pair(a.s, a.t);
    if (a.n_max < a.n_min || a.n_min < 1) throw UsageError("need 1 <= --n-min <= --n-max");
    BuildOptions opt;
    opt.threads = g.threads;
    opt.witness_limit = g.witness_max;
    auto full = extremal_function(a.s, a.t, 1, a.n_max, opt);
    for (int n = 1; n < a.n_min; ++n) {
      full.values.erase(n);
      full.witnesses.erase(n);
    }
    full.n_min = a.n_min;
    series = std::move(full);
  }
  std::optional<Rational> alpha = series->alpha;
  if (!a.alpha.empty()) alpha = Rational::parse(a.alpha);
  if (!alpha) throw UsageError("no density constant: give --alpha");
  const auto periods = a.periods.empty() ? std::vector<int>{} : parse_int_list(a.periods);
  const auto rep = analyze_periodicity(*series, *alpha, periods);
  auto j = periodicity_to_json(rep);
  j["constraint"] = series->constraint;
  if (!series->values.empty()) j["range"] = {series->values.begin()->first, series->values.rbegin()->first};
  if (a.t > 0) {
    // Residues keyed by n mod t, reported next to the detected period when
    // the two differ.
    const auto by_t = analyze_periodicity(*series, *alpha, {a.t});
    if (!rep.conclusive || rep.period != a.t) {
      nlohmann::json mt{{"periodic", by_t.conclusive}};
      if (by_t.conclusive) {
        for (const auto& [q, v] : by_t.residues) mt["residues"][std::to_string(q)] = v.to_string();
        mt["onset"] = by_t.onset;
      }
      j["mod_t"] = mt;
    }
    // Repeated summands with s-1 common outside neighbours in the witnesses.
    nlohmann::json found = nlohmann::json::array();
    for (const auto& [n, ws] : series->witnesses)
      for (const auto& w : ws)
        for (const auto& m : find_pumping_components(w, a.s, a.t))
          found.push_back({{"n", n}, {"witness", w.encoding()}, {"summand", m.summand}, {"copies", m.copies},
                           {"regular", m.regular}});
    j["pumping_matches"] = found.size();
    if (!found.empty()) j["pumping_example"] = found.back();
  }
  write_artifact(resolve_output(g.out, "analyze.json"), dump(j), out);
  if (rep.conclusive) {
    err << "period " << rep.period << " from n=" << rep.onset << ":";
    for (const auto& [q, v] : rep.residues) err << " a_" << q << "=" << v.to_string();
    err << (rep.all_negative ? " (all negative)" : " (NOT all negative)") << "\n";
  } else {
    err << "inconclusive: no candidate period is stable over three repetitions\n";
  }
  return kOk;
}

struct ExportArgs {
  std::string input;
  int catalog = 0;
  std::string format = "json";
};

inline int cmd_export(const ExportArgs& a, const Global& g, std::ostream& out, std::ostream& err) {
  if ((a.catalog > 0) == !a.input.empty()) throw UsageError("give either --input or --catalog");
  if (a.format != "json" && a.format != "graph6" && a.format != "dot" && a.format != "encoding")
    throw UsageError("unknown format '" + a.format + "'");
  std::string body;
  std::string name;
  if (a.catalog > 0) {
    if (a.format == "dot") throw UsageError("catalog export supports json, graph6 and encoding");
    const auto cat = enumerate_cotrees(a.catalog, g.limits());
    if (a.format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& c : cat.items) arr.push_back(cotree_to_json(c));
      body = dump(arr);
    } else {
      for (const auto& c : cat.items) body += render_cotree(c, a.format);
    }
    name = "catalog-" + std::to_string(a.catalog);
    err << "catalog n=" << a.catalog << ": " << cat.items.size() << " cographs\n";
  } else {
    const Cotree c = load_cotree(read_input(a.input));
    body = render_cotree(c, a.format);
    name = "cotree";
    err << c.encoding() << ": " << c.vertex_count() << " vertices, " << c.edge_count() << " edges\n";
  }
  const std::string ext = a.format == "json" ? ".json" : a.format == "graph6" ? ".g6" : a.format == "dot" ? ".dot" : ".txt";
  write_artifact(resolve_output(g.out, name + ext), body, out);
  return kOk;
}

// --- entry point ----------------------------------------------------------------------

/// Parses `args` (without the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal K_{s,t}-free cographs: compute, construct, verify, analyze, export", "cographs"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--threads", g.threads, "Worker threads for the dynamic program")->check(CLI::Range(1U, 256U));
  app.add_option("--seed", g.seed, "Seed for randomized property checks");
  app.add_option("--catalog-max", g.catalog_max, "Largest n for exhaustive catalogs")->check(CLI::Range(1, 12));
  app.add_option("--adjacency-max", g.adjacency_max, "Largest n for adjacency expansion")->check(CLI::Range(1, 24));
  app.add_option("--witness-max", g.witness_max, "Witnesses kept per record")->check(CLI::Range(1, 1000));
  app.add_option("-o,--out", g.out, "Output file (default: stdout or $COGRAPH_OUT_DIR)");
  for (auto* opt : app.get_options()) opt->configurable(false);
  app.fallthrough();

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "Extremal values by dynamic programming");
  en->add_option("--s", ea.s);
  en->add_option("--t", ea.t);
  en->add_option("--profile", ea.profile, "Profile text 'p0,p1,...;tail'");
  en->add_option("--n-min", ea.n_min);
  en->add_option("--n-max", ea.n_max)->required();
  en->add_option("--cap", ea.cap, "Key window (default: constrained window)");
  en->add_flag("--exhaustive", ea.exhaustive, "Skip Pareto filtering, keep every witness");
  en->add_option("--format", ea.format, "json | csv | text");
  en->add_option("--snapshot", ea.snapshot, "Also write the registry snapshot here");

  ConstructArgs ca;
  auto* co = app.add_subcommand("construct", "Build a cograph from an explicit family");
  co->add_option("family", ca.family, "regular | star | k2t | k33 | clique-product | pump")->required();
  co->add_option("--n", ca.n);
  co->add_option("--d", ca.d);
  co->add_option("--s", ca.s);
  co->add_option("--t", ca.t);
  co->add_option("--r", ca.r);
  co->add_option("--k", ca.k);
  co->add_option("--input", ca.input, "Cotree file for pump ('-' for stdin)");
  co->add_option("--path", ca.path, "Child indices to the pumped summand, e.g. 1/0");
  co->add_option("--format", ca.format, "json | graph6 | dot | text");

  VerifyArgs va;
  auto* ve = app.add_subcommand("verify", "Run a verification suite; exit 0 iff it passes");
  ve->add_option("check", va.check,
                 "balanced-biclique | dp-vs-oracle | bound-2t | bound | sequence | fulfillment | restriction | "
                 "regular | pareto | structure | pumping | constructions | all")
      ->required();
  ve->add_option("--n", va.n);
  ve->add_option("--n-min", va.n_min);
  ve->add_option("--n-max", va.n_max);
  ve->add_option("--s", va.s);
  ve->add_option("--t", va.t);
  ve->add_option("--n1-max", va.n1_max);
  ve->add_option("--n2-max", va.n2_max);
  ve->add_option("--exhaustive-max", va.exhaustive_max);
  ve->add_option("--trials", va.trials);
  ve->add_option("--which", va.which, "star | k2t | k33 | lifting | component-bound | all");
  ve->add_flag("--small", va.small);

  AnalyzeArgs aa;
  auto* an = app.add_subcommand("analyze", "Periodicity of ex(n) - alpha n");
  an->add_option("--s", aa.s);
  an->add_option("--t", aa.t);
  an->add_option("--n-min", aa.n_min);
  an->add_option("--n-max", aa.n_max);
  an->add_option("--input", aa.input, "Series JSON from 'enumerate --format json'");
  an->add_option("--alpha", aa.alpha, "Density constant as a fraction, e.g. 3/2");
  an->add_option("--periods", aa.periods, "Candidate periods, e.g. 1,2,3");

  ExportArgs xa;
  auto* ex = app.add_subcommand("export", "Convert a cotree or export a catalog");
  ex->add_option("--input", xa.input, "Cotree JSON or encoding ('-' for stdin)");
  ex->add_option("--catalog", xa.catalog, "Export all cographs on this many vertices");
  ex->add_option("--format", xa.format, "json | graph6 | dot | encoding");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    for (auto* sub : app.get_subcommands())
      if (sub->parsed()) err << sub->help();
    return kUsage;
  }

  try {
    if (en->parsed()) return cmd_enumerate(ea, g, out, err);
    if (co->parsed()) return cmd_construct(ca, g, out, err);
    if (ve->parsed()) return cmd_verify(va, g, out, err);
    if (an->parsed()) return cmd_analyze(aa, g, out, err);
    if (ex->parsed()) return cmd_export(xa, g, out, err);
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const InternalInconsistency& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace cograph::cli
