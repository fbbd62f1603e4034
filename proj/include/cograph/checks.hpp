#pragma once

// Verification suites comparing independent routes: dynamic program against
// the brute-force oracle, cotree recursion against subset search, and
// constructions against both.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cograph/constructions.hpp"
#include "cograph/enumerator.hpp"
#include "cograph/oracle.hpp"
#include "cograph/profile.hpp"
#include "cograph/report.hpp"

namespace cograph {

using BicliquePair = std::pair<int, int>;

inline const std::vector<BicliquePair>& small_biclique_pairs() {
  static const std::vector<BicliquePair> pairs = {{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
  return pairs;
}

inline std::string pair_name(BicliquePair p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

/// Random cograph on n vertices: split into 2..4 random parts, random op.
template <class Rng>
Cotree random_cotree(std::int64_t n, Rng& rng) {
  if (n == 1) return make_leaf();
  std::uniform_int_distribution<std::int64_t> parts_dist(2, std::min<std::int64_t>(n, 4));
  const auto parts = parts_dist(rng);
  std::vector<std::int64_t> sizes(static_cast<std::size_t>(parts), 1);
  std::uniform_int_distribution<std::size_t> pick(0, sizes.size() - 1);
  for (std::int64_t extra = n - parts; extra > 0; --extra) ++sizes[pick(rng)];
  std::vector<Cotree> kids;
  for (auto sz : sizes) kids.push_back(random_cotree(sz, rng));
  return std::bernoulli_distribution(0.5)(rng) ? make_sum(std::move(kids)) : make_product(std::move(kids));
}

/// DP values equal brute-force values for every n <= n_max, and every DP
/// witness is among the brute-force maximizers.
inline CheckReport check_dp_vs_oracle(int s, int t, int n_max, const Limits& limits = {}, unsigned threads = 1) {
  CheckReport r;
  r.check = "dp-vs-oracle";
  r.parameters = {{"s", s}, {"t", t}, {"n_max", n_max}};
  BuildOptions opt;
  opt.threads = threads;
  const auto series = extremal_function(s, t, 1, n_max, opt);
  const auto catalogs = enumerate_cotrees_upto(n_max, limits);
  const auto p = biclique_free_profile(s, t);
  for (int n = 1; n <= n_max; ++n) {
    ++r.cases;
    const auto truth = extremal_bruteforce(catalogs[static_cast<std::size_t>(n - 1)], p, limits);
    const auto it = series.values.find(n);
    if (!truth || it == series.values.end()) {
      if (truth || it != series.values.end()) r.fail(std::to_string(n), "one side has no value");
      continue;
    }
    if (it->second != truth->edges) {
      r.fail(std::to_string(n), "DP " + std::to_string(it->second) + " vs brute force " +
                                    std::to_string(truth->edges));
      continue;
    }
    for (const auto& w : series.witnesses.at(n))
      if (!std::binary_search(truth->witnesses.begin(), truth->witnesses.end(), w))
        r.fail(w.encoding(), "DP witness is not a brute-force maximizer");
  }
  return r;
}

/// Cotree recursion against subset search, every cograph with n <= n_max, cap = n.
inline CheckReport check_sequence_agreement(int n_max, const Limits& limits = {}) {
  CheckReport r;
  r.check = "sequence";
  r.parameters = {{"n_max", n_max}};
  for (const auto& cat : enumerate_cotrees_upto(n_max, limits))
    for (const auto& g : cat.items) {
      ++r.cases;
      const auto fast = biclique_sequence(g);
      const auto slow = biclique_sequence_bruteforce(to_adjacency(g, limits.adjacency_max),
                                                     static_cast<std::size_t>(g.vertex_count()), limits);
      if (!(fast == slow)) r.fail(g.encoding(), "recursion " + fast.to_string() + " vs search " + slow.to_string());
    }
  return r;
}

/// fulfills(S(G), forbidden(s,t)) iff G has no K_{s,t}.
inline CheckReport check_fulfillment_agreement(int n_max, const std::vector<BicliquePair>& pairs,
                                               const Limits& limits = {}) {
  CheckReport r;
  r.check = "fulfillment";
  r.parameters = {{"n_max", n_max}};
  for (const auto& cat : enumerate_cotrees_upto(n_max, limits))
    for (const auto& g : cat.items)
      for (auto [s, t] : pairs) {
        ++r.cases;
        const bool by_profile = fulfills(biclique_sequence(g), forbidden_biclique_profile(s, t));
        const bool by_search = !contains_biclique(to_adjacency(g, limits.adjacency_max), s, t);
        if (by_profile != by_search) r.fail(g.encoding(), "disagreement for " + pair_name({s, t}));
      }
  return r;
}

/// For G1 fulfilling p: G1 x G2 fulfills p iff G2 fulfills the restriction
/// of p by S(G1). For G1 not fulfilling p the product cannot fulfill it.
/// Product fulfillment is decided by subset search on the expansion.
inline CheckReport check_restriction(int n1_max, int n2_max, const std::vector<BicliquePair>& pairs,
                                     const Limits& limits = {}) {
  CheckReport r;
  r.check = "restriction";
  r.parameters = {{"n1_max", n1_max}, {"n2_max", n2_max}};
  const auto left = enumerate_cotrees_upto(n1_max, limits);
  const auto right = enumerate_cotrees_upto(n2_max, limits);
  for (auto [s, t] : pairs) {
    const auto p = forbidden_biclique_profile(s, t);
    for (const auto& c1 : left)
      for (const auto& g1 : c1.items) {
        const auto seq1 = biclique_sequence(g1);
        const bool g1_ok = fulfills(seq1, p);
        std::optional<BicliqueProfile> restricted;
        if (g1_ok) restricted = restrict_profile(p, seq1);
        for (const auto& c2 : right)
          for (const auto& g2 : c2.items) {
            ++r.cases;
            const Cotree prod = make_product({g1, g2});
            const auto a = to_adjacency(prod, limits.adjacency_max);
            const bool product_ok =
                fulfills(biclique_sequence_bruteforce(a, static_cast<std::size_t>(a.n()), limits), p);
            const bool predicted = g1_ok && fulfills(biclique_sequence(g2), *restricted);
            if (product_ok != predicted)
              r.fail(prod.encoding(), pair_name({s, t}) + ": product " + (product_ok ? "fulfills" : "violates") +
                                          " but restriction predicts the opposite");
          }
      }
  }
  return r;
}

/// In one of the two excluded families: n, d odd, or n odd with 2d = n-1.
inline bool regular_excluded_family(std::int64_t n, std::int64_t d) {
  return (n % 2 == 1 && d % 2 == 1) || (n % 2 == 1 && d % 2 == 0 && 2 * d == n - 1);
}

/// regular_cograph returns a verified d-regular cograph exactly outside the
/// excluded families, for n in [n_min, n_max]; for n <= exhaustive_max the
/// answer also matches a search over all n-vertex cographs.
inline CheckReport check_regular(int n_min, int n_max, int exhaustive_max, const Limits& limits = {}) {
  CheckReport r;
  r.check = "regular";
  r.parameters = {{"n_min", n_min}, {"n_max", n_max}, {"exhaustive_max", exhaustive_max}};
  const auto catalogs = exhaustive_max >= 1 ? enumerate_cotrees_upto(exhaustive_max, limits)
                                            : std::vector<CographCatalog>{};
  for (std::int64_t n = n_min; n <= n_max; ++n)
    for (std::int64_t d = 0; d < n; ++d) {
      ++r.cases;
      const auto label = "(" + std::to_string(n) + "," + std::to_string(d) + ")";
      const auto res = regular_cograph(n, d);
      if (res.graph.has_value() == regular_excluded_family(n, d))
        r.fail(res.graph ? res.graph->encoding() : label,
               label + (res.graph ? ": graph returned inside an excluded family" : ": infeasible outside the excluded families"));
      if (res.graph) {
        const auto& g = *res.graph;
        if (g.vertex_count() != n || !is_regular(g, d)) r.fail(g.encoding(), label + ": not d-regular on n vertices");
        if (n <= limits.adjacency_max) {
          const auto a = to_adjacency(g, limits.adjacency_max);
          bool deg_ok = true;
          for (int v = 0; v < a.n(); ++v) deg_ok = deg_ok && a.degree(v) == d;
          if (!deg_ok || !is_induced_p4_free(a)) r.fail(g.encoding(), label + ": expansion check failed");
        }
      }
      if (n <= exhaustive_max) {
        const auto& items = catalogs[static_cast<std::size_t>(n - 1)].items;
        const bool exists = std::any_of(items.begin(), items.end(), [&](const Cotree& g) { return is_regular(g, d); });
        if (exists != res.graph.has_value())
          r.fail(label, label + ": exhaustive search says " + (exists ? "feasible" : "infeasible"));
      }
    }
  return r;
}

/// Filtered and exhaustive dynamic programs give the same extremal values.
inline CheckReport check_pareto(int n_max, const std::vector<BicliquePair>& pairs, unsigned threads = 1) {
  CheckReport r;
  r.check = "pareto";
  r.parameters = {{"n_max", n_max}};
  for (auto [s, t] : pairs) {
    const auto p = biclique_free_profile(s, t);
    BuildOptions filtered = options_for(p, n_max);
    filtered.threads = threads;
    BuildOptions full = filtered;
    full.exhaustive = true;
    const auto a = series_from_registry(build_registry(filtered), p, 1, n_max);
    const auto b = series_from_registry(build_registry(full), p, 1, n_max);
    for (int n = 1; n <= n_max; ++n) {
      ++r.cases;
      if (a.values.count(n) != b.values.count(n)) {
        r.fail(std::to_string(n), pair_name({s, t}) + ": only one mode has a value");
        continue;
      }
      if (a.values.count(n) && a.values.at(n) != b.values.at(n))
        r.fail(std::to_string(n), pair_name({s, t}) + ": filtered " + std::to_string(a.values.at(n)) +
                                      " vs exhaustive " + std::to_string(b.values.at(n)));
    }
  }
  return r;
}

/// ex(n) < alpha n for every n in [1, n_max], exact arithmetic.
inline CheckReport check_strict_bound(const ExtremalSeries& series, const Rational& bound, const std::string& name) {
  CheckReport r;
  r.check = name;
  r.parameters = {{"constraint", series.constraint}, {"slope", bound.to_string()}};
  for (const auto& [n, ex] : series.values) {
    ++r.cases;
    if (!(Rational(ex) < bound * Rational(n)))
      r.fail(std::to_string(n), "ex = " + std::to_string(ex) + " not below " + (bound * Rational(n)).to_string());
  }
  return r;
}

/// ex(n) is nondecreasing in n.
inline CheckReport check_monotone(const ExtremalSeries& series) {
  CheckReport r;
  r.check = "monotone";
  r.parameters = {{"constraint", series.constraint}};
  for (auto it = series.values.begin(); it != series.values.end(); ++it) {
    auto next = std::next(it);
    if (next == series.values.end()) break;
    ++r.cases;
    if (next->first == it->first + 1 && next->second < it->second)
      r.fail(std::to_string(next->first), "ex decreases");
  }
  return r;
}

/// Pumping a summand with fewer than s common outside neighbours keeps a
/// K_{s,t}-free cograph K_{s,t}-free, and the vertex and edge counts follow
/// the pumping formula. Random cores of 2..max_n vertices.
inline CheckReport check_pumping(std::uint64_t seed, int trials, int max_n, const std::vector<BicliquePair>& pairs,
                                 const Limits& limits = {}) {
  CheckReport r;
  r.check = "pumping";
  r.parameters = {{"seed", seed}, {"trials", trials}, {"max_n", max_n}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size_dist(2, max_n);
  std::uniform_int_distribution<int> k_dist(1, 3);
  for (int trial = 0; trial < trials; ++trial) {
    const Cotree g = random_cotree(size_dist(rng), rng);
    // All summand paths with their outside neighbourhood sizes.
    std::vector<ChildPath> paths;
    ChildPath path;
    auto walk = [&](auto&& self, const Cotree& node) -> void {
      for (std::size_t i = 0; i < node.children().size(); ++i) {
        path.push_back(i);
        if (node.kind() == NodeKind::sum) paths.push_back(path);
        self(self, node.children()[i]);
        path.pop_back();
      }
    };
    walk(walk, g);
    for (const auto& at : paths) {
      const auto k = k_dist(rng);
      const Cotree h = detail::resolve_summand(g, at).target;
      const Cotree pumped = pump(g, at, k);
      ++r.cases;
      if (pumped.vertex_count() != g.vertex_count() + k * h.vertex_count() ||
          pumped.edge_count() != pumped_edge_count(g, at, k))
        r.fail(g.encoding(), "pumping counts disagree with the formula");
      if (pumped.vertex_count() <= limits.adjacency_max &&
          to_adjacency(pumped, limits.adjacency_max).edge_count() != pumped.edge_count())
        r.fail(pumped.encoding(), "expansion edge count differs");
      const auto w = outside_neighborhood_size(g, at);
      for (auto [s, t] : pairs) {
        if (w >= s) continue;
        const auto p = forbidden_biclique_profile(s, t);
        if (fulfills(biclique_sequence(g), p) && !fulfills(biclique_sequence(pumped), p))
          r.fail(g.encoding(), "pumping created a forbidden " + pair_name({s, t}));
      }
    }
  }
  return r;
}

/// Constructions equal the DP optimum and fulfill their profile.
inline CheckReport check_constructions(int n_max, const Limits& limits = {}) {
  CheckReport r;
  r.check = "constructions";
  r.parameters = {{"n_max", n_max}};
  auto compare = [&](const Cotree& g, const ExtremalSeries& series, int n, const std::string& what) {
    ++r.cases;
    if (g.vertex_count() != n) r.fail(g.encoding(), what + ": wrong vertex count");
    if (!fulfills(biclique_sequence(g), series.profile)) r.fail(g.encoding(), what + ": violates its profile");
    if (g.edge_count() != series.values.at(n))
      r.fail(g.encoding(), what + ": " + std::to_string(g.edge_count()) + " edges, optimum " +
                               std::to_string(series.values.at(n)));
  };
  for (int t : {2, 3}) {
    const auto star = extremal_function(1, t, 1, n_max);
    const auto k2t = extremal_function(2, t, 1, n_max);
    for (int n = 1; n <= n_max; ++n) {
      compare(star_extremal(t, n, limits), star, n, "star t=" + std::to_string(t));
      if (n >= 2) compare(k2t_extremal(t, n), k2t, n, "k2t t=" + std::to_string(t));
    }
  }
  const auto k33 = extremal_function(3, 3, 1, n_max);
  for (int n = 2; n <= n_max; ++n) compare(k33_extremal(n), k33, n, "k33");
  return r;
}

}  // namespace cograph
