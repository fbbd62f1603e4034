#pragma once

// Independent ground truth at small n. Everything here works on the
// adjacency expansion or on exhaustive catalogs and never calls the
// cotree sequence recursion or the dynamic program.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cograph/adjacency.hpp"
#include "cograph/cotree.hpp"
#include "cograph/errors.hpp"
#include "cograph/profile.hpp"
#include "cograph/report.hpp"

namespace cograph {

/// All cographs on n vertices up to isomorphism, one canonical cotree each,
/// sorted by encoding.
struct CographCatalog {
  int n = 0;
  std::vector<Cotree> items;
};

namespace detail {

// Multisets of at least two "co-sum" cotrees (leaf or product root) whose
// sizes add up to `total`. Parts are chosen in non-increasing (size, index)
// order so every multiset appears once.
inline void sum_multisets(const std::vector<std::vector<Cotree>>& cosum, std::int64_t remaining,
                          std::size_t max_size, std::size_t max_index, std::vector<Cotree>& chosen,
                          std::vector<Cotree>& out) {
  if (remaining == 0) {
    if (chosen.size() >= 2) out.push_back(make_sum(chosen));
    return;
  }
  for (std::size_t size = std::min<std::size_t>(static_cast<std::size_t>(remaining), max_size); size >= 1;
       --size) {
    const auto& bucket = cosum[size];
    std::size_t top = size == max_size ? std::min(max_index, bucket.size() - 1) : bucket.size() - 1;
    for (std::size_t idx = top + 1; idx-- > 0;) {
      chosen.push_back(bucket[idx]);
      sum_multisets(cosum, remaining - static_cast<std::int64_t>(size), size, idx, chosen, out);
      chosen.pop_back();
    }
  }
}

}  // namespace detail

/// Catalogs for 1..n. Sum-rooted cographs are multisets of connected ones;
/// product-rooted cographs are their complements.
inline std::vector<CographCatalog> enumerate_cotrees_upto(int n, const Limits& limits = {}) {
  if (n < 1) throw std::invalid_argument("enumerate_cotrees: n must be positive");
  if (n > limits.catalog_max)
    throw CapacityError("enumerate_cotrees: n = " + std::to_string(n) + " exceeds catalog limit " +
                        std::to_string(limits.catalog_max));
  std::vector<std::vector<Cotree>> cosum(static_cast<std::size_t>(n) + 1);
  std::vector<CographCatalog> out;
  cosum[1] = {make_leaf()};
  out.push_back({1, {make_leaf()}});
  for (int k = 2; k <= n; ++k) {
    std::vector<Cotree> sums, chosen;
    detail::sum_multisets(cosum, k, static_cast<std::size_t>(k - 1), SIZE_MAX, chosen, sums);
    CographCatalog cat{k, {}};
    std::set<std::string> seen;
    for (const auto& s : sums) {
      Cotree p = complement(s);
      cosum[static_cast<std::size_t>(k)].push_back(p);
      if (seen.insert(s.encoding()).second) cat.items.push_back(s);
      if (seen.insert(p.encoding()).second) cat.items.push_back(p);
    }
    std::sort(cosum[static_cast<std::size_t>(k)].begin(), cosum[static_cast<std::size_t>(k)].end());
    std::sort(cat.items.begin(), cat.items.end());
    out.push_back(std::move(cat));
  }
  return out;
}

inline CographCatalog enumerate_cotrees(int n, const Limits& limits = {}) {
  return std::move(enumerate_cotrees_upto(n, limits).back());
}

/// Some s-subset A has at least t common neighbours (necessarily outside A).
inline bool contains_biclique(const AdjacencyGraph& g, int s, int t) {
  if (s < 1 || t < 0) throw std::invalid_argument("contains_biclique: need s >= 1, t >= 0");
  const int n = g.n();
  if (s > n) return false;
  if (s == n) return t == 0;
  // Gosper's hack over s-subsets.
  std::uint64_t subset = (std::uint64_t{1} << s) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (subset < limit) {
    std::uint64_t common = g.all_vertices();
    for (std::uint64_t rest = subset; rest; rest &= rest - 1) common &= g.row(std::countr_zero(rest));
    if (std::popcount(common) >= t) return true;
    const std::uint64_t c = subset & (~subset + 1);
    const std::uint64_t r = subset + c;
    subset = (((r ^ subset) >> 2) / c) | r;
  }
  return false;
}

/// S_0..S_cap by exhaustive search: S_s is the largest common neighbourhood
/// of an s-subset, -inf when n < s. The empty subset sees all n vertices.
inline BicliqueSequence biclique_sequence_bruteforce(const AdjacencyGraph& g, std::size_t cap,
                                                     const Limits& limits = {}) {
  const int n = g.n();
  if (n > limits.adjacency_max)
    throw CapacityError("biclique_sequence_bruteforce: n exceeds adjacency limit");
  std::vector<ExtInt> best(cap + 1, kNegInf);
  std::vector<std::uint64_t> common(std::size_t{1} << n);
  common[0] = g.all_vertices();
  for (std::uint64_t mask = 0; mask < common.size(); ++mask) {
    if (mask) {
      const int low = std::countr_zero(mask);
      common[mask] = common[mask & (mask - 1)] & g.row(low);
    }
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= cap) best[size] = std::max(best[size], ExtInt(std::popcount(common[mask])));
  }
  return BicliqueSequence(std::move(best));
}

struct BruteForceExtremal {
  std::int64_t edges = 0;
  std::vector<Cotree> witnesses;  // every extremal cograph, canonical order
};

/// Maximum edge count over all n-vertex cographs fulfilling p, with all
/// maximizers. Empty when no cograph on n vertices fulfills p.
inline std::optional<BruteForceExtremal> extremal_bruteforce(const CographCatalog& catalog,
                                                             const BicliqueProfile& p,
                                                             const Limits& limits = {}) {
  std::optional<BruteForceExtremal> best;
  for (const auto& g : catalog.items) {
    const AdjacencyGraph a = to_adjacency(g, limits.adjacency_max);
    if (!fulfills(biclique_sequence_bruteforce(a, static_cast<std::size_t>(a.n()), limits), p)) continue;
    const std::int64_t e = a.edge_count();
    if (!best || e > best->edges) best = BruteForceExtremal{e, {g}};
    else if (e == best->edges) best->witnesses.push_back(g);
  }
  return best;
}

inline std::optional<BruteForceExtremal> extremal_bruteforce(int n, const BicliqueProfile& p,
                                                             const Limits& limits = {}) {
  return extremal_bruteforce(enumerate_cotrees(n, limits), p, limits);
}

/// Every n-vertex cograph or its complement contains K_{t,t} with
/// t = floor(n/6 + 1).
inline CheckReport check_balanced_biclique(int n, const Limits& limits = {}) {
  CheckReport r;
  r.check = "balanced-biclique";
  const int t = n / 6 + 1;
  r.parameters = {{"n", n}, {"t", t}};
  for (const auto& g : enumerate_cotrees(n, limits).items) {
    ++r.cases;
    const AdjacencyGraph a = to_adjacency(g, limits.adjacency_max);
    if (!contains_biclique(a, t, t) && !contains_biclique(a.complement(), t, t))
      r.fail(g.encoding(), "neither G nor its complement contains K_{" + std::to_string(t) + "," +
                               std::to_string(t) + "}");
  }
  return r;
}

// --- structural predicates on concrete cographs ----------------------------

/// Connected components as cotrees.
inline std::vector<Cotree> components(const Cotree& g) {
  if (g.kind() == NodeKind::sum) return {g.children().begin(), g.children().end()};
  return {g};
}

/// Number of vertices adjacent to all others.
inline int universal_vertex_count(const Cotree& g) {
  if (g.is_leaf()) return 1;
  if (g.kind() != NodeKind::product) return 0;
  return static_cast<int>(std::count_if(g.children().begin(), g.children().end(),
                                        [](const Cotree& c) { return c.is_leaf(); }));
}

inline bool is_regular(const Cotree& g, std::int64_t d) {
  auto deg = leaf_degrees(g);
  return std::all_of(deg.begin(), deg.end(), [d](std::int64_t x) { return x == d; });
}

inline bool is_clique(const Cotree& g) {
  return g.edge_count() * 2 == g.vertex_count() * (g.vertex_count() - 1);
}

/// G = K_2 x H with H a disjoint union of cliques (H may be empty).
inline bool is_edge_times_sum_of_cliques(const Cotree& g) {
  if (g.kind() != NodeKind::product || universal_vertex_count(g) < 2) return false;
  std::vector<Cotree> rest;
  int leaves_skipped = 0;
  for (const auto& c : g.children()) {
    if (c.is_leaf() && leaves_skipped < 2) {
      ++leaves_skipped;
      continue;
    }
    rest.push_back(c);
  }
  if (rest.empty()) return true;
  const Cotree h = make_product(rest);
  for (const auto& comp : components(h))
    if (!is_clique(comp)) return false;
  return true;
}

/// Can the product children of a component be split into two groups that
/// both have at least `s` vertices?
inline bool splits_into_large_factors(const Cotree& component, std::int64_t s) {
  if (component.kind() != NodeKind::product) return false;
  const std::int64_t n = component.vertex_count();
  std::vector<char> reach(static_cast<std::size_t>(n) + 1, 0);
  reach[0] = 1;
  for (const auto& c : component.children())
    for (std::int64_t x = n; x >= c.vertex_count(); --x)
      if (reach[static_cast<std::size_t>(x - c.vertex_count())]) reach[static_cast<std::size_t>(x)] = 1;
  for (std::int64_t a = s; a <= n - s; ++a)
    if (reach[static_cast<std::size_t>(a)]) return true;
  return false;
}

namespace detail {

// Sizes a in [1, limit] such that the product children of `component` split
// into groups of a and |component| - a >= a vertices.
inline std::vector<std::int64_t> factor_sizes(const Cotree& component, std::int64_t limit) {
  std::vector<std::int64_t> out;
  if (component.kind() != NodeKind::product) return out;
  const std::int64_t n = component.vertex_count();
  std::vector<char> reach(static_cast<std::size_t>(n) + 1, 0);
  reach[0] = 1;
  for (const auto& c : component.children())
    for (std::int64_t x = n; x >= c.vertex_count(); --x)
      if (reach[static_cast<std::size_t>(x - c.vertex_count())]) reach[static_cast<std::size_t>(x)] = 1;
  for (std::int64_t a = 1; a <= limit && 2 * a <= n; ++a)
    if (reach[static_cast<std::size_t>(a)]) out.push_back(a);
  return out;
}

}  // namespace detail

/// Decomposition shape of extremal cographs for a profile with start index
/// s and P_s = t - 1: every component is G1 x G2 with |G2| >= |G1| = sigma
/// in [1, t-1], and sigma can be chosen so that each value j <= s-1 is used
/// by at most one component. Single-vertex components admit no split; they
/// are reported as remarks, not failures.
inline CheckReport check_lifting(const Cotree& g, const BicliqueProfile& p) {
  CheckReport r;
  r.check = "lifting";
  const std::size_t s = start_index(p);
  const ExtInt ps = p[s];
  if (!ps.is_finite()) {
    r.remarks.push_back("start value not finite; nothing to check");
    return r;
  }
  const std::int64_t t = ps.value() + 1;
  const auto small = static_cast<std::int64_t>(s) - 1;
  // Components whose every admissible sigma lies in [1, s-1] must get
  // pairwise distinct values: a bipartite matching.
  std::vector<std::vector<std::int64_t>> constrained;
  for (const auto& c : components(g)) {
    ++r.cases;
    if (c.is_leaf()) {
      r.remarks.push_back("single-vertex component skipped");
      continue;
    }
    auto sizes = detail::factor_sizes(c, t - 1);
    if (sizes.empty()) {
      r.fail(g.encoding(), "component " + c.encoding() + " has no factor of size < t = " + std::to_string(t));
      continue;
    }
    if (sizes.back() > small) continue;
    constrained.push_back(std::move(sizes));
  }
  std::vector<int> owner(static_cast<std::size_t>(std::max<std::int64_t>(small, 0)) + 1, -1);
  auto augment = [&](auto&& self, int i, std::vector<char>& seen) -> bool {
    for (std::int64_t j : constrained[static_cast<std::size_t>(i)]) {
      auto& o = owner[static_cast<std::size_t>(j)];
      if (seen[static_cast<std::size_t>(j)]) continue;
      seen[static_cast<std::size_t>(j)] = 1;
      if (o < 0 || self(self, o, seen)) {
        o = i;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < static_cast<int>(constrained.size()); ++i) {
    std::vector<char> seen(owner.size(), 0);
    if (!augment(augment, i, seen))
      r.fail(g.encoding(), "no sigma assignment with fibers of size <= 1 below s = " + std::to_string(s));
  }
  return r;
}

/// A connected component that is a product of two factors with at least s
/// vertices each has at most 2 P_s vertices.
inline CheckReport check_component_size_bound(const Cotree& g, const BicliqueProfile& p) {
  CheckReport r;
  r.check = "component-size-bound";
  const std::size_t s = start_index(p);
  const ExtInt ps = p[s];
  for (const auto& c : components(g)) {
    ++r.cases;
    if (!splits_into_large_factors(c, static_cast<std::int64_t>(s))) continue;
    if (ps.is_finite() && c.vertex_count() > 2 * ps.value())
      r.fail(g.encoding(), "component of size " + std::to_string(c.vertex_count()) + " exceeds 2*P_s = " +
                               std::to_string(2 * ps.value()));
  }
  return r;
}

// --- structural spot checks over brute-force extremal sets ------------------

enum class StructureCheck { star, k2t, k33, lifting, component_bound, all };

inline std::optional<StructureCheck> parse_structure_check(const std::string& s) {
  if (s == "star") return StructureCheck::star;
  if (s == "k2t") return StructureCheck::k2t;
  if (s == "k33") return StructureCheck::k33;
  if (s == "lifting") return StructureCheck::lifting;
  if (s == "component-bound") return StructureCheck::component_bound;
  if (s == "all") return StructureCheck::all;
  return std::nullopt;
}

namespace detail {

// Forbidden-star shape: clique below t; (t-1)-regular whenever n is even or
// t-1 is even with 2t != n+1; otherwise at most one component is not
// (t-1)-regular and it has at most 2t-3 vertices.
inline void star_shape(const Cotree& g, int t, int n, CheckReport& r) {
  ++r.cases;
  if (n < t) {
    if (!is_clique(g)) r.fail(g.encoding(), "n < t but not a clique");
    return;
  }
  const bool must_be_regular = n % 2 == 0 || ((t - 1) % 2 == 0 && 2 * t != n + 1);
  if (is_regular(g, t - 1)) return;
  if (must_be_regular) {
    r.fail(g.encoding(), "expected (t-1)-regular at n = " + std::to_string(n));
    return;
  }
  int irregular = 0;
  for (const auto& c : components(g)) {
    if (is_regular(c, t - 1)) continue;
    ++irregular;
    if (c.vertex_count() > 2 * t - 3)
      r.fail(g.encoding(), "remainder component larger than 2t-3");
  }
  if (irregular > 1) r.fail(g.encoding(), "more than one non-regular component");
}

}  // namespace detail

/// Spot checks of the structural claims on every brute-force extremal
/// witness for n in [n_min, n_max]:
///  star:  (1,t) shape for t in {2,3};
///  k2t:   (2,t) witnesses for t in {2,3} have a universal vertex; when the
///         rest is not (1,t)-extremal this is noted as a remark;
///  k33:   every (3,3) witness is a product with a two-vertex factor and
///         some witness is K_2 x (sum of cliques);
///  lifting / component_bound: decomposition and size bounds for the
///         forbidden profiles of (1,2),(1,3),(2,2),(2,3),(3,3).
inline CheckReport check_structure_theorems(int n_min, int n_max, StructureCheck which,
                                            const Limits& limits = {}) {
  CheckReport report;
  report.check = "structure";
  report.parameters = {{"n_min", n_min}, {"n_max", n_max}};
  const auto catalogs = enumerate_cotrees_upto(n_max, limits);
  auto extremal = [&](int n, int s, int t) {
    return extremal_bruteforce(catalogs[static_cast<std::size_t>(n - 1)], forbidden_biclique_profile(s, t),
                               limits);
  };
  auto wants = [&](StructureCheck c) { return which == StructureCheck::all || which == c; };

  if (wants(StructureCheck::star)) {
    CheckReport r;
    r.check = "star";
    for (int t : {2, 3})
      for (int n = n_min; n <= n_max; ++n) {
        const auto ex = extremal(n, 1, t).value();
        for (const auto& g : ex.witnesses) detail::star_shape(g, t, n, r);
      }
    report.absorb(r);
  }
  if (wants(StructureCheck::k2t)) {
    CheckReport r;
    r.check = "k2t";
    for (int t : {2, 3})
      for (int n = std::max(n_min, 2); n <= n_max; ++n) {
        const auto ex1 = extremal(n - 1, 1, t).value().edges;
        const auto ex2 = extremal(n, 2, t).value();
        for (const auto& g : ex2.witnesses) {
          ++r.cases;
          if (universal_vertex_count(g) < 1) r.fail(g.encoding(), "no universal vertex");
          else if (g.edge_count() - (n - 1) != ex1)
            r.remarks.push_back(g.encoding() + ": remainder has " + std::to_string(g.edge_count() - (n - 1)) +
                                " edges, (1," + std::to_string(t) + ")-optimum is " + std::to_string(ex1));
        }
      }
    report.absorb(r);
  }
  if (wants(StructureCheck::k33)) {
    CheckReport r;
    r.check = "k33";
    for (int n = std::max(n_min, 2); n <= n_max; ++n) {
      const auto ex = extremal(n, 3, 3);
      bool shaped = false;
      for (const auto& g : ex->witnesses) {
        ++r.cases;
        bool two_vertex_factor = false;
        if (g.kind() == NodeKind::product) {
          int leaves = universal_vertex_count(g);
          for (const auto& c : g.children())
            if (c.vertex_count() == 2) two_vertex_factor = true;
          if (leaves >= 2) two_vertex_factor = true;
        }
        if (!two_vertex_factor) r.fail(g.encoding(), "no two-vertex product factor");
        if (is_edge_times_sum_of_cliques(g)) shaped = true;
      }
      if (!shaped) r.fail(std::to_string(n), "no witness of shape K_2 x (sum of cliques)");
    }
    report.absorb(r);
  }
  if (wants(StructureCheck::lifting) || wants(StructureCheck::component_bound)) {
    const std::vector<std::pair<int, int>> pairs = {{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
    for (auto [s, t] : pairs)
      for (int n = n_min; n <= n_max; ++n) {
        const auto p = forbidden_biclique_profile(s, t);
        const auto ex = extremal(n, s, t).value();
        for (const auto& g : ex.witnesses) {
          if (wants(StructureCheck::lifting)) {
            auto sub = check_lifting(g, p);
            sub.remarks.clear();
            report.absorb(sub);
          }
          if (wants(StructureCheck::component_bound)) report.absorb(check_component_size_bound(g, p));
        }
      }
  }
  return report;
}

// --- completeness cross-check: all unlabeled graphs by brute force ----------

namespace detail {

inline bool isomorphic(const AdjacencyGraph& a, const AdjacencyGraph& b) {
  const int n = a.n();
  if (n != b.n() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::uint64_t used = 0;
  auto extend = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if ((used >> w) & 1U || a.degree(v) != b.degree(w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = a.has_edge(u, v) == b.has_edge(map[static_cast<std::size_t>(u)], w);
      if (!ok) continue;
      map[static_cast<std::size_t>(v)] = w;
      used |= 1ULL << w;
      if (self(self, v + 1)) return true;
      used &= ~(1ULL << w);
    }
    return false;
  };
  return extend(extend, 0);
}

inline std::vector<std::int64_t> invariant(const AdjacencyGraph& g) {
  std::vector<std::int64_t> inv;
  for (int v = 0; v < g.n(); ++v) {
    std::int64_t nbr = 0;
    for (std::uint64_t r = g.row(v); r; r &= r - 1) nbr += std::int64_t{1} << (4 * g.degree(std::countr_zero(r)));
    inv.push_back(g.degree(v) * (std::int64_t{1} << 60) / 64 + nbr % (std::int64_t{1} << 50));
  }
  std::sort(inv.begin(), inv.end());
  return inv;
}

}  // namespace detail

/// Representatives of every induced-P_4-free graph on n vertices, found by
/// filtering all labeled graphs and rejecting isomorphic copies. Exponential
/// in n^2; intended for n <= 7.
inline std::vector<AdjacencyGraph> unlabeled_cographs_bruteforce(int n) {
  if (n < 1 || n > 7) throw CapacityError("unlabeled_cographs_bruteforce: supported for 1 <= n <= 7");
  std::vector<std::pair<int, int>> slots;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
  std::map<std::vector<std::int64_t>, std::vector<AdjacencyGraph>> buckets;
  std::vector<AdjacencyGraph> reps;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t code = 0; code < total; ++code) {
    AdjacencyGraph g(n);
    for (std::size_t k = 0; k < slots.size(); ++k)
      if ((code >> k) & 1U) g.add_edge(slots[k].first, slots[k].second);
    if (!is_induced_p4_free(g)) continue;
    auto& bucket = buckets[detail::invariant(g)];
    if (std::none_of(bucket.begin(), bucket.end(),
                     [&](const AdjacencyGraph& h) { return detail::isomorphic(g, h); })) {
      bucket.push_back(g);
      reps.push_back(g);
    }
  }
  return reps;
}

}  // namespace cograph
