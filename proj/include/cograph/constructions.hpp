#pragma once

// Explicit families of extremal cographs and the pumping transformation.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cograph/cotree.hpp"
#include "cograph/errors.hpp"
#include "cograph/oracle.hpp"

namespace cograph {

/// Child indices from the root down to a summand of some sum node.
using ChildPath = std::vector<std::size_t>;

namespace detail {

// Rebuild g with the node at path[depth..] replaced by `edit(node)`.
template <class Edit>
Cotree rebuild_along(const Cotree& g, std::span<const std::size_t> path, Edit&& edit) {
  if (path.empty()) return edit(g);
  if (path.front() >= g.children().size())
    throw std::invalid_argument("pump: path index " + std::to_string(path.front()) + " out of range");
  std::vector<Cotree> kids(g.children().begin(), g.children().end());
  kids[path.front()] = rebuild_along(kids[path.front()], path.subspan(1), edit);
  return Cotree::combine(g.kind(), std::move(kids));
}

struct Resolved {
  Cotree parent;
  Cotree target;
  std::int64_t outside = 0;  // vertices adjacent to every vertex of target
};

inline Resolved resolve_summand(const Cotree& g, const ChildPath& at) {
  if (at.empty()) throw std::invalid_argument("pump: path must name a child of a sum node");
  Cotree node = g;
  std::int64_t outside = 0;
  for (std::size_t depth = 0; depth < at.size(); ++depth) {
    if (at[depth] >= node.children().size())
      throw std::invalid_argument("pump: path index " + std::to_string(at[depth]) + " out of range at depth " +
                                  std::to_string(depth));
    Cotree child = node.children()[at[depth]];
    if (node.kind() == NodeKind::product) outside += node.vertex_count() - child.vertex_count();
    if (depth + 1 == at.size()) {
      if (node.kind() != NodeKind::sum) throw std::invalid_argument("pump: path does not end at a sum child");
      return {node, child, outside};
    }
    node = child;
  }
  throw std::logic_error("unreachable");
}

}  // namespace detail

/// Number of vertices outside the designated summand that see all of it.
inline std::int64_t outside_neighborhood_size(const Cotree& g, const ChildPath& at) {
  return detail::resolve_summand(g, at).outside;
}

/// Add k copies of the summand at `at` to its sum node. Every copy gets the
/// outside neighbourhood of the original.
inline Cotree pump(const Cotree& g, const ChildPath& at, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("pump: k must be >= 0");
  const auto r = detail::resolve_summand(g, at);
  if (k == 0) return g;
  ChildPath to_parent(at.begin(), at.end() - 1);
  return detail::rebuild_along(g, to_parent, [&](const Cotree& sum) {
    std::vector<Cotree> kids(sum.children().begin(), sum.children().end());
    kids.insert(kids.end(), static_cast<std::size_t>(k), r.target);
    return make_sum(std::move(kids));
  });
}

/// Predicted edge count of pump(g, at, k).
inline std::int64_t pumped_edge_count(const Cotree& g, const ChildPath& at, std::int64_t k) {
  const auto r = detail::resolve_summand(g, at);
  return g.edge_count() + k * (r.target.edge_count() + r.target.vertex_count() * r.outside);
}

/// Pump an explicit vertex subset (DFS leaf ids). The subset must have one
/// common neighbourhood outside itself in the expansion and coincide with a
/// summand of some sum node; otherwise invalid_argument.
inline Cotree pump_subset(const Cotree& g, std::span<const int> leaves, std::int64_t k,
                          const Limits& limits = {}) {
  if (leaves.empty()) throw std::invalid_argument("pump_subset: empty subset");
  const AdjacencyGraph a = to_adjacency(g, limits.adjacency_max);
  std::uint64_t x = 0;
  for (int id : leaves) {
    if (id < 0 || id >= a.n()) throw std::invalid_argument("pump_subset: leaf id out of range");
    x |= 1ULL << id;
  }
  const std::uint64_t outside = a.row(leaves.front()) & ~x;
  for (int id : leaves)
    if ((a.row(id) & ~x) != outside)
      throw std::invalid_argument("pump_subset: vertices differ in their outside neighbourhood");
  // Leaves of a subtree form a contiguous DFS range.
  const int lo = std::countr_zero(x);
  const int count = std::popcount(x);
  if ((x >> lo) != (count == 64 ? ~0ULL : (1ULL << count) - 1))
    throw std::invalid_argument("pump_subset: subset is not a summand of the cotree");

  ChildPath path;
  auto find = [&](auto&& self, const Cotree& node, std::int64_t first) -> bool {
    std::int64_t start = first;
    for (std::size_t i = 0; i < node.children().size(); ++i) {
      const Cotree& c = node.children()[i];
      const std::int64_t end = start + c.vertex_count();
      path.push_back(i);
      if (node.kind() == NodeKind::sum && start == lo && c.vertex_count() == count) return true;
      if (lo >= start && lo < end && self(self, c, start)) return true;
      path.pop_back();
      start = end;
    }
    return false;
  };
  if (!find(find, g, 0)) throw std::invalid_argument("pump_subset: subset is not a summand of the cotree");
  return pump(g, path, k);
}

// --- regular cographs ------------------------------------------------------

struct RegularResult {
  std::optional<Cotree> graph;
  std::string reason;  // why no graph exists, empty otherwise
};

namespace detail {

inline Cotree multipartite_pairs(std::int64_t d) {
  return make_product(std::vector<Cotree>(static_cast<std::size_t>(d / 2 + 1), make_edgeless(2)));
}

inline Cotree regular_unchecked(std::int64_t n, std::int64_t d) {
  if (d == 0) return make_edgeless(n);
  if (d == n - 1) return make_clique(n);
  if (2 * d >= n) return complement(regular_unchecked(n, n - 1 - d));
  if (n % 2 == 0 && d % 2 == 0 && 3 * d == n - 2)
    return make_sum({multipartite_pairs(d), regular_unchecked(n - d - 2, d)});
  return make_sum({make_clique(d + 1), regular_unchecked(n - d - 1, d)});
}

}  // namespace detail

/// A d-regular cograph on n vertices, or the reason none exists.
///
/// Construction: small d peels off K_{d+1} (or, when that would leave the
/// excluded odd case 2d = n' - 1, the multipartite graph on d + 2 vertices
/// with parts of size 2); large d goes through the complement.
/// No d-regular cograph exists when n and d are odd, or when n is odd and
/// 2d = n - 1 with d > 0: a connected d-regular cograph is a product and has
/// at most 2d vertices, while every component has at least d + 1.
inline RegularResult regular_cograph(std::int64_t n, std::int64_t d) {
  if (n < 1 || d < 0 || d >= n)
    throw std::invalid_argument("regular_cograph: need n >= 1 and 0 <= d < n, got (" + std::to_string(n) + "," +
                                std::to_string(d) + ")");
  if (n % 2 == 1 && d % 2 == 1) return {std::nullopt, "n and d both odd"};
  if (n % 2 == 1 && 2 * d == n - 1 && d > 0) return {std::nullopt, "2d = n-1 excluded"};
  return {detail::regular_unchecked(n, d), ""};
}

// --- extremal families -----------------------------------------------------

/// K_{s-1} x (r K_t): fulfills forbidden(s,t) with C(s-1,2) + (s-1 + (t-1)/2) r t edges.
inline Cotree clique_product_family(std::int64_t s, std::int64_t t, std::int64_t r) {
  if (s < 1 || t < s || r < 0)
    throw std::invalid_argument("clique_product_family: need 1 <= s <= t and r >= 0");
  if (s == 1 && r == 0) throw std::invalid_argument("clique_product_family: (1,t,0) is the null graph");
  if (r == 0) return make_clique(s - 1);
  Cotree cliques = make_copies(make_clique(t), r);
  return s == 1 ? cliques : make_product({make_clique(s - 1), cliques});
}

/// A cograph on n vertices with maximum degree at most t - 1 and the most
/// edges: K_n below t, a (t-1)-regular cograph when one exists, otherwise a
/// (t-1)-regular part plus the best connected remainder on at most 2t - 3
/// vertices. Ties go to the smallest canonical form.
inline Cotree star_extremal(std::int64_t t, std::int64_t n, const Limits& limits = {}) {
  if (t < 2 || n < 1) throw std::invalid_argument("star_extremal: need t >= 2 and n >= 1");
  if (n < t) return make_clique(n);
  if (auto reg = regular_cograph(n, t - 1); reg.graph) return *reg.graph;

  const std::int64_t max_rest = std::min<std::int64_t>(2 * t - 3, n);
  if (max_rest > limits.catalog_max)
    throw CapacityError("star_extremal: remainder search needs catalogs up to " + std::to_string(max_rest));
  const auto catalogs = enumerate_cotrees_upto(static_cast<int>(max_rest), limits);
  std::optional<Cotree> best;
  for (std::int64_t r = 1; r <= max_rest; ++r) {
    const std::int64_t rest = n - r;
    std::optional<Cotree> regular_part;
    if (rest > 0) {
      if (rest < t) continue;
      regular_part = regular_cograph(rest, t - 1).graph;
      if (!regular_part) continue;
    }
    for (const auto& c : catalogs[static_cast<std::size_t>(r - 1)].items) {
      if (c.kind() == NodeKind::sum) continue;
      auto deg = leaf_degrees(c);
      if (*std::max_element(deg.begin(), deg.end()) > t - 1) continue;
      Cotree g = regular_part ? make_sum({*regular_part, c}) : c;
      if (!best || g.edge_count() > best->edge_count() ||
          (g.edge_count() == best->edge_count() && g < *best))
        best = g;
    }
  }
  if (!best) throw InternalInconsistency("star_extremal: no decomposition found");
  return *best;
}

/// K_1 x (q K_t + K_r) with n - 1 = qt + r; extremal for K_{2,t} when t is
/// 2 or 3. The part next to the universal vertex must avoid K_{1,t} and,
/// for t = 3, also C_4, so a (t-1)-regular part with a C_4 component
/// would not do.
inline Cotree k2t_extremal(std::int64_t t, std::int64_t n) {
  if (t != 2 && t != 3)
    throw std::domain_error("k2t_extremal: only t in {2,3} is supported; larger t has extremal cographs "
                            "without a universal vertex");
  if (n < 2) throw std::invalid_argument("k2t_extremal: need n >= 2");
  const std::int64_t q = (n - 1) / t, r = (n - 1) % t;
  std::vector<Cotree> parts(static_cast<std::size_t>(q), make_clique(t));
  if (r > 0) parts.push_back(make_clique(r));
  return make_product({make_leaf(), make_sum(std::move(parts))});
}

/// K_2 x (q K_3 + K_r) with n - 2 = 3q + r.
inline Cotree k33_extremal(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("k33_extremal: need n >= 2");
  const std::int64_t q = (n - 2) / 3, r = (n - 2) % 3;
  std::vector<Cotree> parts(static_cast<std::size_t>(q), make_clique(3));
  if (r > 0) parts.push_back(make_clique(r));
  if (parts.empty()) return make_clique(2);
  return make_product({make_clique(2), make_sum(std::move(parts))});
}

/// Nonempty set of indices among the first n values whose sum is divisible
/// by n: two of the n + 1 prefix sums agree modulo n.
inline std::vector<std::size_t> davenport_subsequence(std::span<const std::int64_t> values, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("davenport_subsequence: n must be >= 1");
  if (static_cast<std::int64_t>(values.size()) < n)
    throw std::invalid_argument("davenport_subsequence: need at least n values");
  std::vector<std::int64_t> seen(static_cast<std::size_t>(n), -1);
  std::int64_t prefix = 0;
  seen[0] = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    prefix = ((prefix + values[static_cast<std::size_t>(i)]) % n + n) % n;
    auto& first = seen[static_cast<std::size_t>(prefix)];
    if (first >= 0) {
      std::vector<std::size_t> out;
      for (std::int64_t j = first; j <= i; ++j) out.push_back(static_cast<std::size_t>(j));
      return out;
    }
    first = i + 1;
  }
  throw std::logic_error("unreachable: pigeonhole");
}

// --- pumping components in concrete witnesses -------------------------------

struct PumpingMatch {
  ChildPath path;
  std::string summand;   // canonical form of the repeated summand
  std::int64_t copies = 0;
  std::int64_t outside = 0;
  bool regular = false;  // summand is (t-1)-regular
};

/// Summands that occur at least twice under one sum node and whose outside
/// neighbourhood has s - 1 vertices, the shape of a pumping component for
/// K_{s,t}. A report of what is present, not a claim about all witnesses.
inline std::vector<PumpingMatch> find_pumping_components(const Cotree& g, std::int64_t s, std::int64_t t) {
  std::vector<PumpingMatch> out;
  ChildPath path;
  auto walk = [&](auto&& self, const Cotree& node, std::int64_t outside) -> void {
    for (std::size_t i = 0; i < node.children().size(); ++i) {
      const Cotree& c = node.children()[i];
      const std::int64_t below =
          node.kind() == NodeKind::product ? outside + node.vertex_count() - c.vertex_count() : outside;
      path.push_back(i);
      if (node.kind() == NodeKind::sum && (i == 0 || node.children()[i - 1] != c)) {
        auto copies = std::count(node.children().begin(), node.children().end(), c);
        if (copies >= 2 && below == s - 1)
          out.push_back({path, c.encoding(), copies, below, is_regular(c, t - 1)});
      }
      self(self, c, below);
      path.pop_back();
    }
  };
  walk(walk, g, 0);
  return out;
}

}  // namespace cograph
