#pragma once

// Reduced, canonical cotrees. A cotree is immutable; subtrees are shared.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cograph/adjacency.hpp"
#include "cograph/errors.hpp"
#include "cograph/sequence.hpp"

namespace cograph {

enum class NodeKind : std::uint8_t { leaf, sum, product };

/// A cograph given by its reduced cotree.
///
/// Invariants, established by the factory functions:
///  - every inner node has at least two children;
///  - no sum node has a sum child and no product node has a product child;
///  - children are sorted by their canonical encoding, so two cotrees are
///    isomorphic as cographs iff their encodings are equal;
///  - vertex/edge counts, height and clique number are cached per node.
///
/// Canonical encoding grammar: leaf = "v", sum = "+(" c1 "," c2 ... ")",
/// product = "*(" c1 "," c2 ... ")", children in ascending byte order.
class Cotree {
 public:
  /// The single vertex K_1.
  Cotree() : node_(leaf_node()) {}

  NodeKind kind() const { return node_->kind; }
  bool is_leaf() const { return node_->kind == NodeKind::leaf; }
  std::span<const Cotree> children() const { return node_->children; }
  std::int64_t vertex_count() const { return node_->vertices; }
  std::int64_t edge_count() const { return node_->edges; }
  /// Edges on the longest root-to-leaf path of the reduced tree.
  int height() const { return node_->height; }
  int clique_number() const { return node_->omega; }
  const std::string& encoding() const { return node_->encoding; }

  friend bool operator==(const Cotree& a, const Cotree& b) {
    return a.node_ == b.node_ || a.node_->encoding == b.node_->encoding;
  }
  friend bool operator<(const Cotree& a, const Cotree& b) { return a.encoding() < b.encoding(); }

  static Cotree combine(NodeKind kind, std::vector<Cotree> children) {
    if (kind == NodeKind::leaf) throw std::invalid_argument("Cotree::combine: leaf has no children");
    if (children.empty()) throw std::invalid_argument("Cotree: empty child list");
    if (children.size() == 1) return std::move(children.front());

    std::vector<Cotree> flat;
    flat.reserve(children.size());
    for (auto& c : children) {
      if (c.kind() == kind)
        flat.insert(flat.end(), c.children().begin(), c.children().end());
      else
        flat.push_back(std::move(c));
    }
    std::sort(flat.begin(), flat.end());

    auto node = std::make_shared<Node>();
    node->kind = kind;
    std::int64_t n = 0, m = 0, cross = 0;
    int h = 0, omega = 0;
    std::size_t enc_len = 3;
    for (const auto& c : flat) {
      cross += n * c.vertex_count();
      n += c.vertex_count();
      m += c.edge_count();
      h = std::max(h, c.height() + 1);
      omega = kind == NodeKind::sum ? std::max(omega, c.clique_number()) : omega + c.clique_number();
      enc_len += c.encoding().size() + 1;
    }
    node->vertices = n;
    node->edges = kind == NodeKind::product ? m + cross : m;
    node->height = h;
    node->omega = omega;
    node->encoding.assign(kind == NodeKind::sum ? "+(" : "*(");
    node->encoding.reserve(enc_len);
    for (std::size_t i = 0; i < flat.size(); ++i) {
      if (i) node->encoding += ',';
      node->encoding += flat[i].encoding();
    }
    node->encoding += ')';
    node->children = std::move(flat);
    return Cotree(std::move(node));
  }

 private:
  struct Node {
    NodeKind kind = NodeKind::leaf;
    std::vector<Cotree> children;
    std::int64_t vertices = 1;
    std::int64_t edges = 0;
    int height = 0;
    int omega = 1;
    std::string encoding = "v";
  };

  explicit Cotree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static const std::shared_ptr<const Node>& leaf_node() {
    static const std::shared_ptr<const Node> leaf = std::make_shared<const Node>();
    return leaf;
  }

  std::shared_ptr<const Node> node_;
};

inline Cotree make_leaf() { return Cotree(); }
inline Cotree make_sum(std::vector<Cotree> children) {
  return Cotree::combine(NodeKind::sum, std::move(children));
}
inline Cotree make_product(std::vector<Cotree> children) {
  return Cotree::combine(NodeKind::product, std::move(children));
}

/// Clique K_n and edgeless E_n, n >= 1.
inline Cotree make_clique(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("make_clique: n must be positive");
  return make_product(std::vector<Cotree>(static_cast<std::size_t>(n)));
}
inline Cotree make_edgeless(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("make_edgeless: n must be positive");
  return make_sum(std::vector<Cotree>(static_cast<std::size_t>(n)));
}
/// k disjoint copies of g (k >= 1).
inline Cotree make_copies(const Cotree& g, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("make_copies: k must be positive");
  return make_sum(std::vector<Cotree>(static_cast<std::size_t>(k), g));
}

/// Cotree of the complement graph: sum and product labels swap.
inline Cotree complement(const Cotree& g) {
  if (g.is_leaf()) return g;
  std::vector<Cotree> kids;
  kids.reserve(g.children().size());
  for (const auto& c : g.children()) kids.push_back(complement(c));
  return g.kind() == NodeKind::sum ? make_product(std::move(kids)) : make_sum(std::move(kids));
}

inline const std::string& canonical_form(const Cotree& g) { return g.encoding(); }

/// Rebuild a cotree from its encoding. Non-reduced or unsorted input is
/// accepted and canonicalized.
inline Cotree parse_encoding(std::string_view s) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> Cotree {
    throw std::invalid_argument("cotree encoding: " + what + " at offset " + std::to_string(pos));
  };
  auto parse = [&](auto&& self) -> Cotree {
    if (pos >= s.size()) return fail("unexpected end");
    char c = s[pos];
    if (c == 'v') {
      ++pos;
      return make_leaf();
    }
    if ((c != '+' && c != '*') || pos + 1 >= s.size() || s[pos + 1] != '(')
      return fail("expected 'v', '+(' or '*('");
    pos += 2;
    std::vector<Cotree> kids;
    for (;;) {
      kids.push_back(self(self));
      if (pos >= s.size()) return fail("unexpected end");
      if (s[pos] == ',') {
        ++pos;
        continue;
      }
      if (s[pos] == ')') {
        ++pos;
        break;
      }
      return fail("expected ',' or ')'");
    }
    if (kids.size() < 2) return fail("inner node with fewer than two children");
    return c == '+' ? make_sum(std::move(kids)) : make_product(std::move(kids));
  };
  Cotree g = parse(parse);
  if (pos != s.size()) fail("trailing characters");
  return g;
}

namespace detail {

// Leaves are numbered in depth-first order over the canonical tree, so every
// subtree owns a contiguous id range.
inline void expand(const Cotree& g, int first, AdjacencyGraph& a) {
  if (g.is_leaf()) return;
  int start = first;
  std::vector<std::pair<int, int>> ranges;
  for (const auto& c : g.children()) {
    expand(c, start, a);
    ranges.emplace_back(start, start + static_cast<int>(c.vertex_count()));
    start = ranges.back().second;
  }
  if (g.kind() != NodeKind::product) return;
  for (std::size_t i = 0; i < ranges.size(); ++i)
    for (std::size_t j = i + 1; j < ranges.size(); ++j)
      for (int u = ranges[i].first; u < ranges[i].second; ++u)
        for (int v = ranges[j].first; v < ranges[j].second; ++v) a.add_edge(u, v);
}

inline void leaf_degrees(const Cotree& g, std::int64_t outside, std::vector<std::int64_t>& out) {
  if (g.is_leaf()) {
    out.push_back(outside);
    return;
  }
  for (const auto& c : g.children()) {
    std::int64_t extra = g.kind() == NodeKind::product ? g.vertex_count() - c.vertex_count() : 0;
    leaf_degrees(c, outside + extra, out);
  }
}

}  // namespace detail

/// Expansion to an adjacency matrix; vertex i is the i-th leaf in DFS order.
inline AdjacencyGraph to_adjacency(const Cotree& g, int limit = Limits{}.adjacency_max) {
  if (g.vertex_count() > limit)
    throw CapacityError("to_adjacency: " + std::to_string(g.vertex_count()) +
                        " vertices exceed limit " + std::to_string(limit));
  AdjacencyGraph a(static_cast<int>(g.vertex_count()));
  detail::expand(g, 0, a);
  return a;
}

/// Vertex degrees in DFS leaf order, computed on the tree.
inline std::vector<std::int64_t> leaf_degrees(const Cotree& g) {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(g.vertex_count()));
  detail::leaf_degrees(g, 0, out);
  return out;
}

/// e(X) = ||G[X]|| + ||X, V \ X|| for X given as DFS leaf ids.
inline std::int64_t edge_contribution(const Cotree& g, std::span<const int> leaves,
                                      int limit = Limits{}.adjacency_max) {
  for (int id : leaves)
    if (id < 0 || id >= g.vertex_count())
      throw std::invalid_argument("edge_contribution: leaf id " + std::to_string(id) + " out of range");
  const AdjacencyGraph a = to_adjacency(g, limit);
  std::uint64_t x = 0;
  for (int id : leaves) x |= 1ULL << id;
  std::int64_t internal_twice = 0, cross = 0;
  for (int u = 0; u < a.n(); ++u) {
    if (!((x >> u) & 1U)) continue;
    internal_twice += std::popcount(a.row(u) & x);
    cross += std::popcount(a.row(u) & ~x);
  }
  return internal_twice / 2 + cross;
}

/// Entries 0..cap of S(g) by structural recursion over the cotree.
inline BicliqueSequence biclique_sequence(const Cotree& g, std::size_t cap) {
  if (g.is_leaf()) return single_vertex_sequence(cap);
  auto kids = g.children();
  BicliqueSequence acc = biclique_sequence(kids[0], cap);
  for (std::size_t i = 1; i < kids.size(); ++i) {
    BicliqueSequence next = biclique_sequence(kids[i], cap);
    acc = g.kind() == NodeKind::sum ? combine_sum(acc, next, cap) : combine_product(acc, next, cap);
  }
  return acc;
}

/// Full sequence S_0..S_n.
inline BicliqueSequence biclique_sequence(const Cotree& g) {
  return biclique_sequence(g, static_cast<std::size_t>(g.vertex_count()));
}

}  // namespace cograph
