#pragma once

// Dense bit-matrix graphs for brute-force checks at small n, plus graph6.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cograph/errors.hpp"

namespace cograph {

/// Symmetric loop-free adjacency matrix, one 64-bit row per vertex.
class AdjacencyGraph {
 public:
  static constexpr int kHardMax = 64;

  AdjacencyGraph() = default;
  explicit AdjacencyGraph(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kHardMax)
      throw CapacityError("AdjacencyGraph: " + std::to_string(n) + " vertices exceed " +
                          std::to_string(kHardMax));
  }

  int n() const { return n_; }
  std::uint64_t row(int u) const { return rows_[static_cast<std::size_t>(u)]; }

  void add_edge(int u, int v) {
    check_pair(u, v);
    rows_[static_cast<std::size_t>(u)] |= bit(v);
    rows_[static_cast<std::size_t>(v)] |= bit(u);
  }
  bool has_edge(int u, int v) const { return (row(u) >> v) & 1U; }
  int degree(int u) const { return std::popcount(row(u)); }

  std::int64_t edge_count() const {
    std::int64_t twice = 0;
    for (auto r : rows_) twice += std::popcount(r);
    return twice / 2;
  }

  std::uint64_t all_vertices() const { return n_ == 64 ? ~0ULL : (bit(n_) - 1); }

  AdjacencyGraph complement() const {
    AdjacencyGraph c(n_);
    for (int u = 0; u < n_; ++u)
      c.rows_[static_cast<std::size_t>(u)] = ~rows_[static_cast<std::size_t>(u)] & all_vertices() & ~bit(u);
    return c;
  }

  bool operator==(const AdjacencyGraph&) const = default;

 private:
  static constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
      throw std::invalid_argument("AdjacencyGraph: bad edge " + std::to_string(u) + "-" +
                                  std::to_string(v));
  }

  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// True iff no four vertices induce a path. A 4-vertex induced subgraph is
/// P_4 exactly when it has three edges and degrees (1,1,2,2).
inline bool is_induced_p4_free(const AdjacencyGraph& g) {
  const int n = g.n();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const std::uint64_t m = (1ULL << a) | (1ULL << b) | (1ULL << c) | (1ULL << d);
          int da = std::popcount(g.row(a) & m), db = std::popcount(g.row(b) & m);
          int dc = std::popcount(g.row(c) & m), dd = std::popcount(g.row(d) & m);
          if (da + db + dc + dd != 6) continue;
          if (da == 0 || db == 0 || dc == 0 || dd == 0) continue;  // triangle + isolated
          if (da == 3 || db == 3 || dc == 3 || dd == 3) continue;  // star
          return false;
        }
  return true;
}

/// Standard graph6 encoding: N(n) followed by the upper triangle read column
/// by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte + 63.
inline std::string to_graph6(const AdjacencyGraph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline AdjacencyGraph from_graph6(std::string_view s) {
  auto byte_at = [&](std::size_t i) {
    if (i >= s.size()) throw std::invalid_argument("graph6: truncated input");
    int v = static_cast<unsigned char>(s[i]) - 63;
    if (v < 0 || v > 63) throw std::invalid_argument("graph6: byte out of range at " + std::to_string(i));
    return v;
  };
  if (!s.empty() && s.back() == '\n') s.remove_suffix(1);
  std::size_t pos = 0;
  int n = 0;
  if (!s.empty() && static_cast<unsigned char>(s[0]) == 126) {
    n = (byte_at(1) << 12) | (byte_at(2) << 6) | byte_at(3);
    pos = 4;
  } else {
    n = byte_at(0);
    pos = 1;
  }
  AdjacencyGraph g(n);
  int bits_left = 0, cur = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (bits_left == 0) {
        cur = byte_at(pos++);
        bits_left = 6;
      }
      --bits_left;
      if ((cur >> bits_left) & 1) g.add_edge(i, j);
    }
  if (pos != s.size()) throw std::invalid_argument("graph6: trailing bytes");
  return g;
}

}  // namespace cograph
