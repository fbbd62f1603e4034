#pragma once

// Biclique sequences S(G): S_s(G) is the largest t with K_{s,t} a subgraph
// of G, where K_{s,0} is the edgeless graph on s vertices. Hence S_0 = |G|,
// S_1 is the maximum degree, S_s >= 0 exactly for s <= |G| and S_s = -inf
// beyond.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cograph/ext_int.hpp"

namespace cograph {

/// Stored window S_0..S_{size-1} of a biclique sequence. When the window
/// reaches past the vertex count the sequence is complete and every later
/// entry is -inf; otherwise reading past the window is an error.
class BicliqueSequence {
 public:
  BicliqueSequence() : entries_{ExtInt(0)} {}
  explicit BicliqueSequence(std::vector<ExtInt> entries) : entries_(std::move(entries)) {
    if (entries_.empty() || !entries_[0].is_finite() || entries_[0].value() < 0)
      throw std::invalid_argument("BicliqueSequence: entry 0 must be a vertex count");
  }

  std::size_t size() const { return entries_.size(); }
  std::span<const ExtInt> entries() const { return entries_; }
  std::int64_t vertex_count() const { return entries_[0].value(); }
  bool complete() const { return static_cast<std::int64_t>(entries_.size()) > vertex_count(); }

  ExtInt operator[](std::size_t i) const {
    if (i < entries_.size()) return entries_[i];
    if (complete()) return kNegInf;
    throw std::out_of_range("BicliqueSequence: index " + std::to_string(i) +
                            " beyond truncated window");
  }

  /// Entries 0..cap. Extending past the stored window requires completeness.
  BicliqueSequence truncated(std::size_t cap) const {
    std::vector<ExtInt> out(cap + 1);
    for (std::size_t i = 0; i <= cap; ++i) out[i] = (*this)[i];
    return BicliqueSequence(std::move(out));
  }

  bool operator==(const BicliqueSequence&) const = default;

  /// "(4,2,2,0,0)"
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ",";
      s += entries_[i].to_string();
    }
    return s + ")";
  }

 private:
  std::vector<ExtInt> entries_;
};

/// Sequence of the single vertex K_1 up to index cap.
inline BicliqueSequence single_vertex_sequence(std::size_t cap) {
  std::vector<ExtInt> e(cap + 1, kNegInf);
  e[0] = 1;
  if (cap >= 1) e[1] = 0;
  return BicliqueSequence(std::move(e));
}

namespace detail {

// Window-level rules shared by the cotree recursion and the dynamic program.
// Inputs hold at least out.size() entries; entry 0 is the vertex count.

/// A biclique with both sides nonempty is connected and lives inside one
/// summand, which gives the pointwise maximum. The t = 0 level is different:
/// K_{s,0} = E_s only needs s vertices anywhere, so every index up to the
/// total vertex count is at least 0.
inline void sum_rule(std::span<const ExtInt> a, std::span<const ExtInt> b, std::span<ExtInt> out) {
  const std::int64_t n = a[0].value() + b[0].value();
  out[0] = n;
  for (std::size_t s = 1; s < out.size(); ++s) {
    ExtInt floor = static_cast<std::int64_t>(s) <= n ? ExtInt(0) : kNegInf;
    out[s] = std::max({a[s], b[s], floor});
  }
}

/// Max-plus convolution.
inline void product_rule(std::span<const ExtInt> a, std::span<const ExtInt> b, std::span<ExtInt> out) {
  for (std::size_t s = 0; s < out.size(); ++s) {
    ExtInt best = kNegInf;
    for (std::size_t i = 0; i <= s; ++i) best = std::max(best, a[i] + b[s - i]);
    out[s] = best;
  }
}

}  // namespace detail

/// Exact sequence of G1 + G2 up to index cap.
inline BicliqueSequence combine_sum(const BicliqueSequence& a, const BicliqueSequence& b,
                                    std::size_t cap) {
  std::vector<ExtInt> out(cap + 1);
  detail::sum_rule(a.truncated(cap).entries(), b.truncated(cap).entries(), out);
  return BicliqueSequence(std::move(out));
}

/// Exact sequence of G1 x G2 up to index cap.
inline BicliqueSequence combine_product(const BicliqueSequence& a, const BicliqueSequence& b,
                                        std::size_t cap) {
  std::vector<ExtInt> out(cap + 1);
  detail::product_rule(a.truncated(cap).entries(), b.truncated(cap).entries(), out);
  return BicliqueSequence(std::move(out));
}

}  // namespace cograph
