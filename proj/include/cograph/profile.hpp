#pragma once

// Biclique-profiles: decreasing, subdiagonal upper bounds on biclique
// sequences. A profile P forbids K_{j,l} whenever P_j < l, and
// subdiagonality (P_j < l implies P_l < j) makes that symmetric.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cograph/errors.hpp"
#include "cograph/ext_int.hpp"
#include "cograph/sequence.hpp"

namespace cograph {

/// An eventually constant sequence that has not been validated yet:
/// prefix[0], prefix[1], ..., then `tail` forever.
struct ProfileCandidate {
  std::vector<ExtInt> prefix;
  ExtInt tail = kNegInf;

  ExtInt operator[](std::size_t i) const { return i < prefix.size() ? prefix[i] : tail; }
};

enum class ViolationKind { not_decreasing, not_subdiagonal };

/// Witness for an invalid candidate. For not_decreasing, P_j < P_l with
/// j < l. For not_subdiagonal, P_j < l but P_l >= j.
struct ProfileViolation {
  ViolationKind kind;
  std::size_t j;
  std::size_t l;

  std::string message() const {
    auto idx = "(" + std::to_string(j) + "," + std::to_string(l) + ")";
    return kind == ViolationKind::not_decreasing ? "not decreasing at " + idx
                                                 : "not subdiagonal at " + idx;
  }
};

class ProfileError : public std::invalid_argument {
 public:
  explicit ProfileError(ProfileViolation v)
      : std::invalid_argument("invalid biclique-profile: " + v.message()), violation_(v) {}
  const ProfileViolation& violation() const { return violation_; }

 private:
  ProfileViolation violation_;
};

class BicliqueProfile;
BicliqueProfile validate(ProfileCandidate candidate);

/// A valid biclique-profile in normal form: negative finite values are
/// stored as -inf (both mean "no vertex set of that size") and trailing
/// prefix entries equal to the tail are dropped.
class BicliqueProfile {
 public:
  ExtInt operator[](std::size_t i) const { return i < prefix_.size() ? prefix_[i] : tail_; }
  const std::vector<ExtInt>& prefix() const { return prefix_; }
  ExtInt tail() const { return tail_; }
  /// First index from which the profile is constant.
  std::size_t support() const { return prefix_.size(); }

  bool operator==(const BicliqueProfile&) const = default;

  /// Text form "p0,p1,...;tail", e.g. "inf,inf,inf;2".
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < prefix_.size(); ++i) {
      if (i) s += ",";
      s += prefix_[i].to_string();
    }
    return s + ";" + tail_.to_string();
  }

 private:
  friend BicliqueProfile validate(ProfileCandidate candidate);
  BicliqueProfile() = default;

  std::vector<ExtInt> prefix_;
  ExtInt tail_ = kNegInf;
};

namespace detail {

inline ExtInt clamp_negative(ExtInt x) { return x.is_finite() && x.value() < 0 ? kNegInf : x; }

inline void normalize(ProfileCandidate& c) {
  for (auto& x : c.prefix) x = clamp_negative(x);
  c.tail = clamp_negative(c.tail);
  while (!c.prefix.empty() && c.prefix.back() == c.tail) c.prefix.pop_back();
}

}  // namespace detail

/// First violated condition of a candidate, if any.
///
/// Only indices 0..L (L = prefix length) need inspection: for j > L the
/// value equals the tail and the implied condition is weaker than at j = L.
/// For finite P_j = v the strongest instance of "P_j < l implies P_l < j"
/// is l = v + 1; for P_j = -inf it is l = 0.
inline std::optional<ProfileViolation> check_profile(ProfileCandidate c) {
  detail::normalize(c);
  const std::size_t L = c.prefix.size();
  for (std::size_t i = 1; i <= L; ++i)
    if (c[i] > c[i - 1]) return ProfileViolation{ViolationKind::not_decreasing, i - 1, i};
  for (std::size_t j = 0; j <= L; ++j) {
    const ExtInt v = c[j];
    if (v.is_pos_inf()) continue;
    const std::size_t l = v.is_neg_inf() ? 0 : static_cast<std::size_t>(v.value()) + 1;
    if (!(c[l] < ExtInt(static_cast<ExtInt::rep>(j))))
      return ProfileViolation{ViolationKind::not_subdiagonal, j, l};
  }
  return std::nullopt;
}

/// Returns the profile or throws ProfileError naming the failing index pair.
inline BicliqueProfile validate(ProfileCandidate candidate) {
  detail::normalize(candidate);
  if (auto v = check_profile(candidate)) throw ProfileError(*v);
  BicliqueProfile p;
  p.prefix_ = std::move(candidate.prefix);
  p.tail_ = candidate.tail;
  return p;
}

inline BicliqueProfile validate(std::vector<ExtInt> prefix, ExtInt tail) {
  return validate(ProfileCandidate{std::move(prefix), tail});
}

/// Parse the text form "p0,p1,...;tail". A missing ";tail" means the last
/// listed value repeats.
inline BicliqueProfile parse_profile(std::string_view text) {
  ProfileCandidate c;
  auto semi = text.find(';');
  std::string_view head = text.substr(0, semi);
  while (!head.empty()) {
    auto comma = head.find(',');
    c.prefix.push_back(ExtInt::parse(head.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    head.remove_prefix(comma + 1);
    if (head.empty()) throw std::invalid_argument("profile text: trailing comma");
  }
  if (semi != std::string_view::npos) {
    c.tail = ExtInt::parse(text.substr(semi + 1));
  } else {
    if (c.prefix.empty()) throw std::invalid_argument("profile text: empty");
    c.tail = c.prefix.back();
  }
  return validate(std::move(c));
}

/// p >= q pointwise with at least one strict index.
inline bool dominates(const BicliqueProfile& p, const BicliqueProfile& q) {
  const std::size_t n = std::max(p.support(), q.support());
  bool strict = false;
  for (std::size_t i = 0; i <= n; ++i) {
    if (p[i] < q[i]) return false;
    if (p[i] > q[i]) strict = true;
  }
  return strict;
}

/// Pointwise S(G) <= P over the stored window of s; a complete sequence is
/// -inf afterwards and passes trivially.
inline bool fulfills(const BicliqueSequence& s, const BicliqueProfile& p) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] > p[i]) return false;
  return true;
}

/// Profile P2 such that G1 x G2 fulfills p iff G2 fulfills P2, where
/// `inner` is the exact sequence of G1:
///   P2_c = min over a with inner_a finite of (p_{a+c} - inner_a).
/// Beyond the support of p every term is tail - inner_a, minimized at a = 0.
inline BicliqueProfile restrict_profile(const BicliqueProfile& p, const BicliqueSequence& inner) {
  if (!inner.complete())
    throw std::invalid_argument("restrict_profile: inner sequence must be complete");
  const auto n1 = static_cast<std::size_t>(inner.vertex_count());
  ProfileCandidate out;
  out.prefix.resize(p.support());
  for (std::size_t c = 0; c < p.support(); ++c) {
    ExtInt best = kPosInf;
    for (std::size_t a = 0; a <= n1; ++a) {
      if (!inner[a].is_finite()) continue;
      best = std::min(best, detail::clamp_negative(p[a + c].minus(inner[a].value())));
    }
    out.prefix[c] = best;
  }
  out.tail = detail::clamp_negative(p.tail().minus(inner.vertex_count()));
  detail::normalize(out);
  if (auto v = check_profile(out))
    throw InternalInconsistency("restrict_profile produced an invalid profile: " + v->message());
  return validate(std::move(out));
}

/// The profile that K_{s,t}-free graphs fulfill:
///   inf for j < s, t-1 for s <= j < t, s-1 for j >= t.
inline BicliqueProfile forbidden_biclique_profile(int s, int t) {
  if (s < 1 || s > t)
    throw std::invalid_argument("forbidden_biclique_profile: need 1 <= s <= t, got (" +
                                std::to_string(s) + "," + std::to_string(t) + ")");
  ProfileCandidate c;
  for (int j = 0; j < t; ++j) c.prefix.push_back(j < s ? kPosInf : ExtInt(t - 1));
  c.tail = s - 1;
  return validate(std::move(c));
}

/// Minimal index with a finite value.
inline std::size_t start_index(const BicliqueProfile& p) {
  for (std::size_t i = 0; i < p.support(); ++i)
    if (p[i].is_finite() || p[i].is_neg_inf()) return i;
  if (!p.tail().is_pos_inf()) return p.support();
  throw std::invalid_argument("start_index: profile is infinite everywhere");
}

/// Pointwise largest valid profile below an arbitrary candidate.
///
/// Valid profiles are closed under pointwise max, so the largest one exists.
/// Reading P as the set of allowed bicliques {(j,l) : l <= P_j}, it is the
/// largest down-closed symmetric subset of the candidate's set: with Q the
/// running minimum of the candidate and m_j the first l with Q_l < j,
///   R_j = min(Q_j, m_j - 1).
inline BicliqueProfile close_to_profile(ProfileCandidate c) {
  detail::normalize(c);
  ProfileCandidate q;
  ExtInt running = kPosInf;
  for (auto x : c.prefix) q.prefix.push_back(running = std::min(running, x));
  q.tail = std::min(running, c.tail);

  ExtInt max_finite = -1;
  for (auto x : q.prefix)
    if (x.is_finite()) max_finite = std::max(max_finite, x);
  if (q.tail.is_finite()) max_finite = std::max(max_finite, q.tail);

  // First l with Q_l < j, or +inf when there is none.
  auto first_below = [&](std::size_t j) -> ExtInt {
    const ExtInt bound = static_cast<ExtInt::rep>(j);
    for (std::size_t l = 0; l < q.prefix.size(); ++l)
      if (q.prefix[l] < bound) return static_cast<ExtInt::rep>(l);
    return q.tail < bound ? ExtInt(static_cast<ExtInt::rep>(q.prefix.size())) : kPosInf;
  };
  auto value_at = [&](std::size_t j) {
    ExtInt m = first_below(j);
    ExtInt r = m.is_pos_inf() ? q[j] : std::min(q[j], m.minus(1));
    return detail::clamp_negative(r);
  };

  // Q is constant from its support on and m_j is constant once j exceeds
  // every finite value of Q.
  const std::size_t last = std::max<std::size_t>(q.prefix.size(),
                                                 static_cast<std::size_t>(max_finite.value() + 1));
  ProfileCandidate r;
  for (std::size_t j = 0; j < last; ++j) r.prefix.push_back(value_at(j));
  r.tail = value_at(last);
  detail::normalize(r);
  if (auto v = check_profile(r))
    throw InternalInconsistency("close_to_profile produced an invalid profile: " + v->message());
  return validate(std::move(r));
}

/// Smallest W such that for every graph, fulfilling p is equivalent to
/// S_i <= p_i for all i <= W. An index j > W is implied when p_j = +inf,
/// when p_j = -inf (via the vertex count at index 0), when p_j = p_W
/// (monotonicity of S), or when p_j + 1 <= W (subdiagonality of S and p).
inline std::size_t constrained_window(const BicliqueProfile& p) {
  const std::size_t L = p.support();
  for (std::size_t w = 0;; ++w) {
    bool ok = true;
    const std::size_t last = std::max(L, w + 1);
    for (std::size_t j = w + 1; j <= last && ok; ++j) {
      const ExtInt v = p[j];
      if (!v.is_finite()) continue;
      if (v == p[w]) continue;
      if (static_cast<std::size_t>(v.value()) + 1 <= w) continue;
      ok = false;
    }
    if (ok) return w;
  }
}

/// Edge-density constant s - 1 + (t - 1)/2 of the forbidden K_{s,t} problem.
inline Rational biclique_alpha(int s, int t) { return Rational(2 * (s - 1) + (t - 1), 2); }

}  // namespace cograph
