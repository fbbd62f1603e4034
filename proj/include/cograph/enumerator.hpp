#pragma once

// Level-by-level dynamic program over vertex counts. Level n holds, for
// every truncated biclique sequence seen among n-vertex cographs, the
// largest edge count reaching it and a bounded set of witnesses.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "cograph/cotree.hpp"
#include "cograph/errors.hpp"
#include "cograph/ext_int.hpp"
#include "cograph/profile.hpp"
#include "cograph/sequence.hpp"

namespace cograph {

struct ExtremalRecord {
  BicliqueSequence key;  // S_0..S_cap, shared by all witnesses
  std::int64_t edges = 0;
  std::vector<Cotree> witnesses;  // canonical order
};

/// R_n: records for n-vertex cographs. Records are appended while building
/// and the registry is frozen before anything may query it.
class Registry {
 public:
  Registry(int n, std::size_t cap) : n_(n), cap_(cap) {}

  int n() const { return n_; }
  std::size_t cap() const { return cap_; }
  bool frozen() const { return frozen_; }
  const std::vector<ExtremalRecord>& records() const { return records_; }

  void add(ExtremalRecord r) {
    if (frozen_) throw std::logic_error("Registry: level " + std::to_string(n_) + " is frozen");
    if (r.key.size() != cap_ + 1 || r.key.vertex_count() != n_)
      throw std::invalid_argument("Registry: record key does not match level");
    records_.push_back(std::move(r));
  }
  void freeze() { frozen_ = true; }

 private:
  int n_;
  std::size_t cap_;
  bool frozen_ = false;
  std::vector<ExtremalRecord> records_;
};

struct BuildOptions {
  int n_max = 1;
  std::size_t cap = 1;
  std::optional<BicliqueProfile> prune;
  bool exhaustive = false;       // keep dominated records and every witness
  std::size_t witness_limit = 8;
  std::size_t max_records = 2'000'000;  // per level, before filtering
  unsigned threads = 1;
};

/// Largest supported cap; keys are stored inline.
inline constexpr std::size_t kMaxCap = 15;

namespace detail {

struct PackedKey {
  std::array<ExtInt, kMaxCap + 1> v{};
  std::uint8_t len = 0;

  std::span<const ExtInt> view() const { return {v.data(), len}; }
  std::span<ExtInt> view() { return {v.data(), len}; }
  bool operator==(const PackedKey& o) const { return std::equal(v.begin(), v.begin() + len, o.v.begin()); }
  bool operator<(const PackedKey& o) const {
    return std::lexicographical_compare(v.begin(), v.begin() + len, o.v.begin(), o.v.begin() + o.len);
  }
  bool below(const PackedKey& o) const {
    for (std::size_t i = 0; i < len; ++i)
      if (v[i] > o.v[i]) return false;
    return true;
  }
};

struct PackedKeyHash {
  std::size_t operator()(const PackedKey& k) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < k.len; ++i) {
      h ^= static_cast<std::uint64_t>(k.v[i].raw());
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

inline PackedKey pack(const BicliqueSequence& s) {
  PackedKey k;
  k.len = static_cast<std::uint8_t>(s.size());
  std::copy(s.entries().begin(), s.entries().end(), k.v.begin());
  return k;
}

inline BicliqueSequence unpack(const PackedKey& k) { return BicliqueSequence({k.v.begin(), k.v.begin() + k.len}); }

enum class Op : std::uint8_t { sum, product };

// How a candidate was formed: left operand record i of level n1, right
// operand record j of level n - n1. Field order matches generation order, so
// each worker emits provenances sorted and keeping the first few is
// schedule independent.
struct Provenance {
  int n1;
  std::uint32_t i;
  std::uint32_t j;
  Op op;
  auto operator<=>(const Provenance&) const = default;
};

struct Group {
  std::int64_t edges = -1;
  std::vector<Provenance> sources;  // sorted, achieving `edges`
};

using GroupMap = std::unordered_map<PackedKey, Group, PackedKeyHash>;

inline void offer(GroupMap& groups, const PackedKey& key, std::int64_t edges, Provenance src,
                  std::size_t source_limit) {
  auto& g = groups[key];
  if (edges < g.edges) return;
  if (edges > g.edges) {
    g.edges = edges;
    g.sources.clear();
  }
  if (g.sources.size() < source_limit) g.sources.push_back(src);
}

inline void merge_into(GroupMap& into, GroupMap&& from, std::size_t source_limit) {
  for (auto& [key, grp] : from) {
    auto& g = into[key];
    if (grp.edges < g.edges) continue;
    if (grp.edges > g.edges) {
      g = std::move(grp);
      continue;
    }
    g.sources.insert(g.sources.end(), grp.sources.begin(), grp.sources.end());
  }
  for (auto& [key, g] : into) {
    std::sort(g.sources.begin(), g.sources.end());
    if (g.sources.size() > source_limit) g.sources.resize(source_limit);
  }
}

}  // namespace detail

/// Non-dominated (key, edges) pairs. (k', e') dominates (k, e) when k' <= k
/// pointwise and e' >= e with one of them strict; exact duplicates collapse
/// to one. Result is ordered by edges descending, then key.
inline std::vector<std::pair<BicliqueSequence, std::int64_t>> pareto_filter(
    std::vector<std::pair<BicliqueSequence, std::int64_t>> candidates) {
  if (!candidates.empty()) {
    const auto len = candidates.front().first.size();
    for (const auto& c : candidates)
      if (c.first.size() != len) throw std::invalid_argument("pareto_filter: keys differ in length");
  }
  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return std::lexicographical_compare(a.first.entries().begin(), a.first.entries().end(),
                                        b.first.entries().begin(), b.first.entries().end());
  });
  // After sorting, any dominator precedes what it dominates.
  std::vector<std::pair<BicliqueSequence, std::int64_t>> kept;
  for (auto& c : candidates) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](const auto& k) {
      for (std::size_t i = 0; i < c.first.size(); ++i)
        if (k.first[i] > c.first[i]) return false;
      return true;
    });
    if (!dominated) kept.push_back(std::move(c));
  }
  return kept;
}

namespace detail {

// Same filter on packed keys; returns indices into `keys`.
inline std::vector<std::size_t> pareto_indices(const std::vector<PackedKey>& keys,
                                               const std::vector<std::int64_t>& edges) {
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (edges[a] != edges[b]) return edges[a] > edges[b];
    return keys[a] < keys[b];
  });
  std::vector<std::size_t> kept;
  for (std::size_t c : order) {
    bool dominated =
        std::any_of(kept.begin(), kept.end(), [&](std::size_t k) { return keys[k].below(keys[c]); });
    if (!dominated) kept.push_back(c);
  }
  return kept;
}

struct Level {
  std::vector<PackedKey> keys;
  std::vector<std::int64_t> edges;
};

inline bool admissible(const PackedKey& k, const std::optional<BicliqueProfile>& prune) {
  if (!prune) return true;
  for (std::size_t i = 0; i < k.len; ++i)
    if (k.v[i] > (*prune)[i]) return false;
  return true;
}

// All candidates of level n from splits n1 in `splits`.
inline GroupMap generate(int n, const std::vector<int>& splits, const std::vector<Level>& levels,
                         const BuildOptions& opt, std::size_t source_limit) {
  GroupMap groups;
  PackedKey key;
  key.len = static_cast<std::uint8_t>(opt.cap + 1);
  for (int n1 : splits) {
    const int n2 = n - n1;
    const Level& a = levels[static_cast<std::size_t>(n1 - 1)];
    const Level& b = levels[static_cast<std::size_t>(n2 - 1)];
    for (std::uint32_t i = 0; i < a.keys.size(); ++i)
      for (std::uint32_t j = n1 == n2 ? i : 0; j < b.keys.size(); ++j) {
        sum_rule(a.keys[i].view(), b.keys[j].view(), key.view());
        if (admissible(key, opt.prune))
          offer(groups, key, a.edges[i] + b.edges[j], {n1, i, j, Op::sum}, source_limit);
        product_rule(a.keys[i].view(), b.keys[j].view(), key.view());
        if (admissible(key, opt.prune))
          offer(groups, key, a.edges[i] + b.edges[j] + std::int64_t{n1} * n2, {n1, i, j, Op::product},
                source_limit);
        if (groups.size() > opt.max_records)
          throw CapacityError("build_registry: more than " + std::to_string(opt.max_records) +
                              " records at n = " + std::to_string(n));
      }
  }
  return groups;
}

inline std::vector<Cotree> materialize(const Group& g, const std::vector<Registry>& done, const BuildOptions& opt) {
  const std::size_t pool = opt.exhaustive ? SIZE_MAX : 4 * opt.witness_limit;
  std::set<Cotree> found;
  for (const auto& src : g.sources) {
    const auto& left = done[static_cast<std::size_t>(src.n1 - 1)].records()[src.i].witnesses;
    const int n2 = static_cast<int>(done.size()) + 1 - src.n1;
    const auto& right = done[static_cast<std::size_t>(n2 - 1)].records()[src.j].witnesses;
    for (const auto& x : left)
      for (const auto& y : right) {
        found.insert(src.op == Op::sum ? make_sum({x, y}) : make_product({x, y}));
        if (found.size() >= pool) break;
      }
    if (found.size() >= pool) break;
  }
  std::vector<Cotree> out(found.begin(), found.end());
  if (!opt.exhaustive && out.size() > opt.witness_limit) out.resize(opt.witness_limit);
  return out;
}

}  // namespace detail

/// Registries R_1..R_{n_max}; element n-1 is R_n, frozen.
///
/// Each level combines every split n1 + n2 = n (n1 <= n2) and every pair of
/// records by sum and product, drops keys exceeding the prune profile,
/// keeps the largest edge count per key and, unless exhaustive, only the
/// Pareto-minimal records.
inline std::vector<Registry> build_registry(const BuildOptions& opt) {
  if (opt.n_max < 1) throw std::invalid_argument("build_registry: n_max must be >= 1");
  if (opt.cap < 1) throw std::invalid_argument("build_registry: cap must be >= 1");
  if (opt.cap > kMaxCap) throw CapacityError("build_registry: cap above " + std::to_string(kMaxCap));
  if (!opt.exhaustive && opt.witness_limit < 1)
    throw std::invalid_argument("build_registry: witness_limit must be >= 1");
  const std::size_t source_limit = opt.exhaustive ? SIZE_MAX : 4 * opt.witness_limit;

  std::vector<Registry> done;
  std::vector<detail::Level> levels;
  auto publish = [&](Registry r) {
    detail::Level lv;
    for (const auto& rec : r.records()) {
      lv.keys.push_back(detail::pack(rec.key));
      lv.edges.push_back(rec.edges);
    }
    r.freeze();
    done.push_back(std::move(r));
    levels.push_back(std::move(lv));
  };

  Registry base(1, opt.cap);
  const BicliqueSequence k1 = single_vertex_sequence(opt.cap);
  if (detail::admissible(detail::pack(k1), opt.prune)) base.add({k1, 0, {make_leaf()}});
  publish(std::move(base));

  const unsigned workers = std::max(1U, opt.threads);
  for (int n = 2; n <= opt.n_max; ++n) {
    // Splits are dealt round-robin to workers; results merge in a fixed order
    // and provenance lists are sorted, so the outcome is schedule independent.
    std::vector<std::vector<int>> share(workers);
    for (int n1 = 1; 2 * n1 <= n; ++n1) share[static_cast<std::size_t>(n1 - 1) % workers].push_back(n1);
    std::vector<detail::GroupMap> partial(workers);
    if (workers == 1) {
      partial[0] = detail::generate(n, share[0], levels, opt, source_limit);
    } else {
      std::vector<std::exception_ptr> errors(workers);
      {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
          pool.emplace_back([&, w] {
            try {
              partial[w] = detail::generate(n, share[w], levels, opt, source_limit);
            } catch (...) {
              errors[w] = std::current_exception();
            }
          });
      }
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    detail::GroupMap groups;
    for (auto& p : partial) detail::merge_into(groups, std::move(p), source_limit);

    std::vector<detail::PackedKey> keys;
    std::vector<std::int64_t> edges;
    std::vector<const detail::Group*> grp;
    for (const auto& [k, g] : groups) {
      keys.push_back(k);
      edges.push_back(g.edges);
      grp.push_back(&g);
    }
    std::vector<std::size_t> keep;
    if (opt.exhaustive) {
      keep.resize(keys.size());
      std::iota(keep.begin(), keep.end(), std::size_t{0});
    } else {
      keep = detail::pareto_indices(keys, edges);
    }
    std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

    Registry level(n, opt.cap);
    for (std::size_t idx : keep)
      level.add({detail::unpack(keys[idx]), edges[idx], detail::materialize(*grp[idx], done, opt)});
    publish(std::move(level));
  }
  return done;
}

inline std::vector<Registry> build_registry(int n_max, std::size_t cap, std::optional<BicliqueProfile> prune,
                                            bool exhaustive) {
  BuildOptions opt;
  opt.n_max = n_max;
  opt.cap = cap;
  opt.prune = std::move(prune);
  opt.exhaustive = exhaustive;
  return build_registry(opt);
}

/// Records of a frozen registry whose key lies below p on the window, with
/// the maximum edge count. When several keys tie, their witnesses are
/// merged in canonical order; the returned key is the smallest tying key.
inline std::optional<ExtremalRecord> query(const Registry& r, const BicliqueProfile& p,
                                           std::size_t witness_limit = SIZE_MAX) {
  if (!r.frozen()) throw std::logic_error("query: registry level " + std::to_string(r.n()) + " is not frozen");
  if (r.cap() < constrained_window(p))
    throw std::invalid_argument("query: registry cap " + std::to_string(r.cap()) +
                                " is below the constrained window " + std::to_string(constrained_window(p)));
  std::optional<ExtremalRecord> best;
  std::set<Cotree> merged;
  for (const auto& rec : r.records()) {
    if (!fulfills(rec.key, p)) continue;
    if (!best || rec.edges > best->edges) {
      best = ExtremalRecord{rec.key, rec.edges, {}};
      merged.clear();
    } else if (rec.edges < best->edges) {
      continue;
    }
    merged.insert(rec.witnesses.begin(), rec.witnesses.end());
  }
  if (best) {
    best->witnesses.assign(merged.begin(), merged.end());
    if (best->witnesses.size() > witness_limit) best->witnesses.resize(witness_limit);
  }
  return best;
}

/// Edge counts of p-extremal cographs over a contiguous range of n.
struct ExtremalSeries {
  std::string constraint;  // "(s,t)" or the profile text form
  BicliqueProfile profile;
  std::optional<Rational> alpha;  // edge-density constant when known
  int n_min = 1;
  int n_max = 1;
  std::map<int, std::int64_t> values;  // absent where no n-vertex cograph fulfills
  std::map<int, std::vector<Cotree>> witnesses;
};

/// Read ex(n) for p off already built registries.
inline ExtremalSeries series_from_registry(const std::vector<Registry>& levels, const BicliqueProfile& p, int n_min,
                                           int n_max, std::size_t witness_limit = SIZE_MAX) {
  if (n_min < 1 || n_max < n_min || static_cast<std::size_t>(n_max) > levels.size())
    throw std::invalid_argument("series_from_registry: bad n range");
  ExtremalSeries out{p.to_string(), p, std::nullopt, n_min, n_max, {}, {}};
  for (int n = n_min; n <= n_max; ++n) {
    auto rec = query(levels[static_cast<std::size_t>(n - 1)], p, witness_limit);
    if (!rec) continue;
    out.values[n] = rec->edges;
    out.witnesses[n] = std::move(rec->witnesses);
  }
  return out;
}

/// Options for building registries that answer queries for p exactly.
inline BuildOptions options_for(const BicliqueProfile& p, int n_max, BuildOptions opt = {}) {
  opt.n_max = n_max;
  opt.cap = std::max<std::size_t>(1, constrained_window(p));
  if (!opt.prune) opt.prune = p;
  return opt;
}

inline ExtremalSeries extremal_function(const BicliqueProfile& p, int n_min, int n_max, BuildOptions opt = {}) {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("extremal_function: bad n range");
  opt = options_for(p, n_max, std::move(opt));
  return series_from_registry(build_registry(opt), p, n_min, n_max, opt.exhaustive ? SIZE_MAX : opt.witness_limit);
}

/// Profile of K_{s,t}-free graphs. For s = 1 it is obtained as the closure
/// of "nothing above t-1 from index 1 on".
inline BicliqueProfile biclique_free_profile(int s, int t) {
  if (s < 1 || s > t) throw std::invalid_argument("need 1 <= s <= t");
  return s == 1 ? close_to_profile({{kPosInf}, ExtInt(t - 1)}) : forbidden_biclique_profile(s, t);
}

/// ex(n, {K_{s,t}, induced P_4}) for n in [n_min, n_max].
inline ExtremalSeries extremal_function(int s, int t, int n_min, int n_max, BuildOptions opt = {}) {
  if (s < 1 || s > t) throw std::invalid_argument("extremal_function: need 1 <= s <= t");
  opt.prune.reset();
  auto series = extremal_function(biclique_free_profile(s, t), n_min, n_max, std::move(opt));
  series.constraint = "(" + std::to_string(s) + "," + std::to_string(t) + ")";
  series.alpha = biclique_alpha(s, t);
  return series;
}

struct PeriodicityReport {
  bool conclusive = false;
  int period = 0;
  int onset = 0;
  Rational alpha;
  std::map<int, Rational> residues;  // n mod period -> ex(n) - alpha n
  bool all_negative = false;
  bool strictly_below = false;  // ex(n) < alpha n on the whole series
  std::optional<Rational> slope;  // finite-difference estimate
};

/// Smallest candidate period R for which ex(n) - alpha n depends only on
/// n mod R over a suffix of at least 3R values. The onset is the first n
/// of the longest such suffix. Candidates default to 1..len/3.
inline PeriodicityReport analyze_periodicity(const ExtremalSeries& series, const Rational& alpha,
                                             std::vector<int> periods = {}) {
  PeriodicityReport rep;
  rep.alpha = alpha;
  if (series.values.empty()) return rep;
  const int first = series.values.begin()->first;
  const int last = series.values.rbegin()->first;
  std::vector<Rational> d;
  for (int n = first; n <= last; ++n) {
    auto it = series.values.find(n);
    if (it == series.values.end()) throw std::invalid_argument("analyze_periodicity: series has a gap at n = " + std::to_string(n));
    d.push_back(Rational(it->second) - alpha * Rational(n));
  }
  const int len = static_cast<int>(d.size());
  rep.strictly_below = std::all_of(d.begin(), d.end(), [](const Rational& x) { return x < Rational(0); });
  if (periods.empty())
    for (int r = 1; 3 * r <= len; ++r) periods.push_back(r);
  std::sort(periods.begin(), periods.end());
  for (int r : periods) {
    if (r < 1 || 3 * r > len) continue;
    int start = len - r;  // earliest index i with d[i] = d[i+r] for all later i
    while (start > 0 && d[static_cast<std::size_t>(start - 1)] == d[static_cast<std::size_t>(start - 1 + r)]) --start;
    if (len - start < 3 * r) continue;
    rep.conclusive = true;
    rep.period = r;
    rep.onset = first + start;
    for (int i = start; i < start + r; ++i) rep.residues.emplace((first + i) % r, d[static_cast<std::size_t>(i)]);
    rep.all_negative = std::all_of(rep.residues.begin(), rep.residues.end(),
                                   [](const auto& kv) { return kv.second < Rational(0); });
    break;
  }
  const int step = rep.conclusive ? rep.period : std::max(1, len - 1);
  if (len > step) {
    const auto hi = series.values.at(last), lo = series.values.at(last - step);
    rep.slope = Rational(hi - lo, step);
  }
  return rep;
}

}  // namespace cograph
