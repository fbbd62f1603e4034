#pragma once

// Serialization: cotree JSON, DOT, registry snapshots and series CSV.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cograph/cotree.hpp"
#include "cograph/enumerator.hpp"
#include "cograph/profile.hpp"

namespace cograph {

/// Malformed input; `where` is a JSON pointer or line reference.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::string where, const std::string& what)
      : std::invalid_argument(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// --- cotree JSON -------------------------------------------------------------
// {"op":"leaf"} | {"op":"sum"|"prod","children":[...]}

inline nlohmann::json cotree_to_json(const Cotree& g) {
  if (g.is_leaf()) return {{"op", "leaf"}};
  nlohmann::json kids = nlohmann::json::array();
  for (const auto& c : g.children()) kids.push_back(cotree_to_json(c));
  return {{"op", g.kind() == NodeKind::sum ? "sum" : "prod"}, {"children", std::move(kids)}};
}

/// Reads a reduced cotree: inner nodes need two or more children and may
/// not repeat their parent's operation. Children are re-sorted.
inline Cotree cotree_from_json(const nlohmann::json& j, const std::string& where = "") {
  const std::string at = where.empty() ? "/" : where;
  if (!j.is_object()) throw ParseError(at, "expected an object");
  auto op_it = j.find("op");
  if (op_it == j.end() || !op_it->is_string()) throw ParseError(at, "missing string field 'op'");
  const std::string op = *op_it;
  if (op == "leaf") {
    if (j.size() != 1) throw ParseError(at, "leaf takes no other fields");
    return make_leaf();
  }
  if (op != "sum" && op != "prod") throw ParseError(where + "/op", "unknown op '" + op + "'");
  auto kids_it = j.find("children");
  if (kids_it == j.end() || !kids_it->is_array()) throw ParseError(at, "missing array field 'children'");
  if (kids_it->size() < 2) throw ParseError(where + "/children", "inner node needs at least two children");
  std::vector<Cotree> kids;
  for (std::size_t i = 0; i < kids_it->size(); ++i) {
    const std::string child_at = where + "/children/" + std::to_string(i);
    const auto& cj = (*kids_it)[i];
    if (cj.is_object() && cj.contains("op") && cj["op"] == op)
      throw ParseError(child_at, "child repeats parent op '" + op + "'; cotree is not reduced");
    kids.push_back(cotree_from_json(cj, child_at));
  }
  return op == "sum" ? make_sum(std::move(kids)) : make_product(std::move(kids));
}

inline Cotree parse_cotree_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "JSON syntax error");
  }
  return cotree_from_json(j);
}

/// Either a JSON document or a canonical encoding such as "*(v,+(v,v))".
inline Cotree parse_cotree_any(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_cotree_json(text);
  auto last = text.find_last_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("byte 0", "empty input");
  return parse_encoding(std::string_view(text).substr(first, last - first + 1));
}

// --- DOT -----------------------------------------------------------------------

/// Cotree drawing: inner nodes labelled "+" and "×", leaves numbered in DFS
/// order, root filled.
inline std::string to_dot(const Cotree& g) {
  std::ostringstream out;
  out << "graph cotree {\n  node [shape=circle];\n";
  int next_id = 0, next_leaf = 0;
  auto emit = [&](auto&& self, const Cotree& node) -> int {
    const int id = next_id++;
    out << "  n" << id << " [label=\"";
    if (node.is_leaf()) out << next_leaf++;
    else out << (node.kind() == NodeKind::sum ? "+" : "×");
    out << "\"";
    if (id == 0) out << ", style=filled, fillcolor=\"#b39ddb\"";
    out << "];\n";
    for (const auto& c : node.children()) {
      const int cid = self(self, c);
      out << "  n" << id << " -- n" << cid << ";\n";
    }
    return id;
  };
  emit(emit, g);
  out << "}\n";
  return out.str();
}

// --- registry snapshot -----------------------------------------------------------

inline constexpr const char* kSnapshotFormat = "cograph-registry/1";

inline nlohmann::json registry_to_json(const std::vector<Registry>& levels) {
  nlohmann::json j;
  j["format"] = kSnapshotFormat;
  j["levels"] = nlohmann::json::array();
  for (const auto& r : levels) {
    nlohmann::json lv;
    lv["n"] = r.n();
    lv["cap"] = r.cap();
    lv["records"] = nlohmann::json::array();
    for (const auto& rec : r.records()) {
      std::vector<std::string> key, wit;
      for (auto x : rec.key.entries()) key.push_back(x.to_string());
      for (const auto& w : rec.witnesses) wit.push_back(w.encoding());
      lv["records"].push_back({{"key", key}, {"edges", rec.edges}, {"witnesses", wit}});
    }
    j["levels"].push_back(std::move(lv));
  }
  return j;
}

/// Inverse of registry_to_json; levels come back frozen.
inline std::vector<Registry> registry_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("format", "") != kSnapshotFormat)
    throw ParseError("/format", std::string("expected '") + kSnapshotFormat + "'");
  std::vector<Registry> out;
  try {
    const auto& levels = j.at("levels");
    for (std::size_t i = 0; i < levels.size(); ++i) {
      const auto& lv = levels[i];
      Registry r(lv.at("n").get<int>(), lv.at("cap").get<std::size_t>());
      for (const auto& rec : lv.at("records")) {
        std::vector<ExtInt> key;
        for (const auto& x : rec.at("key")) key.push_back(ExtInt::parse(x.get<std::string>()));
        std::vector<Cotree> wit;
        for (const auto& w : rec.at("witnesses")) wit.push_back(parse_encoding(w.get<std::string>()));
        r.add({BicliqueSequence(std::move(key)), rec.at("edges").get<std::int64_t>(), std::move(wit)});
      }
      r.freeze();
      out.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("/levels", e.what());
  }
  return out;
}

// --- series -----------------------------------------------------------------

/// Columns: n, ex, alpha*n, residue (= ex - alpha*n), below (ex < alpha*n),
/// witness. Rationals are exact fractions; alpha columns are empty when the
/// series has no density constant.
inline std::string series_to_csv(const ExtremalSeries& s) {
  std::ostringstream out;
  out << "n,ex,alpha*n,residue,below,witness\n";
  for (const auto& [n, ex] : s.values) {
    out << n << "," << ex << ",";
    if (s.alpha) {
      const Rational an = *s.alpha * Rational(n);
      const Rational res = Rational(ex) - an;
      out << an.to_string() << "," << res.to_string() << "," << (res < Rational(0) ? "true" : "false");
    } else {
      out << ",,";
    }
    out << ",";
    auto w = s.witnesses.find(n);
    if (w != s.witnesses.end() && !w->second.empty()) out << '"' << w->second.front().encoding() << '"';
    out << "\n";
  }
  return out.str();
}

inline nlohmann::json series_to_json(const ExtremalSeries& s) {
  nlohmann::json j;
  j["constraint"] = s.constraint;
  j["profile"] = s.profile.to_string();
  if (s.alpha) j["alpha"] = s.alpha->to_string();
  j["rows"] = nlohmann::json::array();
  for (const auto& [n, ex] : s.values) {
    nlohmann::json row{{"n", n}, {"ex", ex}};
    if (s.alpha) {
      const Rational res = Rational(ex) - *s.alpha * Rational(n);
      row["alpha_n"] = (*s.alpha * Rational(n)).to_string();
      row["residue"] = res.to_string();
      row["below"] = res < Rational(0);
    }
    std::vector<std::string> wit;
    for (const auto& w : s.witnesses.at(n)) wit.push_back(w.encoding());
    row["witnesses"] = wit;
    j["rows"].push_back(std::move(row));
  }
  return j;
}

/// Read a series back from series_to_json output.
inline ExtremalSeries series_from_json(const nlohmann::json& j) {
  try {
    ExtremalSeries s{j.at("constraint").get<std::string>(), parse_profile(j.at("profile").get<std::string>()),
                     std::nullopt, 0, 0, {}, {}};
    if (j.contains("alpha")) s.alpha = Rational::parse(j["alpha"].get<std::string>());
    for (const auto& row : j.at("rows")) {
      const int n = row.at("n").get<int>();
      s.values[n] = row.at("ex").get<std::int64_t>();
      auto& w = s.witnesses[n];
      if (row.contains("witnesses"))
        for (const auto& e : row["witnesses"]) w.push_back(parse_encoding(e.get<std::string>()));
    }
    if (!s.values.empty()) {
      s.n_min = s.values.begin()->first;
      s.n_max = s.values.rbegin()->first;
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("/rows", e.what());
  }
}

inline nlohmann::json periodicity_to_json(const PeriodicityReport& r) {
  nlohmann::json j;
  j["status"] = r.conclusive ? "periodic" : "inconclusive";
  j["alpha"] = r.alpha.to_string();
  if (r.conclusive) {
    j["period"] = r.period;
    j["onset"] = r.onset;
    nlohmann::json res = nlohmann::json::object();
    for (const auto& [q, a] : r.residues) res[std::to_string(q)] = a.to_string();
    j["residues"] = res;
    j["all_negative"] = r.all_negative;
  }
  j["strictly_below"] = r.strictly_below;
  if (r.slope) j["slope_estimate"] = r.slope->to_string();
  return j;
}

}  // namespace cograph
