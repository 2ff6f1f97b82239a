#pragma once

// Character degree tables: ingestion, cd(G) and cd_{p'}(G).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ppcd/arith.hpp"
#include "ppcd/error.hpp"

namespace ppcd::ctbl {

struct DegreeTable {
  std::string name;
  std::optional<Natural> order;
  /// (degree, multiplicity); for a bare degree set every multiplicity is 1.
  std::vector<std::pair<Natural, Natural>> degrees;
  /// The multiset lists all of Irr(G). Always false for a bare set.
  bool complete = false;
  bool set_only = false;
};

/// Sum of multiplicity * degree^2.
inline Natural sum_of_squares(const DegreeTable& t) {
  Natural s = 0;
  for (const auto& [d, m] : t.degrees) s += m * d * d;
  return s;
}

namespace detail {

inline Natural natural_from(const nlohmann::json& v, std::string_view what) {
  if (v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0))
    return Natural(v.get<std::uint64_t>());
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) return Natural(s);
  }
  throw precondition_error("schema", std::string(what) +
                                         " must be a non-negative integer or decimal string");
}

inline Natural positive_from(const nlohmann::json& v, std::string_view what) {
  Natural n = natural_from(v, what);
  if (n == 0) throw precondition_error("schema", std::string(what) + " must be positive");
  return n;
}

}  // namespace detail

/// Parses and validates a table document:
///   {"name": s, "order": n?, "complete": b, "degrees": [[d, mult], ...]}
///   {"name": s?, "degree_set": [d, ...]}
/// Large integers may be given as decimal strings. A complete table with an
/// order must satisfy sum mult * d^2 = order.
inline DegreeTable load_degree_table(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw precondition_error("schema", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw precondition_error("schema", "document must be a JSON object");

  DegreeTable t;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw precondition_error("schema", "name must be a string");
    t.name = it->get<std::string>();
  }
  if (auto it = doc.find("order"); it != doc.end() && !it->is_null())
    t.order = detail::positive_from(*it, "order");

  const bool has_multiset = doc.contains("degrees");
  const bool has_set = doc.contains("degree_set");
  if (has_multiset == has_set)
    throw precondition_error("schema", "exactly one of 'degrees' or 'degree_set' is required");

  std::set<Natural> seen;
  auto add = [&](Natural d, Natural m) {
    if (!seen.insert(d).second)
      throw precondition_error("schema", "degree " + d.str() + " listed twice");
    t.degrees.emplace_back(std::move(d), std::move(m));
  };

  if (has_multiset) {
    if (t.name.empty()) throw precondition_error("schema", "name is required");
    auto complete = doc.find("complete");
    if (complete == doc.end() || !complete->is_boolean())
      throw precondition_error("schema", "complete must be a boolean");
    t.complete = complete->get<bool>();
    const auto& rows = doc.at("degrees");
    if (!rows.is_array()) throw precondition_error("schema", "degrees must be an array");
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != 2)
        throw precondition_error("schema", "each degrees entry must be [degree, multiplicity]");
      add(detail::positive_from(row[0], "degree"), detail::positive_from(row[1], "multiplicity"));
    }
  } else {
    t.set_only = true;
    const auto& values = doc.at("degree_set");
    if (!values.is_array()) throw precondition_error("schema", "degree_set must be an array");
    for (const auto& v : values) add(detail::positive_from(v, "degree"), 1);
  }
  if (t.degrees.empty()) throw precondition_error("schema", "no degrees given");
  std::sort(t.degrees.begin(), t.degrees.end());

  if (t.complete && t.order && sum_of_squares(t) != *t.order)
    throw precondition_error("sum-of-squares", "sum of squared degrees " +
                                                   sum_of_squares(t).str() +
                                                   " does not equal the order " + t.order->str());
  return t;
}

inline std::set<Natural> cd(const DegreeTable& t) {
  std::set<Natural> s;
  for (const auto& [d, m] : t.degrees) s.insert(d);
  return s;
}

/// Degrees not divisible by p.
inline std::set<Natural> cd_pprime(const DegreeTable& t, std::uint64_t p) {
  require_prime(p);
  std::set<Natural> s;
  for (const auto& [d, m] : t.degrees)
    if (d % p != 0) s.insert(d);
  return s;
}

/// {1, p - 1, p, p + 1} as a bare degree set.
inline DegreeTable pgl2_degree_set(std::uint64_t p) {
  require_prime(p);
  if (p <= 5) throw precondition_error("out-of-range", "p must be greater than 5");
  DegreeTable t;
  t.name = "PGL2(" + std::to_string(p) + ")";
  t.set_only = true;
  for (std::uint64_t d : {std::uint64_t{1}, p - 1, p, p + 1}) t.degrees.emplace_back(d, 1);
  return t;
}

/// Bundled tables; the same documents are shipped under data/.
inline constexpr std::pair<std::string_view, std::string_view> bundled_documents[] = {
    {"A5", R"({"name": "A5", "order": 60, "complete": true, "degrees": [[1, 1], [3, 2], [4, 1], [5, 1]]})"},
    {"S5", R"({"name": "S5", "order": 120, "complete": true, "degrees": [[1, 2], [4, 2], [5, 2], [6, 1]]})"},
    {"A6", R"({"name": "A6", "order": 360, "complete": true, "degrees": [[1, 1], [5, 2], [8, 2], [9, 1], [10, 1]]})"},
};

inline DegreeTable bundled_table(std::string_view name) {
  for (const auto& [key, doc] : bundled_documents)
    if (key == name) return load_degree_table(doc);
  throw precondition_error("unknown-table", "no bundled table named '" + std::string(name) + "'");
}

}  // namespace ppcd::ctbl
