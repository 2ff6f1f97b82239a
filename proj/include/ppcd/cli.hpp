#pragma once

// Command-line front end. dispatch() is the whole program; tools/ppcd.cpp only
// forwards argv. Exit status: 0 success, 1 bad input, 2 a verified claim failed.

#include <cstdint>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ppcd/ctbl.hpp"
#include "ppcd/degrees.hpp"
#include "ppcd/hooks_enum.hpp"
#include "ppcd/lie_degrees.hpp"
#include "ppcd/partition.hpp"

namespace ppcd::cli {

using Json = nlohmann::ordered_json;

enum class Format { json, csv };

namespace detail {

inline Json natural(const Natural& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max()) return n.convert_to<std::uint64_t>();
  return n.str();
}

inline Json partition(const Partition& lambda) { return lambda.parts(); }

inline std::string csv_cell(const Json& v) {
  std::string s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + '"';
  }
  return s;
}

inline void write_csv(std::ostream& out, const Json& value) {
  const Json rows = value.is_array() ? value : Json::array({value});
  if (rows.empty()) return;
  bool first = true;
  for (const auto& [key, v] : rows.front().items()) {
    out << (first ? "" : ",") << key;
    first = false;
  }
  out << '\n';
  for (const auto& row : rows) {
    first = true;
    for (const auto& [key, v] : row.items()) {
      out << (first ? "" : ",") << csv_cell(v);
      first = false;
    }
    out << '\n';
  }
}

inline void emit(std::ostream& out, const Json& value, Format format) {
  if (format == Format::csv) {
    write_csv(out, value);
  } else {
    out << value.dump() << '\n';
  }
}

inline void error_record(std::ostream& err, const std::string& kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

inline std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw precondition_error("usage", "cannot parse '" + item + "' as an integer");
    }
  }
  return out;
}

inline std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

inline int as_int(std::uint64_t v, const char* what) {
  if (v > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
    throw precondition_error("out-of-range", std::string(what) + " is too large");
  return static_cast<int>(v);
}

// A violation found by a verify run: printed to err with the command that
// reproduces it.
struct Violations {
  std::vector<Json> records;
  void add(Json record) { records.push_back(std::move(record)); }
  int flush(std::ostream& err) const {
    for (const auto& r : records) err << r.dump() << '\n';
    return records.empty() ? 0 : 2;
  }
};

}  // namespace detail

struct Options {
  std::string format;
  std::uint64_t n = 0;
  std::uint64_t n_min = 7;
  std::uint64_t n_max = 0;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t q_max = 27;
  std::uint64_t p_max = 97;
  std::uint64_t rank_max = 10;
  int epsilon = 1;
  int exact_bound = 0;
  bool all = false;
  std::string partition;
  std::string primes = "5,7,11,13";
  std::string families = "A,2A,B,C,D,2D,B2even,D4";
  std::string family;
  std::string file;
  std::string bundled;
};

namespace detail {

inline Format format_or(const Options& o, Format fallback) {
  if (o.format.empty()) return fallback;
  if (o.format == "json") return Format::json;
  if (o.format == "csv") return Format::csv;
  throw precondition_error("usage", "--format must be json or csv");
}

inline Json degree_row(const Partition& lambda, std::uint64_t p, Violations& violations) {
  const bool macdonald = is_pprime_macdonald(lambda, p);
  const auto valuation = degree_valuation(lambda, p);
  if (macdonald != (valuation == 0))
    violations.add({{"violation", "macdonald-vs-valuation"},
                    {"partition", to_string(lambda)},
                    {"p", p},
                    {"reproduce", "ppcd degrees --partition \"" + to_string(lambda) +
                                      "\" --p " + std::to_string(p)}});
  return Json{{"partition", partition(lambda)},
              {"degree", degree(lambda).str()},
              {"valuation", valuation},
              {"pprime", macdonald}};
}

inline int run_degrees(const Options& o, std::ostream& out, std::ostream& err) {
  require_prime(o.p);
  Violations violations;
  if (!o.partition.empty()) {
    emit(out, degree_row(parse_partition(o.partition), o.p, violations),
         format_or(o, Format::json));
    return violations.flush(err);
  }
  if (o.n == 0 && !o.all)
    throw precondition_error("usage", "degrees needs --partition or --n with --all");
  Json rows = Json::array();
  for_each_partition(as_int(o.n, "n"), [&](const Partition& lambda) {
    rows.push_back(degree_row(lambda, o.p, violations));
  });
  emit(out, rows, format_or(o, Format::json));
  return violations.flush(err);
}

inline int run_hooks(const Options& o, std::ostream& out, std::ostream& err) {
  const int n = as_int(o.n, "n");
  const auto hooks = list_pprime_hooks(n, o.p);
  const bool layered_agree = layered_pprime_hook_legs(n, o.p) == pprime_hook_legs(n, o.p);
  Json list = Json::array();
  for (const auto& h : hooks) list.push_back(partition(h));
  emit(out,
       Json{{"n", n},
            {"p", o.p},
            {"pprime_hooks", list},
            {"count", hooks.size()},
            {"layered_agree", layered_agree}},
       format_or(o, Format::json));
  Violations v;
  if (!layered_agree)
    v.add({{"violation", "layered-vs-filter"}, {"n", n}, {"p", o.p},
           {"reproduce", "ppcd hooks --n " + std::to_string(n) + " --p " + std::to_string(o.p)}});
  return v.flush(err);
}

inline int run_count(const Options& o, std::ostream& out, std::ostream& err) {
  const int n = as_int(o.n, "n");
  const Natural formula = count_pprime_hooks_formula(n, o.p);
  const auto enumerated = pprime_hook_legs(n, o.p).size();
  const auto layered = layered_pprime_hook_legs(n, o.p).size();
  const bool agree = formula == enumerated && enumerated == layered;
  emit(out, Json{{"formula", natural(formula)}, {"enumerated", enumerated}, {"agree", agree}},
       format_or(o, Format::json));
  Violations v;
  if (!agree)
    v.add({{"violation", "count-formula"}, {"n", n}, {"p", o.p}, {"layered", layered},
           {"reproduce", "ppcd count --n " + std::to_string(n) + " --p " + std::to_string(o.p)}});
  return v.flush(err);
}

inline int run_verify_an(const Options& o, std::ostream& out, std::ostream& err) {
  const int bound = o.exact_bound > 0 ? o.exact_bound : scan_bound_from_env();
  const auto primes = parse_list(o.primes);
  Json rows = Json::array();
  Violations violations;
  for (std::uint64_t n64 = std::max<std::uint64_t>(o.n_min, 7); n64 <= o.n_max; ++n64) {
    const int n = as_int(n64, "n");
    for (std::uint64_t p : primes) {
      const Natural formula = count_pprime_hooks_formula(n, p);
      const auto enumerated = pprime_hook_legs(n, p).size();
      const auto layered = layered_pprime_hook_legs(n, p).size();
      const auto result = verify_An_bound(n, p);
      const auto ext = ext_pprime_degree_set(n, p, bound);
      const bool counts_ok = formula == enumerated && enumerated == layered;
      const bool halved_ok = !ext.exact || ext.degrees.size() >= halved_count_lower_bound(n, p);
      const bool ok = result.ok && counts_ok && halved_ok;
      rows.push_back(Json{{"n", n},
                          {"p", p},
                          {"count_formula", natural(formula)},
                          {"count_enum", enumerated},
                          {"ext_degrees_found", ext.degrees.size()},
                          {"bound_ok", ok}});
      if (!ok) {
        Json witnesses = Json::array();
        for (const auto& d : result.distinct_degrees) witnesses.push_back(d.str());
        violations.add({{"violation", "verify-an"},
                        {"n", n},
                        {"p", p},
                        {"method", to_string(result.method)},
                        {"witness_degrees", witnesses},
                        {"counts_ok", counts_ok},
                        {"halved_bound_ok", halved_ok},
                        {"reproduce", "ppcd verify-an --n-min " + std::to_string(n) +
                                          " --n-max " + std::to_string(n) + " --primes " +
                                          std::to_string(p) + " --exact-bound " +
                                          std::to_string(bound)}});
      }
    }
  }
  emit(out, rows, format_or(o, Format::csv));
  return violations.flush(err);
}

inline int run_verify_lie(const Options& o, std::ostream& out, std::ostream& err) {
  Json rows = Json::array();
  Violations violations;
  for (const auto& name : split_names(o.families)) {
    const auto family = lie::parse_family(name).family;
    if (!lie::is_classical_table_family(family))
      throw precondition_error("unsupported-family", name + " has no unipotent table row");
    const auto [lo, hi] = lie::rank_range(family);
    const unsigned top = hi != 0 ? hi : static_cast<unsigned>(o.rank_max);
    for (unsigned n = lo; n <= top; ++n)
      for (std::uint64_t q = 2; q <= o.q_max; ++q) {
        if (!is_prime_power(q) || !lie::row_applies(family, n, q)) continue;
        for (std::uint64_t p = 5; p <= o.p_max; ++p) {
          if (!is_prime(p) || q % p == 0) continue;
          const auto e = lie::evaluate_table1(family, n, q, p);
          rows.push_back(Json{{"family", name},
                              {"n", n},
                              {"q", q},
                              {"p", p},
                              {"d1", lie::to_string(e.d1)},
                              {"d2", lie::to_string(e.d2)},
                              {"ok", e.ok}});
          if (!e.ok)
            violations.add({{"violation", "not-both-divisible"},
                            {"family", name}, {"n", n}, {"q", q}, {"p", p},
                            {"d1", lie::to_string(e.d1)}, {"d2", lie::to_string(e.d2)},
                            {"reproduce", "ppcd verify-lie --families " + name +
                                              " --q-max " + std::to_string(q) + " --p-max " +
                                              std::to_string(p)}});
        }
      }
  }
  emit(out, rows, format_or(o, Format::csv));
  return violations.flush(err);
}

inline Json character_json(const lie::CharacterRecord& c) {
  return Json{{"label", c.label},
              {"formula", lie::to_string(c.formula)},
              {"degree", c.degree.str()},
              {"extends_to_aut", c.extends_to_aut},
              {"p_group_invariant", c.p_group_invariant}};
}

inline int run_lie_pair(const Options& o, std::ostream& out, std::ostream& err) {
  auto group = lie::parse_family(o.family);
  if (group.family == lie::Family::PSL3e && o.family != "PSU3") group.epsilon = o.epsilon;
  const auto rec = lie::exceptional_pair(group, o.q, o.p);
  const bool ok = lie::nondivisibility_check(rec);
  emit(out,
       Json{{"family", o.family},
            {"epsilon", rec.group.epsilon},
            {"q", rec.q},
            {"p", rec.p},
            {"source", rec.source},
            {"regime", rec.regime},
            {"characters", Json::array({character_json(rec.chi1), character_json(rec.chi2)})},
            {"nondivisibility", ok}},
       format_or(o, Format::json));
  Violations v;
  if (!ok)
    v.add({{"violation", "nondivisibility"}, {"family", o.family}, {"q", o.q}, {"p", o.p},
           {"reproduce", "ppcd lie-pair --family " + o.family + " --q " + std::to_string(o.q) +
                             " --p " + std::to_string(o.p)}});
  return v.flush(err);
}

inline int run_ctbl(const Options& o, std::ostream& out, std::ostream&) {
  ctbl::DegreeTable table;
  if (!o.file.empty() == !o.bundled.empty())
    throw precondition_error("usage", "ctbl needs exactly one of --file or --bundled");
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw precondition_error("io", "cannot open " + o.file);
    std::stringstream buf;
    buf << in.rdbuf();
    table = ctbl::load_degree_table(buf.str());
  } else {
    table = ctbl::bundled_table(o.bundled);
  }
  Json all = Json::array();
  for (const auto& d : ctbl::cd(table)) all.push_back(natural(d));
  Json pprime = Json::array();
  const auto cdp = ctbl::cd_pprime(table, o.p);
  for (const auto& d : cdp) pprime.push_back(natural(d));
  emit(out,
       Json{{"name", table.name},
            {"order", table.order ? natural(*table.order) : Json()},
            {"complete", table.complete},
            {"p", o.p},
            {"cd", all},
            {"cd_pprime", pprime},
            {"cd_size", all.size()},
            {"cd_pprime_size", pprime.size()}},
       format_or(o, Format::json));
  return 0;
}

}  // namespace detail

/// Runs one subcommand. args excludes the program name.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"p'-character-degree combinatorics for symmetric, alternating and Lie-type groups",
               "ppcd"};
  app.require_subcommand(1);
  Options o;

  auto with_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format: json or csv");
    return sub;
  };

  auto* hooks = with_format(app.add_subcommand("hooks", "List the p'-hook partitions of n"));
  hooks->add_option("--n", o.n)->required();
  hooks->add_option("--p", o.p)->required();

  auto* degrees = with_format(app.add_subcommand("degrees", "Degrees and p'-tests of partitions"));
  degrees->add_option("--n", o.n);
  degrees->add_option("--p", o.p)->required();
  degrees->add_flag("--all", o.all, "Every partition of n");
  degrees->add_option("--partition", o.partition, "Comma-separated parts, e.g. \"3,1,1\"");

  auto* count = with_format(app.add_subcommand("count", "Closed-form vs enumerated p'-hook count"));
  count->add_option("--n", o.n)->required();
  count->add_option("--p", o.p)->required();

  auto* verify_an = with_format(app.add_subcommand("verify-an", "Grid check of the A_n bound"));
  verify_an->add_option("--n-max", o.n_max)->required();
  verify_an->add_option("--n-min", o.n_min, "First n (at least 7)");
  verify_an->add_option("--primes", o.primes);
  verify_an->add_option("--exact-bound", o.exact_bound, "Largest n scanned exhaustively");

  auto* verify_lie = with_format(app.add_subcommand("verify-lie", "Grid check of the unipotent pairs"));
  verify_lie->add_option("--q-max", o.q_max);
  verify_lie->add_option("--p-max", o.p_max);
  verify_lie->add_option("--rank-max", o.rank_max);
  verify_lie->add_option("--families", o.families);

  auto* lie_pair = with_format(app.add_subcommand("lie-pair", "Character pair for a small-rank family"));
  lie_pair->add_option("--family", o.family)->required();
  lie_pair->add_option("--q", o.q)->required();
  lie_pair->add_option("--p", o.p)->required();
  lie_pair->add_option("--epsilon", o.epsilon, "+1 for PSL3, -1 for PSU3");

  auto* table = with_format(app.add_subcommand("ctbl", "cd(G) and cd_p'(G) of a degree table"));
  table->add_option("--file", o.file);
  table->add_option("--bundled", o.bundled, "A5, S5 or A6");
  table->add_option("--p", o.p)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    detail::error_record(err, "usage", e.what());
    return 1;
  }

  try {
    if (*hooks) return detail::run_hooks(o, out, err);
    if (*degrees) return detail::run_degrees(o, out, err);
    if (*count) return detail::run_count(o, out, err);
    if (*verify_an) return detail::run_verify_an(o, out, err);
    if (*verify_lie) return detail::run_verify_lie(o, out, err);
    if (*lie_pair) return detail::run_lie_pair(o, out, err);
    if (*table) return detail::run_ctbl(o, out, err);
  } catch (const precondition_error& e) {
    detail::error_record(err, e.kind(), e.what());
    return 1;
  } catch (const invariant_error& e) {
    detail::error_record(err, "invariant", e.what());
    return 2;
  }
  return 1;
}

}  // namespace ppcd::cli
