// Command-line front end: build the extremal constructions, verify freeness
// and matching bounds, evaluate every bound formula, and drive the exact
// search oracle. Machine-first JSON output with a plain table renderer.
//
// Exit codes: 0 ok, 1 a verification check failed, 2 usage/parameter error,
// 3 search budget exhausted.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "turan/bounds.hpp"
#include "turan/climb.hpp"
#include "turan/constructions.hpp"
#include "turan/forbidden.hpp"
#include "turan/graph6.hpp"
#include "turan/matching.hpp"
#include "turan/oracle.hpp"

using namespace turan;
using nlohmann::json;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Range {
  long long lo = 0, hi = 0;
};

// "a..b" inclusive, or a single value.
Range parse_range(const std::string& text) {
  Range r;
  auto pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      r.lo = r.hi = std::stoll(text);
    } else {
      r.lo = std::stoll(text.substr(0, pos));
      r.hi = std::stoll(text.substr(pos + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected N or A..B, got '" + text + "'");
  }
  if (r.lo > r.hi) throw CLI::ValidationError("empty range '" + text + "'");
  return r;
}

std::pair<int, int> parse_klt(const std::string& text) {
  auto pos = text.find(',');
  if (pos == std::string::npos)
    throw CLI::ValidationError("expected l,t, got '" + text + "'");
  return {std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 1))};
}

std::string default_cache_path() {
  if (const char* env = std::getenv("TURAN_CACHE")) return env;
  return "extable.jsonl";
}

Graph read_graph_arg(const std::string& arg) {
  std::string text;
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(arg, std::ios::binary);
    if (!in.is_open()) throw std::runtime_error("cannot open " + arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return from_graph6(text);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out.is_open()) throw std::runtime_error("cannot write " + path);
  out << content;
}

// ---------------- construct ----------------

int cmd_construct(const std::string& variant, int l, int t, int s, int x, long long n,
                  const std::string& out_path, const std::string& layout_path,
                  const std::string& cache_path, const std::string& s_piece_path,
                  bool augment) {
  ConstructionParams p{l, t, s, x, n, variant == "g2" ? Variant::G2 : Variant::G1};
  LabeledConstruction lc;
  json info;
  if (p.variant == Variant::G1) {
    lc = build_g1(p);
    info["family_value"] = f1_value(x, l, t, s, n);
    info["family_formula"] = "F1";
  } else {
    Graph s_piece;
    int piece_order = 2 * (s - x) + 1;
    if (!s_piece_path.empty()) {
      s_piece = read_graph_arg(s_piece_path);
    } else {
      ExTable table = ExTable::load(cache_path);
      auto hit = table.find(piece_order, FamilySpec::forbid_klt(l, t));
      if (!hit) {
        std::cerr << "construct: no extremal piece for S. Provide --s-piece FILE or fill "
                     "the cache entry first, e.g.\n  turan oracle --n "
                  << piece_order << " --forbid-klt " << l << "," << t << " --cache "
                  << cache_path << "\n(missing key: n=" << piece_order << " family=K"
                  << l << "," << t << ")\n";
        return kExitUsage;
      }
      s_piece = from_graph6(hit->witness_g6);
      info["s_piece_mode"] = hit->exact ? "exact" : "lower-only";
    }
    lc = build_g2(p, s_piece);
    ExTable table = ExTable::load(cache_path);
    auto f2 = f2_value(x, l, t, s, n, &table, kAllowExact | kAllowLower);
    if (f2) {
      info["family_value"] = f2->value;
      info["family_formula"] = "F2";
    }
    if (augment) info["xs_edges_added"] = augment_g2_xs_edges(lc, l, t);
  }
  info["n"] = lc.graph.order();
  info["edges"] = lc.graph.size();
  std::string g6 = to_graph6(lc.graph);
  if (!out_path.empty())
    write_file(out_path, g6 + "\n");
  else
    info["graph6"] = g6;
  if (!layout_path.empty()) write_file(layout_path, lc.layout.to_json() + "\n");
  std::cout << info.dump(2) << "\n";
  return 0;
}

// ---------------- verify ----------------

int cmd_verify(const std::string& graph_arg, int l, int t, std::optional<int> s,
               bool dump_adjacency) {
  Graph g = read_graph_arg(graph_arg);
  json rep;
  rep["n"] = g.order();
  rep["edges"] = g.size();
  if (dump_adjacency) rep["adjacency"] = json::parse(to_json_adjacency(g));
  bool all_ok = true;

  auto cert = contains_biclique(g, l, t);
  rep["klt_free"] = !cert.has_value();
  if (cert) {
    all_ok = false;
    rep["certificates"]["biclique"] = json::parse(cert->to_json());
  }
  if (s) {
    auto r = is_matching_bounded(g, *s);
    rep["matching_bounded"] = r.bounded;
    if (!r.bounded) {
      all_ok = false;
      Matching m = max_matching(g);
      m.edges.resize(std::min<std::size_t>(m.edges.size(), (std::size_t)*s + 1));
      json edges = json::array();
      for (auto [a, b] : m.edges) edges.push_back({a, b});
      rep["certificates"]["oversized_matching"] = edges;
    } else if (r.certificate) {
      rep["certificates"]["deficiency_set"] = json::parse(r.certificate->to_json());
    }
  }
  std::cout << rep.dump(2) << "\n";
  return all_ok ? 0 : kExitVerifyFailed;
}

// ---------------- bounds ----------------

int cmd_bounds(int l, int t, int s, const Range& n_range, const std::string& cache_path,
               const std::string& format) {
  ExTable table = ExTable::load(cache_path);
  for (long long n = n_range.lo; n <= n_range.hi; ++n) {
    BoundReport r = evaluate_bounds(l, t, s, n, &table);
    if (format == "json")
      std::cout << r.to_json() << "\n";
    else
      std::cout << r.to_text();
  }
  return 0;
}

// ---------------- oracle ----------------

int cmd_oracle(const Range& n_range, std::optional<std::pair<int, int>> klt,
               std::optional<int> ms, std::optional<int> x, int workers,
               std::uint64_t budget, int cap_override, const std::string& cache_path,
               const std::string& format) {
  FamilySpec spec;
  if (klt) spec.klt = klt;
  if (ms) spec.matching_s = ms;
  if (!spec.valid()) {
    std::cerr << "oracle: give at least one of --forbid-klt / --forbid-matching\n";
    return kExitUsage;
  }
  spec.normalize();
  ExTable table = ExTable::load(cache_path);
  table.attach(cache_path);
  SearchConfig cfg;
  cfg.workers = workers;
  cfg.node_budget = budget;
  cfg.cap_override = cap_override;
  bool budget_hit = false;
  for (long long n = n_range.lo; n <= n_range.hi; ++n) {
    json row;
    row["n"] = n;
    row["family"] = spec.describe();
    if (x) {
      auto r = exact_ex_restricted((int)n, spec, *x, cfg);
      row["x"] = *x;
      if (r) {
        row["value"] = r->value;
        row["mode"] = r->exact ? "exact" : "lower-only";
        row["witness"] = to_graph6(r->witness);
        budget_hit = budget_hit || !r->exact;
        TableEntry e{r->value, r->exact, to_graph6(r->witness), r->nodes,
                     current_timestamp_utc()};
        table.upsert((int)n, spec, *x, e);
      } else {
        row["value"] = nullptr;
        row["note"] = "class is empty";
      }
    } else {
      auto existing = table.find((int)n, spec);
      if (existing && existing->exact) {
        row["value"] = existing->value;
        row["mode"] = "exact";
        row["witness"] = existing->witness_g6;
        row["cached"] = true;
      } else {
        OracleResult r = exact_ex((int)n, spec, cfg);
        row["value"] = r.value;
        row["mode"] = r.exact ? "exact" : "lower-only";
        row["witness"] = to_graph6(r.witness);
        row["nodes"] = r.nodes;
        budget_hit = budget_hit || !r.exact;
        TableEntry e{r.value, r.exact, to_graph6(r.witness), r.nodes,
                     current_timestamp_utc()};
        table.upsert((int)n, spec, std::nullopt, e);
      }
    }
    if (format == "json") {
      std::cout << row.dump() << "\n";
    } else {
      std::cout << "n=" << n << "  " << spec.describe() << "  ex="
                << (row.contains("value") && !row["value"].is_null()
                        ? std::to_string(row["value"].get<long long>())
                        : std::string("-"))
                << "  " << row.value("mode", "") << "\n";
    }
  }
  return budget_hit ? kExitBudget : 0;
}

// ---------------- table ----------------

int cmd_table(int l, int t, const Range& s_range, const Range& n_range,
              const std::string& cache_path, const std::string& format) {
  ExTable table = ExTable::load(cache_path);
  json rows = json::array();
  std::ostringstream text;
  text << "    s     n      lower      upper      exact  oracle  certified-by\n";
  for (long long s = s_range.lo; s <= s_range.hi; ++s)
    for (long long n = n_range.lo; n <= n_range.hi; ++n) {
      BoundReport r = evaluate_bounds(l, t, (int)s, n, &table);
      auto oracle_hit = table.find((int)n, FamilySpec::forbid_both(l, t, (int)s));
      json row;
      row["s"] = s;
      row["n"] = n;
      if (r.lower_bound) row["lower"] = *r.lower_bound;
      if (r.upper_bound) row["upper"] = *r.upper_bound;
      if (r.exact_value) {
        row["exact"] = *r.exact_value;
        row["certified_by"] = r.exact_source;
      }
      bool mismatch = false;
      if (oracle_hit) {
        row["oracle"] = oracle_hit->value;
        row["oracle_mode"] = oracle_hit->exact ? "exact" : "lower-only";
        if (r.exact_value && oracle_hit->exact && *r.exact_value != oracle_hit->value)
          mismatch = true;
      }
      if (mismatch) row["mismatch"] = true;
      rows.push_back(row);
      auto cell = [&](const char* key) {
        return row.contains(key) ? std::to_string(row[key].get<long long>())
                                 : std::string("-");
      };
      char buf[160];
      snprintf(buf, sizeof buf, "%5lld %5lld %10s %10s %10s %7s  %s%s\n", s, n,
               cell("lower").c_str(), cell("upper").c_str(), cell("exact").c_str(),
               cell("oracle").c_str(), row.value("certified_by", "-").c_str(),
               mismatch ? "  ** ORACLE MISMATCH **" : "");
      text << buf;
    }
  if (format == "json")
    std::cout << rows.dump(2) << "\n";
  else
    std::cout << text.str();
  return 0;
}

// ---------------- cache ----------------

int cmd_cache(const std::string& action, const std::string& cache_path) {
  ExTable table = ExTable::load(cache_path);
  if (action == "inspect") {
    for (const auto& [key, e] : table.entries()) {
      json j;
      j["n"] = key.n;
      j["family"] = key.spec.describe();
      if (key.x) j["x"] = *key.x;
      j["value"] = e.value;
      j["mode"] = e.exact ? "exact" : "lower-only";
      j["witness"] = e.witness_g6;
      j["node_count"] = e.node_count;
      j["timestamp"] = e.timestamp;
      std::cout << j.dump() << "\n";
    }
    std::cerr << table.entry_count() << " entries (all witnesses verified)\n";
    return 0;
  }
  if (action == "compact") {
    table.attach(cache_path);
    table.compact();
    std::cerr << "compacted to " << table.entry_count() << " entries\n";
    return 0;
  }
  std::cerr << "cache: unknown action '" << action << "' (inspect|compact)\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extremal edge counts for biclique-free graphs with bounded matching number"};
  app.require_subcommand(1);

  std::string cache_path = default_cache_path();
  app.add_option("--cache", cache_path, "ex-table path (env TURAN_CACHE)")
      ->capture_default_str();

  // construct
  auto* construct = app.add_subcommand("construct", "build a g1/g2 family graph");
  std::string variant = "g1", out_path, layout_path, s_piece_path;
  int c_l = 2, c_t = 2, c_s = 0, c_x = 0;
  long long c_n = 0;
  bool augment = false;
  construct->add_option("--variant", variant)->check(CLI::IsMember({"g1", "g2"}));
  construct->add_option("--l", c_l)->required();
  construct->add_option("--t", c_t)->required();
  construct->add_option("--s", c_s)->required();
  construct->add_option("--x", c_x)->required();
  construct->add_option("--n", c_n)->required();
  construct->add_option("--out", out_path, "write graph6 here (else inline in JSON)");
  construct->add_option("--layout", layout_path, "write the block layout JSON here");
  construct->add_option("--s-piece", s_piece_path, "graph6 file for the S piece (g2)");
  construct->add_flag("--augment", augment, "greedily add X-S edges to g2 (experimental)");

  // verify
  auto* verify = app.add_subcommand("verify", "check freeness and the matching bound");
  std::string graph_arg;
  int v_l = 2, v_t = 2;
  int v_s = -1;
  verify->add_option("graph", graph_arg, "graph6 file or - for stdin")->required();
  verify->add_option("--l", v_l)->required();
  verify->add_option("--t", v_t)->required();
  verify->add_option("--s", v_s, "matching bound (omit to skip)");
  bool v_adj = false;
  verify->add_flag("--adjacency", v_adj, "include the adjacency lists in the report");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "evaluate every bound formula");
  int b_l = 2, b_t = 2, b_s = 0;
  std::string b_n, b_format = "table";
  bounds->add_option("--l", b_l)->required();
  bounds->add_option("--t", b_t)->required();
  bounds->add_option("--s", b_s)->required();
  bounds->add_option("--n", b_n, "order or range a..b")->required();
  bounds->add_option("--format", b_format)->check(CLI::IsMember({"json", "table"}));

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact search for small orders");
  std::string o_n, o_klt, o_format = "json";
  int o_ms = -1, o_x = -1, o_workers = 1, o_cap = 0;
  std::uint64_t o_budget = 0;
  oracle->add_option("--n", o_n, "order or range a..b")->required();
  oracle->add_option("--forbid-klt", o_klt, "l,t");
  oracle->add_option("--forbid-matching", o_ms, "forbid a matching of s+1 edges");
  oracle->add_option("--x", o_x, "restrict to deficiency-set class x");
  oracle->add_option("--workers", o_workers);
  oracle->add_option("--budget", o_budget, "node budget (0 = unlimited)");
  oracle->add_option("--cap-override", o_cap, "raise the order cap deliberately");
  oracle->add_option("--format", o_format)->check(CLI::IsMember({"json", "table"}));

  // table
  auto* tablecmd = app.add_subcommand("table", "bounds vs oracle comparison table");
  int t_l = 2, t_t = 2;
  std::string t_s, t_n, t_format = "table";
  tablecmd->add_option("--l", t_l)->required();
  tablecmd->add_option("--t", t_t)->required();
  tablecmd->add_option("--s", t_s, "s or range a..b")->required();
  tablecmd->add_option("--n", t_n, "order or range a..b")->required();
  tablecmd->add_option("--format", t_format)->check(CLI::IsMember({"json", "table"}));

  // cache
  auto* cache = app.add_subcommand("cache", "inspect or compact the ex-table");
  std::string cache_action;
  cache->add_option("action", cache_action, "inspect|compact")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (construct->parsed())
      return cmd_construct(variant, c_l, c_t, c_s, c_x, c_n, out_path, layout_path,
                           cache_path, s_piece_path, augment);
    if (verify->parsed())
      return cmd_verify(graph_arg, v_l, v_t,
                        v_s >= 0 ? std::optional<int>(v_s) : std::nullopt, v_adj);
    if (bounds->parsed())
      return cmd_bounds(b_l, b_t, b_s, parse_range(b_n), cache_path, b_format);
    if (oracle->parsed()) {
      std::optional<std::pair<int, int>> klt;
      if (!o_klt.empty()) klt = parse_klt(o_klt);
      return cmd_oracle(parse_range(o_n), klt,
                        o_ms >= 0 ? std::optional<int>(o_ms) : std::nullopt,
                        o_x >= 0 ? std::optional<int>(o_x) : std::nullopt, o_workers,
                        o_budget, o_cap, cache_path, o_format);
    }
    if (tablecmd->parsed())
      return cmd_table(t_l, t_t, parse_range(t_s), parse_range(t_n), cache_path,
                       t_format);
    if (cache->parsed()) return cmd_cache(cache_action, cache_path);
  } catch (const Graph6Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
