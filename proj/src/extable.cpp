#include "turan/extable.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "turan/forbidden.hpp"
#include "turan/graph6.hpp"
#include "turan/matching.hpp"

namespace turan {

using nlohmann::json;

std::string FamilySpec::describe() const {
  std::ostringstream os;
  bool first = true;
  if (klt) {
    os << "K" << klt->first << "," << klt->second;
    first = false;
  }
  if (matching_s) {
    if (!first) os << "+";
    os << "M" << (*matching_s + 1);
  }
  return os.str();
}

std::string current_timestamp_utc() {
  auto now = std::chrono::system_clock::now();
  std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

json entry_to_json(const TableKey& key, const TableEntry& e) {
  json j;
  j["n"] = key.n;
  if (key.spec.klt) j["klt"] = {key.spec.klt->first, key.spec.klt->second};
  if (key.spec.matching_s) j["ms"] = *key.spec.matching_s;
  if (key.x) j["x"] = *key.x;
  j["value"] = e.value;
  j["mode"] = e.exact ? "exact" : "lower-only";
  j["witness"] = e.witness_g6;
  j["timestamp"] = e.timestamp;
  j["node_count"] = e.node_count;
  return j;
}

void verify_entry(const TableKey& key, const TableEntry& e) {
  Graph w = from_graph6(e.witness_g6);
  if (w.order() != key.n) throw std::runtime_error("witness order mismatch");
  if (w.size() != e.value) throw std::runtime_error("witness edge count mismatch");
  if (key.spec.klt && !is_biclique_free(w, key.spec.klt->first, key.spec.klt->second))
    throw std::runtime_error("witness violates the biclique constraint");
  if (key.spec.matching_s && !is_matching_bounded(w, *key.spec.matching_s).bounded)
    throw std::runtime_error("witness violates the matching bound");
  if (key.x && key.n <= kXGCap) {
    if (!key.spec.matching_s) throw std::runtime_error("restricted entry without matching bound");
    if (largest_tb_set(w, *key.spec.matching_s).size != *key.x)
      throw std::runtime_error("witness has the wrong x value");
  }
}

}  // namespace

ExTable ExTable::load(const std::string& path, bool verify_witnesses) {
  ExTable table;
  table.path_ = path;
  std::ifstream in(path);
  if (!in.is_open()) return table;  // absent file = empty table
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      json j = json::parse(line);
      TableKey key;
      key.n = j.at("n").get<int>();
      if (j.contains("klt"))
        key.spec.klt = {j["klt"][0].get<int>(), j["klt"][1].get<int>()};
      if (j.contains("ms")) key.spec.matching_s = j["ms"].get<int>();
      key.spec.normalize();
      if (!key.spec.valid()) throw std::runtime_error("entry has no constraints");
      if (j.contains("x")) key.x = j["x"].get<int>();
      TableEntry e;
      e.value = j.at("value").get<long long>();
      std::string mode = j.at("mode").get<std::string>();
      if (mode != "exact" && mode != "lower-only")
        throw std::runtime_error("unknown mode '" + mode + "'");
      e.exact = mode == "exact";
      e.witness_g6 = j.at("witness").get<std::string>();
      if (j.contains("timestamp")) e.timestamp = j["timestamp"].get<std::string>();
      if (j.contains("node_count")) e.node_count = j["node_count"].get<std::uint64_t>();
      if (verify_witnesses) verify_entry(key, e);
      table.map_[key] = std::move(e);  // last writer wins
    } catch (const std::exception& ex) {
      throw std::runtime_error("table load failed: " + path + ":" +
                               std::to_string(lineno) + ": " + ex.what());
    }
  }
  return table;
}

std::optional<TableEntry> ExTable::find(int n, const FamilySpec& spec,
                                        std::optional<int> x) const {
  FamilySpec norm = spec;
  norm.normalize();
  auto it = map_.find(TableKey{n, norm, x});
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void ExTable::upsert(int n, const FamilySpec& spec, std::optional<int> x,
                     TableEntry entry) {
  FamilySpec norm = spec;
  norm.normalize();
  TableKey key{n, norm, x};
  auto it = map_.find(key);
  if (it != map_.end() && it->second.exact && !entry.exact) return;
  map_[key] = entry;
  if (!path_.empty()) {
    std::ofstream out(path_, std::ios::app);
    if (!out.is_open())
      throw std::runtime_error("table append failed: cannot open " + path_);
    out << entry_to_json(key, entry).dump() << "\n";
    if (!out.good())
      throw std::runtime_error("table append failed: write error on " + path_);
  }
}

void ExTable::compact() const {
  if (path_.empty()) throw std::runtime_error("compact: no file attached");
  std::string tmp = path_ + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out.is_open()) throw std::runtime_error("compact: cannot open " + tmp);
    for (const auto& [key, e] : map_) out << entry_to_json(key, e).dump() << "\n";
    if (!out.good()) throw std::runtime_error("compact: write error on " + tmp);
  }
  if (std::rename(tmp.c_str(), path_.c_str()) != 0)
    throw std::runtime_error("compact: rename failed for " + path_);
}

}  // namespace turan
