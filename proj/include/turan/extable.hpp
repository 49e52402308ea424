// Persistent table of solved instances: (n, family, optional x) -> best known
// edge count, with a graph6 witness per entry. Backing file is JSON lines,
// append-only, last writer wins per key.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace turan {

struct FamilySpec {
  std::optional<std::pair<int, int>> klt;  // forbid K_{l,t}; kept normalized l <= t
  std::optional<int> matching_s;           // forbid M_{s+1}, i.e. nu <= s

  bool valid() const { return klt.has_value() || matching_s.has_value(); }
  void normalize() {
    if (klt && klt->first > klt->second) std::swap(klt->first, klt->second);
  }
  static FamilySpec forbid_klt(int l, int t) {
    FamilySpec f;
    f.klt = {l, t};
    f.normalize();
    return f;
  }
  static FamilySpec forbid_matching(int s) {
    FamilySpec f;
    f.matching_s = s;
    return f;
  }
  static FamilySpec forbid_both(int l, int t, int s) {
    FamilySpec f = forbid_klt(l, t);
    f.matching_s = s;
    return f;
  }
  std::string describe() const;

  friend auto operator<=>(const FamilySpec&, const FamilySpec&) = default;
};

struct TableKey {
  int n = 0;
  FamilySpec spec;
  std::optional<int> x;
  friend auto operator<=>(const TableKey&, const TableKey&) = default;
};

struct TableEntry {
  long long value = 0;
  bool exact = false;  // false = lower-only (budget-limited search)
  std::string witness_g6;
  std::uint64_t node_count = 0;
  std::string timestamp;
};

class ExTable {
 public:
  ExTable() = default;

  // Reads a JSON-lines file; every witness is re-verified against its spec
  // and value (freeness, matching bound, edge count, and x for restricted
  // entries small enough to check). Throws std::runtime_error naming the
  // file, line and cause on any failure. Missing file = empty table.
  static ExTable load(const std::string& path, bool verify_witnesses = true);

  // Future upserts are appended to this file.
  void attach(const std::string& path) { path_ = path; }
  const std::string& path() const { return path_; }

  std::optional<TableEntry> find(int n, const FamilySpec& spec,
                                 std::optional<int> x = std::nullopt) const;

  // Inserts/overwrites in memory and appends one line when attached.
  // An exact entry is never downgraded by a lower-only one.
  void upsert(int n, const FamilySpec& spec, std::optional<int> x, TableEntry entry);

  // Rewrites the attached file with one line per key.
  void compact() const;

  std::size_t entry_count() const { return map_.size(); }
  const std::map<TableKey, TableEntry>& entries() const { return map_; }

 private:
  std::map<TableKey, TableEntry> map_;
  std::string path_;
};

std::string current_timestamp_utc();

}  // namespace turan
