#pragma once

#include <set>
#include <string>
#include <vector>

#include "jset/shift.hpp"

namespace jset {

struct Entry {
  i64 i;
  int beta;
  bool operator==(const Entry& o) const { return i == o.i && beta == o.beta; }
  bool operator<(const Entry& o) const { return i != o.i ? i < o.i : beta < o.beta; }
};

struct JumpSet {
  Shift shift;
  bool extended = false;
  std::vector<Entry> entries;  // sorted by i

  bool empty() const { return entries.empty(); }
  size_t size() const { return entries.size(); }
  bool contains(i64 i) const;
  int beta(i64 i) const;  // 0 when i is not in I
  i64 min_i() const { return entries.front().i; }
  i64 max_i() const { return entries.back().i; }
  std::vector<i64> support() const;
  std::vector<Point> graph() const;

  bool operator==(const JumpSet& o) const {
    return extended == o.extended && entries == o.entries && shift == o.shift;
  }
  bool operator!=(const JumpSet& o) const { return !(*this == o); }
  // Order on entries only; used for map keys within one shift.
  bool operator<(const JumpSet& o) const {
    if (entries != o.entries) return entries < o.entries;
    return extended < o.extended;
  }
};

// Empty string when valid, otherwise the first violated condition.
std::string validate(const JumpSet& js);
JumpSet make_jumpset(const Shift& s, bool extended, std::vector<Entry> entries);

std::set<i64> to_subset(const JumpSet& js);
JumpSet from_subset(const Shift& s, bool extended, const std::set<i64>& a);

enum class Which { Minimal, Maximal };
JumpSet extract(const Shift& s, bool extended, const std::vector<Point>& graph, Which which);

bool is_admissible(const JumpSet& js);

std::vector<JumpSet> enumerate(const Shift& s, bool extended, int beta_bound, bool admissible_only);

// "({1,4},(2,1))" style
std::string to_string(const JumpSet& js);

}  // namespace jset
