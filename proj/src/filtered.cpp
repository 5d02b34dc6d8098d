#include "jset/filtered.hpp"

#include <algorithm>

#include "jset/errors.hpp"

namespace jset {

int ValuationVector::get(i64 i, int slot) const {
  auto it = coords.find({i, slot});
  return it == coords.end() ? kInfVal : it->second;
}

void ValuationVector::set(i64 i, int slot, int val) {
  bool is_star = extended && shift.finite_t() && i == shift.e_star();
  if (!is_star && !shift.in_t(i)) throw DomainError("vector index " + std::to_string(i) + " not in T_rho");
  if (slot < 1 || slot > (is_star ? 1 : f)) throw DomainError("vector slot out of range");
  if (val == kInfVal)
    coords.erase({i, slot});
  else
    coords[{i, slot}] = val;
}

int ValuationVector::min_at(i64 i) const {
  int m = kInfVal;
  for (const auto& [key, val] : coords)
    if (key.first == i) m = std::min(m, val);
  return m;
}

std::vector<i64> ValuationVector::indices() const { return extended ? shift.tset_star() : shift.tset(); }

JumpSet filt_ord(const ValuationVector& v) {
  if (!v.shift.finite_t()) throw DomainError("filt_ord: shift has infinite T_rho");
  std::vector<Point> pts;
  for (const auto& [key, val] : v.coords)
    if (val < 1) throw DomainError("filt_ord: valuation 0 entry at index " + std::to_string(key.first));
  for (i64 i : v.indices()) {
    int m = v.min_at(i);
    if (m != kInfVal) pts.push_back({i, m});
  }
  return extract(v.shift, v.extended, pts, Which::Minimal);
}

ValuationVector canonical_vector(const JumpSet& js, int f) {
  if (f < 1) throw DomainError("canonical_vector: f must be >= 1");
  ValuationVector v{js.shift, f, js.extended, {}};
  for (const auto& en : js.entries) v.set(en.i, 1, en.beta);
  return v;
}

std::vector<i64> quotient_weight_profile(const ValuationVector& v, int n_max) {
  std::vector<i64> g(n_max, kHuge);
  for (const auto& [key, val] : v.coords) {
    i64 w = v.shift.iterate(key.first, val);
    for (int n = val + 1; n <= n_max; ++n) g[n - 1] = std::min(g[n - 1], w);
  }
  return g;
}

JumpSet jumpset_from_profile(const Shift& s, bool extended, const std::vector<i64>& g) {
  std::vector<Entry> out;
  for (size_t n = 1; n < g.size(); ++n) {
    if (g[n] == g[n - 1]) continue;
    int b = static_cast<int>(n);  // g(b) != g(b+1)
    out.push_back({s.root(g[n], b), b});
  }
  return make_jumpset(s, extended, std::move(out));
}

int torsion_order(const JumpSet& js) {
  if (js.empty()) throw DomainError("torsion_order: empty jump set");
  return js.entries.back().beta;
}

}  // namespace jset
