#include "jset/characters.hpp"

#include <algorithm>
#include <set>

#include "jset/errors.hpp"

namespace jset {

JumpSet jumps_of_character(const CharacterSummary& cs) {
  std::vector<Point> pts;
  for (const auto& [a, b] : cs.b) {
    if (b < 1) throw DomainError("character summary: b must be >= 1");
    pts.push_back({a, b});
  }
  return extract(cs.shift, cs.extended, pts, Which::Maximal);
}

int order_at_level(const CharacterSummary& cs, i64 i) {
  int best = 0;
  for (const auto& [j, b] : cs.b) best = std::max(best, b - cs.shift.hops_to_reach(j, i));
  return best;
}

namespace {

void same_shift(const JumpSet& a, const JumpSet& b) {
  if (a.shift != b.shift) throw DomainError("shift mismatch between candidate and module jump set");
  if (!a.shift.finite_t()) throw DomainError("compatibility needs a shift with finite T_rho");
}

// Conditions (1) and (2); fills max_set and c.
bool conditions_1_2(const JumpSet& cand, const JumpSet& mod, int f, int p, CompatWitness& w) {
  int c = 0;
  bool common = false;
  for (const auto& en : cand.entries) {
    int bp = mod.beta(en.i);
    if (bp == 0) continue;
    common = true;
    c = std::max(c, en.beta - bp);
  }
  if (c > 0)
    for (const auto& en : cand.entries)
      if (mod.contains(en.i) && en.beta - mod.beta(en.i) == c) w.max_set.push_back(en.i);
  w.c = c;
  if (!common) {
    w.reason = "(1): I and I' are disjoint";
    return false;
  }
  size_t n = w.max_set.size();
  bool count_ok = (p == 2) ? (n % 2 == 1) : (n == 1);
  if (!count_ok) {
    w.reason = "(1): |Max| = " + std::to_string(n);
    return false;
  }
  if (f > 1 && !(n == 1 && w.max_set[0] == cand.shift.e_star())) {
    w.reason = "(2): f > 1 and Max != {e*}";
    return false;
  }
  return true;
}

}  // namespace

CompatWitness check_compatibility(const JumpSet& cand, const JumpSet& mod, int f, int p) {
  same_shift(cand, mod);
  CompatWitness w;
  if (!conditions_1_2(cand, mod, f, p, w)) return w;
  for (const auto& en : mod.entries) {
    if (cand.contains(en.i)) continue;
    Point pt{en.i, w.c + en.beta};
    for (const auto& cj : cand.entries) {
      if (leq_rho(cand.shift, pt, {cj.i, cj.beta})) {
        w.reason = "(3): (" + std::to_string(cj.i) + "," + std::to_string(cj.beta) + ") dominates (" +
                   std::to_string(pt.a) + "," + std::to_string(pt.b) + ")";
        return w;
      }
    }
  }
  w.compatible = false;
  w.reason = "incompatible: (1), (2), (3) hold";
  return w;
}

bool is_compatible(const JumpSet& cand, const JumpSet& mod, int f, int p) {
  return check_compatibility(cand, mod, f, p).compatible;
}

bool is_compatible_cheap(const JumpSet& cand, const JumpSet& mod, int f, int p) {
  same_shift(cand, mod);
  CompatWitness w;
  if (!conditions_1_2(cand, mod, f, p, w)) return true;
  const Shift& s = cand.shift;
  for (const auto& en : mod.entries) {
    if (std::find(w.max_set.begin(), w.max_set.end(), en.i) != w.max_set.end()) continue;
    int lift = en.beta + w.c;
    if (en.i <= cand.max_i()) {
      auto ceil = *std::find_if(cand.entries.begin(), cand.entries.end(),
                                [&](const Entry& c) { return c.i >= en.i; });
      if (!(lift > ceil.beta)) return true;
    }
    if (en.i >= cand.min_i()) {
      auto floor = *std::find_if(cand.entries.rbegin(), cand.entries.rend(),
                                 [&](const Entry& c) { return c.i <= en.i; });
      if (!(s.iterate(en.i, lift) > s.iterate(floor.i, floor.beta))) return true;
    }
  }
  return false;
}

bool is_adequate(const JumpSet& cand, const JumpSet& mod, int f, int p) {
  same_shift(cand, mod);
  if (cand.empty() || mod.empty()) return true;
  auto as = to_subset(cand), ls = to_subset(mod);
  std::vector<i64> t(as.begin(), as.end()), lam(ls.begin(), ls.end());
  const int m = static_cast<int>(t.size()), l = static_cast<int>(lam.size());
  const int s = mod.entries.back().beta;
  const int window = l - (s - 1);
  if (window <= 0) return true;
  const i64 estar = cand.shift.e_star();
  for (int L = 1; L < m - (s - 1); ++L) {
    bool ok = true;
    std::vector<int> eq;
    bool shared = false;
    i64 x0 = 0;
    for (int i = 0; i < window && ok; ++i) {
      i64 x = (i < L) ? t[L - i - 1] : 0;
      i64 y = lam[l - i - (s - 1) - 1];
      if (i == 0) x0 = x;
      if (!mod.contains(y)) continue;
      if (x > y) ok = false;
      if (x == y) {
        eq.push_back(i);
        if (cand.contains(y)) shared = true;
      }
    }
    if (!ok || !shared) continue;
    int n = static_cast<int>(eq.size());
    bool count_ok = (p == 2) ? (n % 2 == 1) : (n == 1);
    if (!count_ok) continue;
    if (f > 1 && !(n == 1 && eq[0] == 0 && x0 == estar)) continue;
    return false;
  }
  return true;
}

std::vector<JumpSet> character_jumpset_family(const Shift& s, const std::optional<JumpSet>& module_js, int f,
                                              int p, int beta_bound) {
  if (!module_js) return enumerate(s, false, beta_bound, false);
  if (module_js->shift != s) throw DomainError("shift mismatch between module jump set and family shift");
  std::vector<JumpSet> out;
  for (auto& js : enumerate(s, true, beta_bound, false))
    if (is_compatible(js, *module_js, f, p)) out.push_back(std::move(js));
  return out;
}

std::vector<JumpSet> brute_force_character_jumpsets(const Shift& s, const std::optional<JumpSet>& module_js,
                                                    int p, int n) {
  const bool ext = module_js.has_value();
  std::vector<i64> idx = ext ? s.tset_star() : s.tset();
  const size_t k = idx.size();
  i64 pn = 1;
  for (int t = 0; t < n; ++t) pn *= p;
  std::vector<i64> rel(k, 0);  // relation coefficients p^{beta'(i)}
  if (ext)
    for (size_t t = 0; t < k; ++t) {
      int b = module_js->beta(idx[t]);
      if (b > 0) {
        rel[t] = 1;
        for (int r = 0; r < b; ++r) rel[t] = (rel[t] * p) % pn;
      }
    }
  // Levels beyond this carry no character values.
  i64 top = s.iterate(idx.back(), n) + 1;
  std::vector<std::vector<int>> hops(k, std::vector<int>(top + 2));
  for (size_t t = 0; t < k; ++t)
    for (i64 lev = 1; lev <= top + 1; ++lev) hops[t][lev] = s.hops_to_reach(idx[t], lev);

  std::set<std::vector<Entry>> seen;
  std::vector<i64> a(k, 0);
  std::vector<int> ord(k, 0);
  while (true) {
    i64 acc = 0;
    for (size_t t = 0; t < k; ++t) acc = (acc + rel[t] * a[t]) % pn;
    if (acc == 0) {
      for (size_t t = 0; t < k; ++t) ord[t] = a[t] == 0 ? 0 : n - vp(a[t], p);
      std::set<i64> jumps;
      int prev = -1;
      for (i64 lev = 1; lev <= top + 1; ++lev) {
        int o = 0;
        for (size_t t = 0; t < k; ++t) o = std::max(o, ord[t] - hops[t][lev]);
        if (prev >= 0 && o != prev) jumps.insert(lev - 1);
        prev = o;
      }
      seen.insert(from_subset(s, ext, jumps).entries);
    }
    size_t t = 0;
    while (t < k && ++a[t] == pn) a[t++] = 0;
    if (t == k) break;
  }
  std::vector<JumpSet> out;
  for (const auto& e : seen) out.push_back(JumpSet{s, ext, e});
  return out;
}

}  // namespace jset
