#include "jset/jumpset.hpp"

#include <algorithm>
#include <sstream>

#include "jset/errors.hpp"

namespace jset {

bool JumpSet::contains(i64 i) const { return beta(i) > 0; }

int JumpSet::beta(i64 i) const {
  for (const auto& en : entries)
    if (en.i == i) return en.beta;
  return 0;
}

std::vector<i64> JumpSet::support() const {
  std::vector<i64> out;
  for (const auto& en : entries) out.push_back(en.i);
  return out;
}

std::vector<Point> JumpSet::graph() const {
  std::vector<Point> out;
  for (const auto& en : entries) out.push_back({en.i, en.beta});
  return out;
}

std::string validate(const JumpSet& js) {
  const Shift& s = js.shift;
  if (js.extended && !s.finite_t()) return "extended jump sets need a shift with finite T_rho";
  for (size_t k = 0; k < js.entries.size(); ++k) {
    const auto& en = js.entries[k];
    bool ok_index = s.in_t(en.i) || (js.extended && en.i == s.e_star());
    if (!ok_index)
      return "index " + std::to_string(en.i) + " not in " + (js.extended ? "T_rho*" : "T_rho");
    if (en.beta < 1) return "beta(" + std::to_string(en.i) + ") must be >= 1";
    if (k > 0) {
      const auto& pr = js.entries[k - 1];
      if (pr.i >= en.i) return "indices must be strictly increasing";
      if (pr.beta <= en.beta) return "beta must be strictly decreasing";
      if (s.iterate(pr.i, pr.beta) >= s.iterate(en.i, en.beta))
        return "i -> rho^beta(i) must be strictly increasing";
    }
  }
  return {};
}

JumpSet make_jumpset(const Shift& s, bool extended, std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  JumpSet js{s, extended, std::move(entries)};
  auto why = validate(js);
  if (!why.empty()) throw DomainError("invalid jump set: " + why);
  return js;
}

std::set<i64> to_subset(const JumpSet& js) {
  std::set<i64> a;
  const auto& en = js.entries;
  for (size_t k = 0; k < en.size(); ++k) {
    int n = (k + 1 < en.size()) ? en[k].beta - en[k + 1].beta : en[k].beta;
    i64 x = en[k].i;
    for (int t = 0; t < n; ++t, x = js.shift(x)) a.insert(x);
  }
  return a;
}

JumpSet from_subset(const Shift& s, bool extended, const std::set<i64>& a) {
  std::vector<i64> v(a.begin(), a.end());
  for (size_t k = 0; k + 1 < v.size(); ++k) {
    if (v[k] < 1) throw DomainError("(C.1): elements must be positive");
    if (s(v[k]) > v[k + 1])
      throw DomainError("(C.1) violated by pair (" + std::to_string(v[k]) + "," +
                        std::to_string(v[k + 1]) + "): rho(" + std::to_string(v[k]) +
                        ")=" + std::to_string(s(v[k])));
  }
  std::vector<Entry> entries;
  for (size_t k = 0; k < v.size(); ++k) {
    auto pre = s.preimage(v[k]);
    if (pre && a.count(*pre)) continue;
    bool ok = s.in_t(v[k]) || (extended && s.finite_t() && v[k] == s.e_star());
    if (!ok)
      throw DomainError("(C.2) violated: " + std::to_string(v[k]) + " lies in A - rho(A) but not in " +
                        (extended ? "T_rho*" : "T_rho"));
    entries.push_back({v[k], static_cast<int>(v.size() - k)});
  }
  return make_jumpset(s, extended, std::move(entries));
}

JumpSet extract(const Shift& s, bool extended, const std::vector<Point>& graph, Which which) {
  std::vector<Entry> out;
  for (size_t k = 0; k < graph.size(); ++k) {
    bool keep = true;
    for (size_t l = 0; l < graph.size() && keep; ++l) {
      if (l == k) continue;
      if (graph[l].a == graph[k].a) throw DomainError("extract: indices must be distinct");
      keep = which == Which::Minimal ? !leq_rho(s, graph[l], graph[k]) : !leq_rho(s, graph[k], graph[l]);
    }
    if (keep) out.push_back({graph[k].a, graph[k].b});
  }
  return make_jumpset(s, extended, std::move(out));
}

bool is_admissible(const JumpSet& js) {
  if (!js.shift.finite_t()) throw DomainError("is_admissible: shift has infinite T_rho");
  if (js.empty()) return false;
  return js.shift.iterate(js.min_i(), js.entries.front().beta) == js.shift.e_star();
}

namespace {

void tails(const Shift& s, const std::vector<i64>& idx, i64 prev_i, int prev_beta, i64 prev_reach,
           std::vector<Entry>& cur, std::vector<JumpSet>& out, bool extended) {
  for (i64 i : idx) {
    if (i <= prev_i) continue;
    for (int b = 1; b < prev_beta; ++b) {
      i64 reach = s.iterate(i, b);
      if (reach <= prev_reach) continue;
      cur.push_back({i, b});
      out.push_back(JumpSet{s, extended, cur});
      tails(s, idx, i, b, reach, cur, out, extended);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<JumpSet> enumerate(const Shift& s, bool extended, int beta_bound, bool admissible_only) {
  if (!s.finite_t()) throw DomainError("enumerate: shift has infinite T_rho");
  std::vector<i64> idx = extended ? s.tset_star() : s.tset();
  std::vector<JumpSet> out;
  std::vector<Entry> cur;
  if (admissible_only) {
    if (!extended) throw DomainError("enumerate: admissible jump sets are extended");
    int m = s.v_rho(s.e_star());
    i64 istar = s.root(s.e_star(), m);
    cur.push_back({istar, m});
    out.push_back(JumpSet{s, true, cur});
    tails(s, idx, istar, m, s.e_star(), cur, out, true);
    return out;
  }
  out.push_back(JumpSet{s, extended, {}});
  tails(s, idx, 0, beta_bound + 1, 0, cur, out, extended);
  return out;
}

std::string to_string(const JumpSet& js) {
  std::ostringstream os;
  os << "({";
  for (size_t k = 0; k < js.entries.size(); ++k) os << (k ? "," : "") << js.entries[k].i;
  os << "},(";
  for (size_t k = 0; k < js.entries.size(); ++k) os << (k ? "," : "") << js.entries[k].beta;
  os << "))";
  return os.str();
}

}  // namespace jset
