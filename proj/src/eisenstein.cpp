#include "jset/eisenstein.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "jset/errors.hpp"

namespace jset {

i64 EisensteinShape::base_e() const {
  i64 r = p - 1;
  for (int k = 0; k < j; ++k) r *= p;
  return r;
}

i64 EisensteinShape::val(int i) const {
  if (i == n) return 0;
  auto it = coeff_vals.find(i);
  return it == coeff_vals.end() ? kHuge : it->second;
}

void validate_shape(const EisensteinShape& s) {
  if (!is_prime(s.p)) throw DomainError("shape: p must be prime");
  if (s.f < 1 || s.j < 0 || s.n < 1) throw DomainError("shape: need f >= 1, j >= 0, n >= 1");
  for (const auto& [i, v] : s.coeff_vals) {
    if (i < 0 || i >= s.n) throw DomainError("shape: coefficient index out of range");
    if (v < 1) throw DomainError("shape: not Eisenstein, a_" + std::to_string(i) + " is a unit");
  }
  if (s.val(0) != 1) throw DomainError("shape: constant term must have valuation exactly 1");
}

bool is_strongly_separable(const EisensteinShape& s) {
  validate_shape(s);
  for (int i = 1; i <= s.n; ++i)
    if (i % s.p != 0 && s.val(i) < s.base_e()) return true;
  return false;
}

namespace {

i64 ipow(i64 b, int k) {
  i64 r = 1;
  while (k-- > 0) r *= b;
  return r;
}

struct RawPoint {
  i64 w;  // n v(a_i) + i
  int k;  // v_p(i)
};

// Minimal points of {(w / p^k, k + 1)} under rho_{inf,p}: reach is p * w, so
// a point is dominated by one with smaller-or-equal k and weight.
std::vector<RawPoint> minimal_points(std::vector<RawPoint> pts) {
  std::vector<RawPoint> out;
  for (size_t a = 0; a < pts.size(); ++a) {
    bool keep = true;
    for (size_t b = 0; b < pts.size() && keep; ++b) {
      if (a == b) continue;
      bool le = pts[b].k <= pts[a].k && pts[b].w <= pts[a].w;
      bool eq = pts[b].k == pts[a].k && pts[b].w == pts[a].w;
      if (le && (!eq || b < a)) keep = false;
    }
    if (keep) out.push_back(pts[a]);
  }
  return out;
}

std::vector<Entry> to_entries(const std::vector<RawPoint>& pts, int p) {
  std::vector<Entry> out;
  for (const auto& rp : pts) {
    i64 pk = ipow(p, rp.k);
    if (rp.w % pk != 0) throw std::logic_error("minimal shape point is not integral");
    out.push_back({rp.w / pk, rp.k + 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<int> alpha_sequence(const EisensteinShape& s) {
  validate_shape(s);
  const i64 be = s.base_e();
  std::vector<int> seq{s.n};
  int alpha = s.n;
  while (true) {
    const i64 va = s.val(alpha);
    const int k = vp(alpha, s.p);
    int next = -1;
    for (int a = alpha; a <= s.n && next < 0; ++a)
      if (s.val(a) == va && vp(a, s.p) < k) next = a;
    if (next < 0) {
      std::set<i64> levels;
      for (int a = 1; a <= s.n; ++a)
        if (s.val(a) != kHuge && s.val(a) > va && s.val(a) < be) levels.insert(s.val(a));
      for (i64 d : levels) {
        for (int a = 1; a <= s.n && next < 0; ++a)
          if (s.val(a) == d && vp(a, s.p) < k) next = a;
        if (next >= 0) break;
      }
    }
    if (next < 0) break;
    seq.push_back(next);
    alpha = next;
  }
  return seq;
}

ShapeJumps jump_set_of_shape(const EisensteinShape& s) {
  validate_shape(s);
  const int p = s.p;
  const int vpe = vp(s.e(), p);
  std::vector<RawPoint> pts;
  for (int i = 1; i <= s.n; ++i) {
    if (s.val(i) == kHuge) continue;
    int k = vp(i, p);
    if (k > vpe) continue;
    pts.push_back({s.n * s.val(i) + i, k});
  }
  auto entries = to_entries(minimal_points(pts), p);

  ShapeJumps out{make_jumpset(Shift::rho_inf(p), false, entries), std::nullopt, std::nullopt, {}, false, true};
  out.strongly_separable = is_strongly_separable(s);

  out.alphas = alpha_sequence(s);
  std::vector<RawPoint> apts;
  for (int a : out.alphas) apts.push_back({s.n * s.val(a) + a, vp(a, p)});
  std::vector<Entry> alt;
  try {
    alt = to_entries(apts, p);
  } catch (const std::logic_error&) {
    alt.clear();
  }
  out.routes_agree = alt == entries;

  JumpSet game{Shift::rho_ep(p, s.e()), true, entries};
  if (validate(game).empty()) {
    out.game = game;
    JumpSet field = game;
    for (auto& en : field.entries) en.beta += s.j;
    if (validate(field).empty()) out.field = field;
  }
  return out;
}

Polygon ramification_polygon(const JumpSet& js, int n, int j) {
  if (js.empty()) throw DomainError("ramification_polygon: empty jump set");
  const int p = js.shift.p();
  if (p < 2) throw DomainError("ramification_polygon: shift has no prime");
  std::vector<std::pair<i64, i64>> pts{{n, n}};
  for (const auto& en : js.entries) {
    int b = en.beta - 1 - j;
    if (b < 0) throw DomainError("ramification_polygon: beta below the cyclotomic level");
    i64 pb = ipow(p, b);
    pts.push_back({pb, pb * en.i});
  }
  return lower_hull(pts);
}

JumpSet tame_transform(const JumpSet& js, i64 d) {
  const Shift& s = js.shift;
  if (s.kind() != Shift::Kind::RhoEp) throw DomainError("tame_transform: needs a rho_{e,p} jump set");
  if (d < 1 || std::gcd(d, static_cast<i64>(s.p())) != 1) throw DomainError("tame_transform: gcd(d, p) must be 1");
  if (!is_admissible(js)) throw DomainError("tame_transform: jump set must be admissible");
  std::vector<Entry> out;
  for (const auto& en : js.entries) out.push_back({d * en.i, en.beta});
  return make_jumpset(Shift::rho_ep(s.p(), d * s.e()), true, std::move(out));
}

ConstraintReport extension_constraints(const JumpSet& js1, i64 d, const JumpSet& js2) {
  ConstraintReport rep;
  const Shift& s1 = js1.shift;
  if (s1.kind() != Shift::Kind::RhoEp || js2.shift != Shift::rho_ep(s1.p(), d * s1.e()))
    throw DomainError("extension_constraints: js2 must live over rho_{d e, p}");
  const int p = s1.p();
  const int v = vp(d, p);
  const i64 dprime = d / ipow(p, v);
  auto note = [&](bool ok, const std::string& what) {
    rep.ok = rep.ok && ok;
    rep.lines.push_back(std::string(ok ? "pass " : "FAIL ") + what);
  };
  note(is_admissible(js2), "admissible: js2 is admissible for " + js2.shift.describe());
  bool all_gaps = true;
  for (size_t k = 0; k < js1.entries.size(); ++k) {
    const auto& en = js1.entries[k];
    if (en.i == s1.e_star()) continue;
    if (k > 0 && js1.entries[k - 1].beta - en.beta <= v) {
      all_gaps = false;
      continue;
    }
    i64 target = dprime * en.i;
    int want = en.beta + v;
    note(js2.beta(target) == want, "constraining: i=" + std::to_string(en.i) + " needs beta2(" +
                                       std::to_string(target) + ")=" + std::to_string(want) + ", got " +
                                       std::to_string(js2.beta(target)));
  }
  if (js1.contains(s1.e_star())) {
    i64 target = d * s1.e_star();
    int want = js1.beta(s1.e_star());
    note(js2.beta(target) == want, "last guy: needs beta2(" + std::to_string(target) + ")=" + std::to_string(want) +
                                       ", got " + std::to_string(js2.beta(target)));
  }
  if (all_gaps) {
    bool ok = true;
    for (const auto& en : js1.entries)
      if (en.i != s1.e_star()) ok = ok && js2.beta(dprime * en.i) == en.beta + v;
    note(ok, "all of them: every consecutive gap exceeds v_p(d)");
  }
  if (v == 0) {
    bool ok = is_admissible(js1) && tame_transform(js1, d) == js2;
    note(ok, "tame: js2 = d * js1");
  }
  return rep;
}

namespace {

using BPoly = std::vector<Tower::BElem>;

void trim(const BaseRing& b, BPoly& a) {
  while (!a.empty() && b.is_zero(a.back())) a.pop_back();
}

BPoly padd(const BaseRing& b, BPoly x, const BPoly& y) {
  if (x.size() < y.size()) x.resize(y.size(), b.zero());
  for (size_t i = 0; i < y.size(); ++i) x[i] = b.add(x[i], y[i]);
  trim(b, x);
  return x;
}

BPoly psub(const BaseRing& b, BPoly x, const BPoly& y) {
  if (x.size() < y.size()) x.resize(y.size(), b.zero());
  for (size_t i = 0; i < y.size(); ++i) x[i] = b.sub(x[i], y[i]);
  trim(b, x);
  return x;
}

BPoly pmul(const BaseRing& b, const BPoly& x, const BPoly& y) {
  if (x.empty() || y.empty()) return {};
  BPoly r(x.size() + y.size() - 1, b.zero());
  for (size_t i = 0; i < x.size(); ++i) {
    if (b.is_zero(x[i])) continue;
    for (size_t k = 0; k < y.size(); ++k) r[i + k] = b.add(r[i + k], b.mul(x[i], y[k]));
  }
  trim(b, r);
  return r;
}

// Division by a monic polynomial.
std::pair<BPoly, BPoly> pdivmod(const BaseRing& b, BPoly x, const BPoly& m) {
  trim(b, x);
  const size_t dm = m.size() - 1;
  if (x.size() <= dm) return {{}, x};
  BPoly q(x.size() - dm, b.zero());
  for (size_t k = x.size(); k-- > dm;) {
    Tower::BElem c = x[k];
    if (b.is_zero(c)) continue;
    q[k - dm] = c;
    for (size_t i = 0; i <= dm; ++i) x[k - dm + i] = b.sub(x[k - dm + i], b.mul(c, m[i]));
  }
  x.resize(dm);
  trim(b, x);
  trim(b, q);
  return {q, x};
}

BPoly int_poly(const BaseRing& b, const std::vector<u64>& c) {
  BPoly r;
  for (u64 v : c) {
    Tower::BElem e = b.zero();
    e[0] = v % b.modulus();
    r.push_back(e);
  }
  trim(b, r);
  return r;
}

}  // namespace

int default_realize_precision(int p, i64 e) {
  const i64 d = p - 1;
  return static_cast<int>((4 * (e + 1) + d - 1) / d);
}

Realization realize(const JumpSet& js, int f, int n_digits) {
  const Shift& s = js.shift;
  if (s.kind() != Shift::Kind::RhoEp) throw DomainError("realize: needs a rho_{e,p} jump set");
  const int p = s.p();
  if (s.e() % (p - 1) != 0) throw DomainError("realize: (p-1) must divide e");
  if (!js.extended || !is_admissible(js)) throw DomainError("realize: jump set must be admissible");
  if (js.contains(s.e_star())) throw DomainError("realize: e* in I is not supported");
  const int n = static_cast<int>(s.e() / (p - 1));
  if (n_digits <= 0) n_digits = default_realize_precision(p, s.e());
  BaseRing b(p, f, 0, n_digits);

  // G = prod (1 + x^i)^{p^{beta-1}} - zeta_p
  std::vector<u64> ip{1};
  for (const auto& en : js.entries) {
    std::vector<u64> fac(en.i + 1, 0);
    fac[0] = 1;
    fac[en.i] = 1;
    for (int k = 0; k < en.beta - 1; ++k) {
      std::vector<u64> acc{1};
      for (int r = 0; r < p; ++r) {
        std::vector<u64> nx(acc.size() + fac.size() - 1, 0);
        for (size_t a = 0; a < acc.size(); ++a)
          for (size_t c = 0; c < fac.size(); ++c) nx[a + c] = b.addmod(nx[a + c], b.mulmod(acc[a], fac[c]));
        acc = std::move(nx);
      }
      fac = std::move(acc);
    }
    std::vector<u64> nx(ip.size() + fac.size() - 1, 0);
    for (size_t a = 0; a < ip.size(); ++a)
      for (size_t c = 0; c < fac.size(); ++c) nx[a + c] = b.addmod(nx[a + c], b.mulmod(ip[a], fac[c]));
    ip = std::move(nx);
  }
  BPoly big = int_poly(b, ip);
  big[0] = b.sub(big[0], b.add(b.one(), b.y()));
  if (static_cast<int>(big.size()) <= n) throw std::logic_error("realize: G has too small degree");
  for (int k = 0; k < n; ++k)
    if (b.valuation(big[k]) < 1) throw DomainError("realize: Newton polygon of G is not of the expected shape");
  if (b.valuation(big[n]) != 0) throw DomainError("realize: Newton polygon of G is not of the expected shape");

  // Hensel lift of G = other * eis with eis monic, starting from x^n * (G div x^n).
  BPoly eis(n + 1, b.zero());
  eis[n] = b.one();
  BPoly other(big.begin() + n, big.end());
  // s = other^{-1} mod x^n, t = (1 - s other) / x^n, so s other + t eis = 1.
  BPoly sinv(n, b.zero());
  const Tower::BElem c0inv = b.inverse(other[0]);
  for (int k = 0; k < n; ++k) {
    Tower::BElem acc = k == 0 ? b.one() : b.zero();
    for (int i = 1; i <= k && i < static_cast<int>(other.size()); ++i) acc = b.sub(acc, b.mul(other[i], sinv[k - i]));
    sinv[k] = b.mul(acc, c0inv);
  }
  trim(b, sinv);
  BPoly rest = psub(b, BPoly{b.one()}, pmul(b, sinv, other));
  BPoly tco;
  for (size_t k = n; k < rest.size(); ++k) tco.push_back(rest[k]);
  for (size_t k = 0; k < std::min<size_t>(n, rest.size()); ++k)
    if (!b.is_zero(rest[k])) throw std::logic_error("realize: Bezout setup failed");
  BPoly sco = sinv;

  bool done = false;
  for (int it = 0; it < 64; ++it) {
    BPoly err = psub(b, big, pmul(b, other, eis));
    if (err.empty()) {
      done = true;
      break;
    }
    auto [q, r] = pdivmod(b, pmul(b, sco, err), eis);
    BPoly other2 = padd(b, padd(b, other, pmul(b, tco, err)), pmul(b, q, other));
    BPoly eis2 = padd(b, eis, r);
    BPoly bb = psub(b, padd(b, pmul(b, sco, other2), pmul(b, tco, eis2)), BPoly{b.one()});
    auto [c, dd] = pdivmod(b, pmul(b, sco, bb), eis2);
    sco = psub(b, sco, dd);
    tco = psub(b, psub(b, tco, pmul(b, tco, bb)), pmul(b, c, other2));
    other = std::move(other2);
    eis = std::move(eis2);
  }
  if (!done) throw PrecisionError("realize: Hensel residual did not vanish", 2L * n_digits);

  Realization out;
  out.precision = n_digits;
  eis.resize(n + 1, b.zero());
  out.g.assign(eis.begin(), eis.begin() + n);
  out.shape = EisensteinShape{p, f, 0, n, {}};
  for (int i = 0; i < n; ++i) {
    i64 v = b.valuation(out.g[i]);
    if (v != kHuge) out.shape.coeff_vals[i] = v;
  }
  validate_shape(out.shape);
  return out;
}

EisensteinShape shape_of(const Tower& t) {
  const BaseRing& b = t.base();
  EisensteinShape s{b.p(), b.f(), b.j(), t.n(), {}};
  for (int i = 0; i < t.n(); ++i) {
    i64 v = b.valuation(t.g()[i]);
    if (v != kHuge) s.coeff_vals[i] = v;
  }
  return s;
}

std::vector<Tower::BElem> polynomial_of_shape(const EisensteinShape& s, const BaseRing& b, Rng& rng) {
  validate_shape(s);
  if (b.p() != s.p || b.f() != s.f || b.j() != s.j) throw DomainError("polynomial_of_shape: base ring mismatch");
  std::vector<Tower::BElem> g(s.n, b.zero());
  for (const auto& [i, v] : s.coeff_vals) {
    Tower::BElem a = random_unit(b, rng);
    for (i64 k = 0; k < v; ++k) a = b.mul(a, b.y());
    if (b.valuation(a) != v) throw PrecisionError("polynomial_of_shape: valuation beyond precision", 2L * b.precision());
    g[i] = a;
  }
  return g;
}

EisensteinShape random_separable_shape(int p, int f, int j, int n, Rng& rng) {
  EisensteinShape s{p, f, j, n, {{0, 1}}};
  const i64 be = s.base_e();
  if (be == 1 && n % p == 0) throw DomainError("no strongly separable shape with this p, j and n");
  for (int tries = 0; tries < 100000; ++tries) {
    s.coeff_vals = {{0, 1}};
    for (int i = 1; i < n; ++i) {
      u64 pick = rng.below(static_cast<u64>(be + 2));
      if (pick <= static_cast<u64>(be)) s.coeff_vals[i] = static_cast<i64>(pick) + 1;
    }
    if (is_strongly_separable(s)) return s;
  }
  throw std::logic_error("random_separable_shape: no separable shape found");
}

std::vector<Tower::BElem> substitute_power(const std::vector<Tower::BElem>& g, const BaseRing& b, int d) {
  if (d < 1) throw DomainError("substitute_power: d must be >= 1");
  const int n = static_cast<int>(g.size());
  std::vector<Tower::BElem> out(static_cast<size_t>(n) * d, b.zero());
  for (int i = 0; i < n; ++i) out[static_cast<size_t>(i) * d] = g[i];
  return out;
}

}  // namespace jset
