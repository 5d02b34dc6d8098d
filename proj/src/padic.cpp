#include "jset/padic.hpp"

#include <algorithm>
#include <climits>
#include <optional>
#include <stdexcept>
#include <string>

#include "jset/errors.hpp"

namespace jset {

namespace {

u64 ipow(u64 b, int k) {
  u64 r = 1;
  while (k-- > 0) r *= b;
  return r;
}

// Polynomials over F_p, low to high.
std::vector<u64> poly_mod_p(std::vector<u64> a, const std::vector<u64>& m, u64 p) {
  const size_t dm = m.size() - 1;
  u64 inv_lead = 1;
  for (u64 k = 1; k < p; ++k)
    if (m[dm] * k % p == 1) inv_lead = k;
  while (a.size() > dm) {
    u64 c = a.back() * inv_lead % p;
    if (c != 0)
      for (size_t i = 0; i <= dm; ++i) {
        size_t at = a.size() - 1 - dm + i;
        a[at] = (a[at] + p * p - c * m[i] % p) % p;
      }
    a.pop_back();
  }
  return a;
}

bool all_zero(const std::vector<u64>& a) {
  return std::all_of(a.begin(), a.end(), [](u64 v) { return v == 0; });
}

}  // namespace

std::vector<u64> smallest_irreducible(int p, int f) {
  if (f < 1) throw DomainError("unramified degree must be >= 1");
  const u64 up = static_cast<u64>(p);
  const u64 count = ipow(up, f);
  for (u64 code = 0; code < count; ++code) {
    std::vector<u64> cand(f + 1, 0);
    cand[f] = 1;
    u64 c = code;
    for (int i = 0; i < f; ++i, c /= up) cand[i] = c % up;
    if (f == 1) return cand;
    if (cand[0] == 0) continue;
    bool irreducible = true;
    for (int d = 1; 2 * d <= f && irreducible; ++d) {
      const u64 nd = ipow(up, d);
      for (u64 dc = 0; dc < nd && irreducible; ++dc) {
        std::vector<u64> div(d + 1, 0);
        div[d] = 1;
        u64 x = dc;
        for (int i = 0; i < d; ++i, x /= up) div[i] = x % up;
        if (all_zero(poly_mod_p(cand, div, up))) irreducible = false;
      }
    }
    if (irreducible) return cand;
  }
  throw std::logic_error("no irreducible polynomial found");
}

BaseRing::BaseRing(int p, int f, int j, int n_digits) : p_(p), f_(f), j_(j), n_(n_digits) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  if (f < 1 || j < 0) throw DomainError("need f >= 1 and j >= 0");
  if (n_digits < 2) throw DomainError("precision must be >= 2 digits");
  long double lim = 1;
  for (int k = 0; k < n_digits; ++k) lim *= p;
  if (lim > 4.0e18L) throw DomainError("p^N must stay below 2^62");
  mod_ = ipow(static_cast<u64>(p), n_digits);
  d_ = static_cast<int>(ipow(static_cast<u64>(p), j)) * (p - 1);
  h_ = smallest_irreducible(p, f);
  // Phi_{p^{j+1}}(1+y) = sum_{k<p} (1+y)^{k p^j}
  const int pj = static_cast<int>(ipow(static_cast<u64>(p), j));
  phi_.assign(d_ + 1, 0);
  std::vector<u64> binom{1};  // (1+y)^t
  for (int t = 0; t <= d_; ++t) {
    if (t % pj == 0)
      for (size_t i = 0; i < binom.size(); ++i) phi_[i] = addmod(phi_[i], binom[i]);
    std::vector<u64> next(binom.size() + 1, 0);
    for (size_t i = 0; i < binom.size(); ++i) {
      next[i] = addmod(next[i], binom[i]);
      next[i + 1] = addmod(next[i + 1], binom[i]);
    }
    binom = std::move(next);
  }
  if (phi_[d_] != 1) throw std::logic_error("cyclotomic modulus not monic");
}

u64 BaseRing::mulmod(u64 a, u64 b) const {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % mod_);
}

u64 BaseRing::reduce(i64 v) const {
  i64 m = static_cast<i64>(mod_);
  i64 r = v % m;
  return static_cast<u64>(r < 0 ? r + m : r);
}

BaseRing::Elem BaseRing::one() const {
  Elem r = zero();
  r[0] = 1 % mod_;
  return r;
}

BaseRing::Elem BaseRing::y() const {
  Elem r = zero();
  if (d_ == 1) {
    // y = -phi_0 when D = 1
    r[0] = submod(0, phi_[0]);
  } else {
    r[f_] = 1;
  }
  return r;
}

BaseRing::Elem BaseRing::from_int(i64 v) const {
  Elem r = zero();
  r[0] = reduce(v);
  return r;
}

BaseRing::Elem BaseRing::add(const Elem& a, const Elem& b) const {
  Elem r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = addmod(a[i], b[i]);
  return r;
}

BaseRing::Elem BaseRing::sub(const Elem& a, const Elem& b) const {
  Elem r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = submod(a[i], b[i]);
  return r;
}

BaseRing::Elem BaseRing::neg(const Elem& a) const { return sub(zero(), a); }

BaseRing::Elem BaseRing::scale(const Elem& a, u64 c) const {
  Elem r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], c);
  return r;
}

std::vector<u64> BaseRing::zq_mul(const std::vector<u64>& a, const std::vector<u64>& b) const {
  if (f_ == 1) return {mulmod(a[0], b[0])};
  std::vector<u64> t(2 * f_ - 1, 0);
  for (int i = 0; i < f_; ++i) {
    if (a[i] == 0) continue;
    for (int k = 0; k < f_; ++k) t[i + k] = addmod(t[i + k], mulmod(a[i], b[k]));
  }
  for (int k = 2 * f_ - 2; k >= f_; --k) {
    u64 c = t[k];
    if (c == 0) continue;
    for (int i = 0; i < f_; ++i) t[k - f_ + i] = submod(t[k - f_ + i], mulmod(c, h_[i]));
  }
  t.resize(f_);
  return t;
}

std::vector<u64> BaseRing::zq_pow(std::vector<u64> a, u64 k) const {
  std::vector<u64> r(f_, 0);
  r[0] = 1 % mod_;
  while (k > 0) {
    if (k & 1) r = zq_mul(r, a);
    a = zq_mul(a, a);
    k >>= 1;
  }
  return r;
}

std::vector<u64> BaseRing::teichmuller(const std::vector<u64>& residue) const {
  const u64 q = ipow(static_cast<u64>(p_), f_);
  std::vector<u64> x(f_);
  for (int a = 0; a < f_; ++a) x[a] = residue[a] % static_cast<u64>(p_);
  for (int it = 0; it <= n_ + 1; ++it) {
    auto nx = zq_pow(x, q);
    if (nx == x) return x;
    x = std::move(nx);
  }
  throw std::logic_error("Teichmuller iteration did not stabilize");
}

BaseRing::Elem BaseRing::embed(const std::vector<u64>& zq) const {
  Elem r = zero();
  for (int a = 0; a < f_; ++a) r[a] = zq[a] % mod_;
  return r;
}

BaseRing::Elem BaseRing::mul(const Elem& a, const Elem& b) const {
  const size_t f = f_;
  std::vector<std::vector<u64>> t(2 * d_ - 1, std::vector<u64>(f, 0));
  std::vector<u64> ca(f), cb(f);
  for (int i = 0; i < d_; ++i) {
    std::copy(a.begin() + i * f, a.begin() + (i + 1) * f, ca.begin());
    if (all_zero(ca)) continue;
    for (int k = 0; k < d_; ++k) {
      std::copy(b.begin() + k * f, b.begin() + (k + 1) * f, cb.begin());
      if (all_zero(cb)) continue;
      auto pr = zq_mul(ca, cb);
      for (size_t x = 0; x < f; ++x) t[i + k][x] = addmod(t[i + k][x], pr[x]);
    }
  }
  for (int k = 2 * d_ - 2; k >= d_; --k) {
    for (int i = 0; i < d_; ++i) {
      if (phi_[i] == 0) continue;
      for (size_t x = 0; x < f; ++x) t[k - d_ + i][x] = submod(t[k - d_ + i][x], mulmod(t[k][x], phi_[i]));
    }
  }
  Elem r = zero();
  for (int i = 0; i < d_; ++i)
    for (size_t x = 0; x < f; ++x) r[i * f + x] = t[i][x];
  return r;
}

BaseRing::Elem BaseRing::inverse(const Elem& a) const {
  std::vector<u64> res(a.begin(), a.begin() + f_);
  bool unit = false;
  for (u64 v : res) unit = unit || (v % static_cast<u64>(p_) != 0);
  if (!unit) throw DomainError("inverse of a non-unit");
  const u64 q = ipow(static_cast<u64>(p_), f_);
  Elem z = embed(zq_pow(res, q - 2));
  const Elem two = from_int(2);
  for (int it = 0; it < 128; ++it) {
    Elem az = mul(a, z);
    if (az == one()) return z;
    z = mul(z, sub(two, az));
  }
  throw std::logic_error("Newton inversion did not converge");
}

bool BaseRing::is_zero(const Elem& a) const { return all_zero(a); }

i64 BaseRing::valuation(const Elem& a) const {
  i64 best = kHuge;
  for (int b = 0; b < d_; ++b)
    for (int x = 0; x < f_; ++x) {
      u64 c = a[b * f_ + x];
      if (c == 0) continue;
      best = std::min<i64>(best, static_cast<i64>(d_) * vp(static_cast<i64>(c), p_) + b);
    }
  return best;
}

Tower::Tower(int p, int f, int j, std::vector<BElem> g_lower, int n_digits)
    : base_(p, f, j, n_digits), n_(static_cast<int>(g_lower.size())), g_(std::move(g_lower)) {
  if (n_ < 1) throw DomainError("Eisenstein polynomial must have degree >= 1");
  for (int i = 0; i < n_; ++i) {
    if (g_[i].size() != base_.zero().size()) throw DomainError("coefficient has wrong number of coordinates");
    for (auto& c : g_[i]) c %= base_.modulus();
    i64 v = base_.valuation(g_[i]);
    if (i == 0 && v != 1) throw DomainError("not Eisenstein: constant term must have valuation exactly 1");
    if (v < 1) throw DomainError("not Eisenstein: coefficient " + std::to_string(i) + " is a unit");
  }
}

Tower::Elem Tower::zero() const { return Elem(n_, base_.zero()); }

Tower::Elem Tower::one() const {
  Elem r = zero();
  r[0] = base_.one();
  return r;
}

Tower::Elem Tower::from_base(const BElem& b) const {
  Elem r = zero();
  r[0] = b;
  return r;
}

Tower::Elem Tower::x_pow(int c) const {
  Elem r = one();
  Elem x = zero();
  if (n_ == 1) {
    x[0] = base_.neg(g_[0]);
  } else {
    x[1] = base_.one();
  }
  for (int k = 0; k < c; ++k) r = mul(r, x);
  return r;
}

Tower::Elem Tower::add(const Elem& a, const Elem& b) const {
  Elem r(n_);
  for (int i = 0; i < n_; ++i) r[i] = base_.add(a[i], b[i]);
  return r;
}

Tower::Elem Tower::sub(const Elem& a, const Elem& b) const {
  Elem r(n_);
  for (int i = 0; i < n_; ++i) r[i] = base_.sub(a[i], b[i]);
  return r;
}

Tower::Elem Tower::mul(const Elem& a, const Elem& b) const {
  std::vector<BElem> t(2 * n_ - 1, base_.zero());
  for (int i = 0; i < n_; ++i) {
    if (base_.is_zero(a[i])) continue;
    for (int k = 0; k < n_; ++k) {
      if (base_.is_zero(b[k])) continue;
      t[i + k] = base_.add(t[i + k], base_.mul(a[i], b[k]));
    }
  }
  for (int k = 2 * n_ - 2; k >= n_; --k) {
    if (base_.is_zero(t[k])) continue;
    for (int i = 0; i < n_; ++i) t[k - n_ + i] = base_.sub(t[k - n_ + i], base_.mul(t[k], g_[i]));
  }
  t.resize(n_);
  return t;
}

Tower::Elem Tower::pow(Elem a, u64 k) const {
  Elem r = one();
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

bool Tower::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [&](const BElem& b) { return base_.is_zero(b); });
}

i64 Tower::valuation(const Elem& a) const {
  i64 best = kHuge;
  for (int c = 0; c < n_; ++c) {
    i64 v = base_.valuation(a[c]);
    if (v != kHuge) best = std::min(best, v * n_ + c);
  }
  return best;
}

std::vector<u64> Tower::residue(const Elem& a, i64 w) const {
  const i64 ee = e();
  const i64 vpart = w / ee, rem = w % ee;
  const int b = static_cast<int>(rem / n_), c = static_cast<int>(rem % n_);
  const int f = base_.f();
  const u64 p = static_cast<u64>(base_.p());
  u64 scale = 1;
  for (i64 k = 0; k < vpart; ++k) scale *= p;
  std::vector<u64> out(f);
  for (int x = 0; x < f; ++x) {
    u64 coef = a[c][b * f + x];
    if (coef % scale != 0) throw std::logic_error("residue taken below the valuation");
    out[x] = (coef / scale) % p;
  }
  return out;
}

namespace {

// Solve M z = t over F_p (M given by columns). Empty optional when unsolvable.
std::optional<std::vector<u64>> solve_mod_p(std::vector<std::vector<u64>> cols, std::vector<u64> t, u64 p) {
  const size_t n = t.size(), k = cols.size();
  std::vector<std::vector<u64>> a(n, std::vector<u64>(k + 1));
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < k; ++c) a[r][c] = cols[c][r] % p;
    a[r][k] = t[r] % p;
  }
  auto inv = [&](u64 v) {
    for (u64 x = 1; x < p; ++x)
      if (v * x % p == 1) return x;
    return u64{0};
  };
  std::vector<int> pivot_col;
  size_t row = 0;
  for (size_t c = 0; c < k && row < n; ++c) {
    size_t sel = row;
    while (sel < n && a[sel][c] == 0) ++sel;
    if (sel == n) continue;
    std::swap(a[sel], a[row]);
    u64 iv = inv(a[row][c]);
    for (auto& v : a[row]) v = v * iv % p;
    for (size_t r = 0; r < n; ++r) {
      if (r == row || a[r][c] == 0) continue;
      u64 fct = a[r][c];
      for (size_t x = 0; x <= k; ++x) a[r][x] = (a[r][x] + p * p - fct * a[row][x] % p) % p;
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  for (size_t r = row; r < n; ++r)
    if (a[r][k] != 0) return std::nullopt;
  std::vector<u64> z(k, 0);
  for (size_t r = 0; r < pivot_col.size(); ++r) z[pivot_col[r]] = a[r][k];
  return z;
}

Tower::Elem shot(const Tower& t, const std::vector<u64>& eps, i64 index, int len) {
  const BaseRing& b = t.base();
  Tower::Elem base = t.from_base(b.embed(b.teichmuller(eps)));
  Tower::Elem s = t.add(t.one(), t.mul(base, t.x_pow(static_cast<int>(index))));
  for (int k = 0; k < len; ++k) s = t.pow(s, static_cast<u64>(b.p()));
  return s;
}

}  // namespace

JumpSet field_jump_set(const Tower& t) {
  const BaseRing& b = t.base();
  const int p = b.p(), f = b.f();
  const Shift s = Shift::rho_ep(p, t.e());
  const i64 estar = s.e_star();
  const int m = s.v_rho(estar);
  const i64 istar = s.root(estar, m);
  const long need = 2L * t.precision();

  Tower::Elem u = t.from_base(b.add(b.one(), b.y()));
  int mcur = INT_MAX;
  std::vector<Entry> entries;
  while (mcur > 0) {
    Tower::Elem d = t.sub(u, t.one());
    const i64 w = t.valuation(d);
    if (mcur != INT_MAX) {
      const i64 lim = s.iterate(estar, mcur - 1);
      if (w > lim) {
        if (lim >= t.ceiling()) throw PrecisionError("field_jump_set: inert threshold above precision", need);
        break;
      }
    }
    if (w >= t.ceiling()) throw PrecisionError("field_jump_set: weight reached the precision ceiling", need);
    const int len = s.v_rho(w);
    const i64 idx = s.root(w, len);
    const bool special = idx == istar && len >= m;

    std::vector<std::vector<u64>> cols;
    for (int a = 0; a < f; ++a) {
      std::vector<u64> ea(f, 0);
      ea[a] = 1;
      Tower::Elem sa = t.sub(shot(t, ea, idx, len), t.one());
      if (t.valuation(sa) < w) throw std::logic_error("shot weight below target");
      cols.push_back(t.residue(sa, w));
    }
    auto target = t.residue(d, w);
    for (auto& v : target) v = (static_cast<u64>(p) - v) % static_cast<u64>(p);
    auto sol = solve_mod_p(cols, target, static_cast<u64>(p));
    if (!sol) {
      if (!special) throw std::logic_error("leading term map not surjective off the e* orbit");
      entries.push_back({estar, len - m + 1});
      break;
    }
    u = t.mul(u, shot(t, *sol, idx, len));
    if (len < mcur) {
      entries.push_back({idx, len + 1});
      mcur = len;
    }
  }
  for (auto& en : entries) en.beta += b.j();
  return make_jumpset(s, true, std::move(entries));
}

int default_oracle_precision(int p, int j, i64 e) {
  const Shift s = Shift::rho_ep(p, e);
  const i64 estar = s.e_star();
  const i64 top = s.iterate(estar, s.v_rho(estar));
  (void)j;
  return static_cast<int>(top / e) + 3;
}

Polygon lower_hull(std::vector<std::pair<i64, i64>> pts) {
  std::sort(pts.begin(), pts.end());
  std::vector<std::pair<i64, i64>> uniq;
  for (const auto& pt : pts)
    if (uniq.empty() || uniq.back().first != pt.first) uniq.push_back(pt);
  std::vector<std::pair<i64, i64>> h;
  for (const auto& pt : uniq) {
    while (h.size() >= 2) {
      const auto& o = h[h.size() - 2];
      const auto& a = h.back();
      __int128 cross = static_cast<__int128>(a.first - o.first) * (pt.second - o.second) -
                       static_cast<__int128>(a.second - o.second) * (pt.first - o.first);
      if (cross > 0) break;
      h.pop_back();
    }
    h.push_back(pt);
  }
  return Polygon{h};
}

Polygon ramification_newton(const Tower& t) {
  const BaseRing& b = t.base();
  const int n = t.n();
  std::vector<Tower::BElem> a = t.g();
  a.push_back(b.one());
  // binomials mod p^N
  std::vector<std::vector<u64>> c(n + 1, std::vector<u64>(n + 1, 0));
  for (int k = 0; k <= n; ++k) {
    c[k][0] = 1;
    for (int i = 1; i <= k; ++i) c[k][i] = b.addmod(c[k - 1][i - 1], i < k ? c[k - 1][i] : 0);
  }
  std::vector<Tower::Elem> xk(n + 1);
  xk[0] = t.one();
  for (int k = 1; k <= n; ++k) xk[k] = t.mul(xk[k - 1], t.x_pow(1));
  std::vector<std::pair<i64, i64>> pts;
  for (int i = 1; i <= n; ++i) {
    Tower::Elem coef = t.zero();
    for (int k = i; k <= n; ++k) coef = t.add(coef, t.mul(t.from_base(b.scale(a[k], c[k][i])), xk[k]));
    i64 v = t.valuation(coef);
    if (v >= t.ceiling()) throw PrecisionError("ramification_newton: coefficient beyond precision", 2L * t.precision());
    pts.push_back({i, v});
  }
  return lower_hull(pts);
}

Tower::BElem random_unit(const BaseRing& b, Rng& rng) {
  while (true) {
    Tower::BElem r = b.zero();
    for (auto& v : r) v = rng.below(b.modulus());
    bool unit = false;
    for (int a = 0; a < b.f(); ++a) unit = unit || (r[a] % static_cast<u64>(b.p()) != 0);
    if (unit) return r;
  }
}

std::vector<Tower::BElem> random_eisenstein(const BaseRing& b, int n, Rng& rng) {
  std::vector<Tower::BElem> g(n);
  g[0] = b.mul(b.y(), random_unit(b, rng));
  for (int i = 1; i < n; ++i) {
    Tower::BElem r = b.zero();
    for (auto& v : r) v = rng.below(b.modulus());
    g[i] = b.mul(b.y(), r);
  }
  return g;
}

}  // namespace jset
