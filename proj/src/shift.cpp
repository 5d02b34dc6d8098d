#include "jset/shift.hpp"

#include <algorithm>

#include "jset/errors.hpp"

namespace jset {

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int vp(i64 n, i64 p) {
  if (n == 0) return std::numeric_limits<int>::max();
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

namespace {

i64 sat_add(i64 a, i64 b) { return (a >= kHuge - b) ? kHuge : a + b; }
i64 sat_mul(i64 a, i64 b) { return (a >= kHuge / b) ? kHuge : a * b; }

}  // namespace

Shift Shift::rho_ep(int p, i64 e) {
  if (!is_prime(p)) throw DomainError("rho_ep: p must be prime");
  if (e < 1) throw DomainError("rho_ep: e must be >= 1");
  Shift s;
  s.kind_ = Kind::RhoEp;
  s.p_ = p;
  s.e_ = e;
  i64 mx = 0;
  for (i64 i = 1; i <= 2 * e + e / (p - 1) + 2; ++i)
    if (s.in_t(i)) mx = i;
  s.e_star_ = mx + 1;
  return s;
}

Shift Shift::rho_inf(int p) {
  if (!is_prime(p)) throw DomainError("rho_inf: p must be prime");
  Shift s;
  s.kind_ = Kind::RhoInf;
  s.p_ = p;
  s.e_ = 0;
  return s;
}

Shift Shift::abstract(std::vector<i64> table, i64 tail) {
  if (tail < 1) throw DomainError("abstract shift: tail offset must be >= 1");
  for (size_t k = 0; k < table.size(); ++k) {
    if (k == 0 && table[0] <= 1) throw DomainError("abstract shift: rho(1) must exceed 1");
    if (k > 0 && table[k] <= table[k - 1])
      throw DomainError("abstract shift: table must be strictly increasing");
  }
  i64 n = static_cast<i64>(table.size());
  if (n == 0 && tail < 1) throw DomainError("abstract shift: rho(1) must exceed 1");
  if (n > 0 && n + 1 + tail <= table.back())
    throw DomainError("abstract shift: tail must continue the table increasingly");
  Shift s;
  s.kind_ = Kind::Abstract;
  s.p_ = 0;
  s.e_ = 0;
  s.table_ = std::move(table);
  s.tail_ = tail;
  i64 mx = 0;
  for (i64 i = 1; i <= n + tail + 1; ++i)
    if (s.in_t(i)) mx = i;
  s.e_star_ = mx + 1;
  s.e_ = static_cast<i64>(s.tset().size());
  return s;
}

i64 Shift::operator()(i64 i) const {
  if (i >= kHuge) return kHuge;
  switch (kind_) {
    case Kind::RhoEp:
      return std::min(sat_add(i, e_), sat_mul(i, p_));
    case Kind::RhoInf:
      return sat_mul(i, p_);
    case Kind::Abstract:
      if (i <= static_cast<i64>(table_.size())) return table_[i - 1];
      return sat_add(i, tail_);
  }
  return kHuge;
}

i64 Shift::iterate(i64 i, int k) const {
  for (int s = 0; s < k && i < kHuge; ++s) i = (*this)(i);
  return i;
}

std::optional<i64> Shift::preimage(i64 m) const {
  if (m < 2 || m >= kHuge) return std::nullopt;
  switch (kind_) {
    case Kind::RhoEp: {
      if (m - e_ >= 1 && (*this)(m - e_) == m) return m - e_;
      if (m % p_ == 0 && (*this)(m / p_) == m) return m / p_;
      return std::nullopt;
    }
    case Kind::RhoInf:
      if (m % p_ == 0) return m / p_;
      return std::nullopt;
    case Kind::Abstract: {
      auto it = std::lower_bound(table_.begin(), table_.end(), m);
      if (it != table_.end() && *it == m) return static_cast<i64>(it - table_.begin()) + 1;
      i64 a = m - tail_;
      if (a > static_cast<i64>(table_.size()) && a >= 1) return a;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

int Shift::v_rho(i64 m) const {
  int k = 0;
  for (auto q = preimage(m); q; q = preimage(*q)) ++k;
  return k;
}

i64 Shift::root(i64 m, int k) const {
  for (int s = 0; s < k; ++s) {
    auto q = preimage(m);
    if (!q) throw DomainError("root: value has no preimage of the requested depth");
    m = *q;
  }
  return m;
}

int Shift::hops_to_reach(i64 j, i64 i) const {
  int s = 0;
  while (j < i) {
    j = (*this)(j);
    ++s;
  }
  return s;
}

std::vector<i64> Shift::tset(i64 bound) const {
  std::vector<i64> out;
  i64 hi = finite_t() ? e_star_ - 1 : bound;
  if (finite_t() && bound > 0) hi = std::min(hi, bound);
  for (i64 i = 1; i <= hi; ++i)
    if (in_t(i)) out.push_back(i);
  return out;
}

std::vector<i64> Shift::tset_star() const {
  auto t = tset();
  t.push_back(e_star());
  return t;
}

i64 Shift::e_star() const {
  if (!finite_t()) throw DomainError("e*: shift has infinite T_rho");
  return e_star_;
}

i64 Shift::e_prime() const { return *preimage(e_star()); }

std::string Shift::describe() const {
  switch (kind_) {
    case Kind::RhoEp:
      return "rho_{" + std::to_string(e_) + "," + std::to_string(p_) + "}";
    case Kind::RhoInf:
      return "rho_{inf," + std::to_string(p_) + "}";
    case Kind::Abstract:
      return "rho_abstract(" + std::to_string(table_.size()) + "+" + std::to_string(tail_) + ")";
  }
  return "?";
}

bool Shift::operator==(const Shift& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::RhoEp:
      return p_ == o.p_ && e_ == o.e_;
    case Kind::RhoInf:
      return p_ == o.p_;
    case Kind::Abstract:
      return table_ == o.table_ && tail_ == o.tail_;
  }
  return false;
}

bool leq_rho(const Shift& s, Point x, Point y) {
  return y.b >= x.b && s.iterate(y.a, y.b) >= s.iterate(x.a, x.b);
}

}  // namespace jset
