#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "jset/jumpset.hpp"
#include "jset/shooting.hpp"

namespace jset {

using u64 = std::uint64_t;

// Z_q[y]/(Phi_{p^{j+1}}(1+y)) modulo p^N, Z_q = Z_p[s]/(h(s)).
// Elements are D*f coefficient vectors indexed b*f + a for s^a y^b.
class BaseRing {
 public:
  using Elem = std::vector<u64>;

  BaseRing(int p, int f, int j, int n_digits);

  int p() const { return p_; }
  int f() const { return f_; }
  int j() const { return j_; }
  int precision() const { return n_; }
  u64 modulus() const { return mod_; }
  int degree() const { return d_; }  // D = p^j (p - 1) = v_K(p)
  const std::vector<u64>& unramified_modulus() const { return h_; }

  Elem zero() const { return Elem(static_cast<size_t>(d_) * f_, 0); }
  Elem one() const;
  Elem y() const;
  Elem from_int(i64 v) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scale(const Elem& a, u64 c) const;
  Elem inverse(const Elem& a) const;  // a must be a unit
  bool is_zero(const Elem& a) const;
  // v_K; kHuge for zero (meaning: beyond precision)
  i64 valuation(const Elem& a) const;

  // Z_q part (length f, index a)
  std::vector<u64> zq_mul(const std::vector<u64>& a, const std::vector<u64>& b) const;
  std::vector<u64> zq_pow(std::vector<u64> a, u64 k) const;
  // Teichmuller lift of a residue in F_q (coordinates mod p), by q-th powering.
  std::vector<u64> teichmuller(const std::vector<u64>& residue) const;
  Elem embed(const std::vector<u64>& zq) const;

  u64 mulmod(u64 a, u64 b) const;
  u64 addmod(u64 a, u64 b) const { u64 s = a + b; return s >= mod_ ? s - mod_ : s; }
  u64 submod(u64 a, u64 b) const { return a >= b ? a - b : a + mod_ - b; }
  u64 reduce(i64 v) const;

 private:
  int p_, f_, j_, n_, d_;
  u64 mod_;
  std::vector<u64> h_;    // monic degree f, h_[f] == 1
  std::vector<u64> phi_;  // monic degree D, phi_[D] == 1
};

// Smallest monic irreducible polynomial of degree f over F_p (coefficients low to high).
std::vector<u64> smallest_irreducible(int p, int f);

// O_L / p^N for L = K[x]/(g), g Eisenstein over the base of degree n.
class Tower {
 public:
  using BElem = BaseRing::Elem;
  using Elem = std::vector<BElem>;  // n coefficients in x

  Tower(int p, int f, int j, std::vector<BElem> g_lower, int n_digits);

  const BaseRing& base() const { return base_; }
  int n() const { return n_; }
  i64 e() const { return static_cast<i64>(base_.degree()) * n_; }
  int precision() const { return base_.precision(); }
  const std::vector<BElem>& g() const { return g_; }
  // valuations at or above this are not reliable
  i64 ceiling() const { return e() * (precision() - 1); }

  Elem zero() const;
  Elem one() const;
  Elem from_base(const BElem& b) const;
  Elem x_pow(int c) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(Elem a, u64 k) const;
  bool is_zero(const Elem& a) const;
  i64 valuation(const Elem& a) const;  // kHuge for zero
  // Leading coordinates in F_p^f of a at weight w (requires valuation(a) >= w).
  std::vector<u64> residue(const Elem& a, i64 w) const;

 private:
  BaseRing base_;
  int n_;
  std::vector<BElem> g_;  // a_0 .. a_{n-1}
};

// Field-level jump set (I_L, beta_L) for rho_{e,p}, from reducing zeta_{p^{j+1}}.
JumpSet field_jump_set(const Tower& t);

// Precision (p-adic digits) that suffices for field_jump_set on this e.
int default_oracle_precision(int p, int j, i64 e);

struct Polygon {
  std::vector<std::pair<i64, i64>> vertices;
  bool operator==(const Polygon& o) const { return vertices == o.vertices; }
};

Polygon lower_hull(std::vector<std::pair<i64, i64>> pts);

// Lower hull of (i, v_L(coeff of t^i in g(x t + x))), i = 1..n.
Polygon ramification_newton(const Tower& t);

// Coefficients Haar-uniform in m_K, constant term of valuation exactly 1.
std::vector<Tower::BElem> random_eisenstein(const BaseRing& b, int n, Rng& rng);
Tower::BElem random_unit(const BaseRing& b, Rng& rng);

}  // namespace jset
