#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace jset {

using i64 = std::int64_t;

// Iterates saturate here; anything at or above is treated as "very large".
inline constexpr i64 kHuge = i64{1} << 60;

bool is_prime(i64 n);
int vp(i64 n, i64 p);  // p-adic valuation of n != 0

// A strictly increasing map rho on the positive integers with rho(1) > 1.
class Shift {
 public:
  enum class Kind { RhoEp, RhoInf, Abstract };

  static Shift rho_ep(int p, i64 e);
  static Shift rho_inf(int p);
  // table[k] = rho(k+1); beyond the table rho(i) = i + tail.
  static Shift abstract(std::vector<i64> table, i64 tail);

  Kind kind() const { return kind_; }
  int p() const { return p_; }
  i64 e() const { return e_; }
  const std::vector<i64>& table() const { return table_; }
  i64 tail() const { return tail_; }

  i64 operator()(i64 i) const;
  i64 iterate(i64 i, int k) const;
  std::optional<i64> preimage(i64 m) const;

  int v_rho(i64 m) const;
  // rho^{-k}(m) for k <= v_rho(m)
  i64 root(i64 m, int k) const;
  int hops_to_reach(i64 j, i64 i) const;

  bool finite_t() const { return kind_ != Kind::RhoInf; }
  std::vector<i64> tset(i64 bound = 0) const;
  std::vector<i64> tset_star() const;
  bool in_t(i64 i) const { return i >= 1 && !preimage(i).has_value(); }
  i64 e_star() const;
  i64 e_prime() const;

  std::string describe() const;
  bool operator==(const Shift& o) const;
  bool operator!=(const Shift& o) const { return !(*this == o); }

 private:
  Kind kind_ = Kind::RhoEp;
  int p_ = 2;
  i64 e_ = 1;
  std::vector<i64> table_;
  i64 tail_ = 0;
  i64 e_star_ = 0;
};

struct Point {
  i64 a;
  int b;
  bool operator==(const Point& o) const { return a == o.a && b == o.b; }
};

// x <=_rho y
bool leq_rho(const Shift& s, Point x, Point y);

}  // namespace jset
