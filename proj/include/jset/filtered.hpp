#pragma once

#include <climits>
#include <map>
#include <utility>
#include <vector>

#include "jset/jumpset.hpp"

namespace jset {

inline constexpr int kInfVal = INT_MAX;

// Coordinate valuations of a vector of M_rho^{f-1} (+) M_rho^* (or M_rho^f when
// extended is false). Missing coordinates are infinite.
struct ValuationVector {
  Shift shift;
  int f = 1;
  bool extended = true;
  std::map<std::pair<i64, int>, int> coords;  // (index, slot) -> valuation

  int get(i64 i, int slot = 1) const;
  void set(i64 i, int slot, int val);
  int min_at(i64 i) const;
  std::vector<i64> indices() const;  // T_rho or T_rho*
};

JumpSet filt_ord(const ValuationVector& v);
ValuationVector canonical_vector(const JumpSet& js, int f);

// g_v(n) for n = 1..n_max (entry n-1); kHuge stands for infinity.
std::vector<i64> quotient_weight_profile(const ValuationVector& v, int n_max);
// Recovers (I, beta) from the break points of a profile.
JumpSet jumpset_from_profile(const Shift& s, bool extended, const std::vector<i64>& g);

int torsion_order(const JumpSet& js);

}  // namespace jset
