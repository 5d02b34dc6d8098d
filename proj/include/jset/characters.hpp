#pragma once

#include <map>
#include <optional>
#include <vector>

#include "jset/jumpset.hpp"

namespace jset {

struct CharacterSummary {
  Shift shift;
  bool extended = true;
  std::map<i64, int> b;  // A_chi -> order exponent
};

JumpSet jumps_of_character(const CharacterSummary& cs);
int order_at_level(const CharacterSummary& cs, i64 i);

struct CompatWitness {
  bool compatible = true;
  std::vector<i64> max_set;  // Max((I,beta),(I',beta'))
  int c = 0;                 // common value of beta - beta' on Max (0 when Max empty)
  std::string reason;        // which condition decided the outcome
};

// Literal check of the three incompatibility conditions.
CompatWitness check_compatibility(const JumpSet& candidate, const JumpSet& module_js, int f, int p);
bool is_compatible(const JumpSet& candidate, const JumpSet& module_js, int f, int p);
// The floor/ceiling form of condition (3).
bool is_compatible_cheap(const JumpSet& candidate, const JumpSet& module_js, int f, int p);
// Sequence criterion on the subsets A, A'.
bool is_adequate(const JumpSet& candidate, const JumpSet& module_js, int f, int p);

// module_js == nullopt means the free module M_rho^f.
std::vector<JumpSet> character_jumpset_family(const Shift& s, const std::optional<JumpSet>& module_js, int f,
                                              int p, int beta_bound);

// Brute force over all characters of the finite quotient of M_rho^* (f = 1)
// by the relation vector and by p^N; returns the distinct jump sets.
std::vector<JumpSet> brute_force_character_jumpsets(const Shift& s, const std::optional<JumpSet>& module_js,
                                                    int p, int n);

}  // namespace jset
