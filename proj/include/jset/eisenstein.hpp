#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jset/padic.hpp"

namespace jset {

// Valuations of the coefficients of an Eisenstein polynomial of degree n over
// Q_q(zeta_{p^{j+1}}); absent coefficients are zero.
struct EisensteinShape {
  int p = 2, f = 1, j = 0, n = 1;
  std::map<int, i64> coeff_vals;

  i64 base_e() const;  // p^j (p - 1)
  i64 e() const { return base_e() * n; }
  i64 val(int i) const;  // kHuge when absent; 0 for i == n
};

void validate_shape(const EisensteinShape& s);
bool is_strongly_separable(const EisensteinShape& s);

struct ShapeJumps {
  JumpSet over_inf;              // over rho_{inf,p}, game level
  std::optional<JumpSet> game;   // same entries read over rho_{e,p}, when valid there
  std::optional<JumpSet> field;  // game with beta shifted by j
  std::vector<int> alphas;       // the alpha sequence of the second route
  bool strongly_separable = false;
  bool routes_agree = true;
};

ShapeJumps jump_set_of_shape(const EisensteinShape& s);
std::vector<int> alpha_sequence(const EisensteinShape& s);

// Lower hull of {(p^{b-1}, p^{b-1} i)} u {(n, n)}, b = beta(i) - j.
Polygon ramification_polygon(const JumpSet& js, int n, int j = 0);

JumpSet tame_transform(const JumpSet& js, i64 d);

struct ConstraintReport {
  bool ok = true;
  std::vector<std::string> lines;
};
ConstraintReport extension_constraints(const JumpSet& js1, i64 d, const JumpSet& js2);

struct Realization {
  EisensteinShape shape;
  std::vector<Tower::BElem> g;  // a_0 .. a_{n-1}
  int precision = 0;
};

// Default precision: 4(e+1) digits of the base uniformizer.
int default_realize_precision(int p, i64 e);
Realization realize(const JumpSet& js, int f, int n_digits = 0);

EisensteinShape shape_of(const Tower& t);
// a_i = unit * y^{v_i} with random units.
std::vector<Tower::BElem> polynomial_of_shape(const EisensteinShape& s, const BaseRing& b, Rng& rng);
EisensteinShape random_separable_shape(int p, int f, int j, int n, Rng& rng);
// g(x^d)
std::vector<Tower::BElem> substitute_power(const std::vector<Tower::BElem>& g, const BaseRing& b, int d);

}  // namespace jset
