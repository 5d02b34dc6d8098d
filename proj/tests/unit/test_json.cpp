#include <doctest.h>

#include "jset/errors.hpp"
#include "jset/json_io.hpp"

using namespace jset;

TEST_CASE("shift and jump set JSON round trips") {
  for (auto s : {Shift::rho_ep(3, 6), Shift::rho_inf(2), Shift::abstract({3, 5, 7}, 4)})
    CHECK(shift_from_json(shift_to_json(s)) == s);
  CHECK(shift_to_json(Shift::rho_ep(3, 6)).dump() == R"({"kind":"rho_ep","p":3,"e":6})");
  auto j = make_jumpset(Shift::rho_ep(3, 6), true, {{1, 2}, {4, 1}});
  CHECK(jumpset_to_json(j).dump() == R"({"shift":{"kind":"rho_ep","p":3,"e":6},"extended":true,"entries":[[1,2],[4,1]]})");
  CHECK(jumpset_from_json(jumpset_to_json(j)) == j);
  CHECK_THROWS_AS(jumpset_from_json(json::parse(R"({"entries":[[2,1]]})"), Shift::rho_ep(2, 2)), DomainError);
  CHECK_THROWS_AS(shift_from_json(json::parse(R"({"kind":"other"})")), DomainError);
}

TEST_CASE("vector JSON") {
  Shift s = Shift::rho_ep(3, 6);
  auto v = vector_from_json(json::parse(R"({"f":1,"coords":{"1":2,"4":1},"inf_default":true})"), s);
  CHECK(v.get(1) == 2);
  CHECK(v.get(4) == 1);
  CHECK(v.get(2) == kInfVal);
  auto w = vector_from_json(json::parse(R"({"f":2,"coords":{"1:2":3},"inf_default":false})"), s);
  CHECK(w.get(1, 2) == 3);
  CHECK(w.get(2, 1) == 1);
  CHECK(vector_from_json(vector_to_json(v), s).coords == v.coords);
}

TEST_CASE("shape and polynomial JSON") {
  auto s = shape_from_json(json::parse(R"({"p":3,"f":1,"j":0,"n":3,"coeff_vals":{"0":1,"1":1}})"));
  CHECK(s.val(1) == 1);
  CHECK(s.val(2) == kHuge);
  CHECK(shape_from_json(shape_to_json(s)).coeff_vals == s.coeff_vals);
  BaseRing b(2, 1, 0, 6);
  auto g = polynomial_from_json(b, json::parse("[[[0,1]],[[0,1]]]"));
  CHECK(g[0] == b.from_int(2));
  CHECK(polynomial_from_json(b, polynomial_to_json(b, g)) == g);
  CHECK(polynomial_from_json(b, json::parse("[-2, 2]"))[0] == b.from_int(-2));
  CHECK_THROWS_AS(polynomial_from_json(b, json::parse("[[[0,3]]]")), DomainError);
}
