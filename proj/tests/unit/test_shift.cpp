#include <doctest.h>

#include <set>

#include "jset/shift.hpp"

using namespace jset;

namespace {

// T_rho by listing the image of rho on [1, bound].
std::vector<i64> t_by_image(const Shift& s, i64 bound) {
  std::set<i64> img;
  for (i64 i = 1; i <= bound; ++i) img.insert(s(i));
  std::vector<i64> out;
  for (i64 i = 1; i <= bound; ++i)
    if (!img.count(i)) out.push_back(i);
  return out;
}

int v_by_search(const Shift& s, i64 m) {
  int best = 0;
  for (i64 a = 1; a <= m; ++a)
    for (int k = 1; s.iterate(a, k) <= m; ++k)
      if (s.iterate(a, k) == m) best = std::max(best, k);
  return best;
}

}  // namespace

TEST_CASE("tset examples") {
  CHECK(Shift::rho_ep(2, 2).tset() == std::vector<i64>{1, 3});
  CHECK(Shift::rho_ep(2, 2).e_star() == 4);
  CHECK(Shift::rho_ep(3, 2).tset() == std::vector<i64>{1, 2});
  CHECK(Shift::rho_ep(3, 2).e_star() == 3);
  CHECK(Shift::rho_ep(3, 6).tset() == std::vector<i64>{1, 2, 4, 5, 7, 8});
  CHECK(Shift::rho_ep(3, 6).e_star() == 9);
}

TEST_CASE("tset agrees with image enumeration") {
  for (int p : {2, 3, 5, 7})
    for (i64 e = 1; e <= 12; ++e) {
      Shift s = Shift::rho_ep(p, e);
      auto t = s.tset();
      CHECK(static_cast<i64>(t.size()) == e);
      CHECK(t == t_by_image(s, 4 * e * p));
      CHECK(s.e_star() == t.back() + 1);
    }
}

TEST_CASE("v_rho examples and brute force") {
  CHECK(Shift::rho_ep(2, 2).v_rho(2) == 1);
  CHECK(Shift::rho_ep(2, 2).v_rho(4) == 2);
  CHECK(Shift::rho_ep(3, 6).v_rho(9) == 2);
  for (int p : {2, 3})
    for (i64 e = 1; e <= 6; ++e) {
      Shift s = Shift::rho_ep(p, e);
      for (i64 m = 1; m <= 60; ++m) {
        CHECK(s.v_rho(m) == v_by_search(s, m));
        CHECK(s.iterate(s.root(m, s.v_rho(m)), s.v_rho(m)) == m);
      }
    }
}

TEST_CASE("leq_rho examples") {
  CHECK(leq_rho(Shift::rho_ep(3, 2), {2, 1}, {1, 2}));
  CHECK(leq_rho(Shift::rho_ep(5, 5), {7, 3}, {7, 3}));
  Shift s = Shift::rho_ep(3, 6);
  CHECK_FALSE(leq_rho(s, {1, 2}, {4, 1}));
  CHECK_FALSE(leq_rho(s, {4, 1}, {1, 2}));
}

TEST_CASE("hops_to_reach examples") {
  CHECK(Shift::rho_ep(2, 2).hops_to_reach(1, 1) == 0);
  CHECK(Shift::rho_ep(2, 2).hops_to_reach(1, 4) == 2);
  CHECK(Shift::rho_ep(3, 6).hops_to_reach(2, 10) == 2);
}

TEST_CASE("leq_rho is a partial order") {
  for (auto s : {Shift::rho_ep(2, 2), Shift::rho_ep(3, 6), Shift::rho_ep(5, 4), Shift::rho_inf(3)}) {
    std::vector<Point> pts;
    for (i64 a = 1; a <= 20; ++a)
      for (int b = 0; b <= 6; ++b) pts.push_back({a, b});
    for (const auto& x : pts) {
      CHECK(leq_rho(s, x, x));
      for (const auto& y : pts) {
        if (leq_rho(s, x, y) && leq_rho(s, y, x)) CHECK(x == y);
      }
    }
    // transitivity on a sub-grid keeps the runtime small
    for (const auto& x : pts)
      for (const auto& y : pts)
        if (x.a <= 8 && y.a <= 8 && leq_rho(s, x, y))
          for (const auto& z : pts)
            if (z.a <= 8 && leq_rho(s, y, z)) CHECK(leq_rho(s, x, z));
  }
}

TEST_CASE("shift invariants") {
  for (int p : {2, 3, 5})
    for (i64 e = 1; e <= 10; ++e) {
      Shift s = Shift::rho_ep(p, e);
      for (i64 i = 1; i <= 200; ++i) {
        CHECK(s(i + 1) > s(i));
        CHECK(s(i) == std::min(i + e, p * i));
        // T and the image partition the positive integers
        CHECK(s.in_t(i) != s.preimage(i).has_value());
      }
      if (e % (p - 1) == 0) {
        CHECK(s.e_prime() == e / (p - 1));
        CHECK(s.e_star() == p * e / (p - 1));
        CHECK(s(s.e_prime()) == s.e_star());
      }
      for (i64 x = s.e_star(); x <= s.e_star() + 40 * e; ++x)
        CHECK(s.v_rho(x) >= (x - s.e_star() + 1 + e - 1) / e);
    }
}

TEST_CASE("abstract shift with affine tail") {
  Shift s = Shift::abstract({3, 5, 7}, 4);
  CHECK(s(1) == 3);
  CHECK(s(3) == 7);
  CHECK(s(4) == 8);
  CHECK(s.tset(10) == std::vector<i64>{1, 2, 4, 6});
  CHECK(s.v_rho(7) == 2);
  CHECK(s.v_rho(6) == 0);
  CHECK_THROWS(Shift::abstract({1, 2}, 1));
}
