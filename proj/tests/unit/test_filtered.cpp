#include <doctest.h>

#include "jset/errors.hpp"
#include "jset/filtered.hpp"
#include "jset/shooting.hpp"

using namespace jset;

namespace {

ValuationVector vec(const Shift& s, int f, std::vector<std::tuple<i64, int, int>> c) {
  ValuationVector v{s, f, true, {}};
  for (auto [i, slot, val] : c) v.set(i, slot, val);
  return v;
}

}  // namespace

TEST_CASE("filt_ord examples") {
  CHECK(filt_ord(vec(Shift::rho_ep(3, 2), 1, {})).empty());
  CHECK(filt_ord(vec(Shift::rho_ep(3, 2), 1, {{1, 1, 2}, {2, 1, 1}})) == make_jumpset(Shift::rho_ep(3, 2), true, {{2, 1}}));
  Shift s = Shift::rho_ep(3, 6);
  CHECK(filt_ord(vec(s, 1, {{1, 1, 2}, {4, 1, 1}})) == make_jumpset(s, true, {{1, 2}, {4, 1}}));
  ValuationVector bad{s, 1, true, {}};
  bad.coords[{1, 1}] = 0;
  CHECK_THROWS_AS(filt_ord(bad), DomainError);
}

TEST_CASE("canonical_vector examples") {
  Shift s = Shift::rho_ep(2, 2);
  CHECK(canonical_vector(make_jumpset(s, true, {}), 1).coords.empty());
  auto v = canonical_vector(make_jumpset(s, true, {{1, 2}}), 1);
  CHECK(v.get(1) == 2);
  CHECK(v.get(3) == kInfVal);
  CHECK(v.get(4) == kInfVal);
  auto w = canonical_vector(make_jumpset(s, true, {{1, 2}, {3, 1}}), 2);
  CHECK(w.get(1, 1) == 2);
  CHECK(w.get(3, 1) == 1);
  CHECK(w.get(1, 2) == kInfVal);
}

TEST_CASE("quotient_weight_profile examples") {
  Shift s22 = Shift::rho_ep(2, 2);
  auto g = quotient_weight_profile(canonical_vector(make_jumpset(s22, true, {{1, 2}}), 1), 4);
  CHECK(g[0] == kHuge);
  CHECK(g[1] == kHuge);
  CHECK(g[2] == 4);
  Shift s = Shift::rho_ep(3, 6);
  auto h = quotient_weight_profile(vec(s, 1, {{1, 1, 2}, {4, 1, 1}}), 4);
  CHECK(h[1] == 10);
  CHECK(h[2] == 9);
  CHECK(jumpset_from_profile(s, true, h) == make_jumpset(s, true, {{1, 2}, {4, 1}}));
  auto z = quotient_weight_profile(vec(s, 1, {}), 5);
  for (auto x : z) CHECK(x == kHuge);
}

TEST_CASE("torsion_order examples") {
  CHECK(torsion_order(make_jumpset(Shift::rho_ep(3, 2), true, {{1, 1}})) == 1);
  CHECK(torsion_order(make_jumpset(Shift::rho_ep(2, 2), true, {{1, 2}})) == 2);
  CHECK(torsion_order(make_jumpset(Shift::rho_ep(2, 2), true, {{1, 2}, {4, 1}})) == 1);
  CHECK_THROWS(torsion_order(make_jumpset(Shift::rho_ep(2, 2), true, {})));
}

TEST_CASE("filt_ord invariances and profile breaks on random vectors") {
  Rng rng(11);
  for (int p : {2, 3})
    for (i64 e = p - 1; e <= 6; e += p - 1)
      for (int f : {1, 2, 3}) {
        Shift s = Shift::rho_ep(p, e);
        for (int trial = 0; trial < 300; ++trial) {
          ValuationVector v{s, f, true, {}};
          for (i64 i : s.tset_star()) {
            int slots = i == s.e_star() ? 1 : f;
            for (int sl = 1; sl <= slots; ++sl) {
              int val = static_cast<int>(rng.below(6));
              if (val) v.set(i, sl, val);
            }
          }
          auto js = filt_ord(v);
          // permuting slots at an index
          ValuationVector w{s, f, true, {}};
          for (const auto& [key, val] : v.coords) {
            bool star = key.first == s.e_star();
            w.set(key.first, star ? 1 : (key.second % f) + 1, val);
          }
          CHECK(filt_ord(w) == js);
          // raising a non-minimal slot
          ValuationVector u = v;
          for (const auto& [key, val] : v.coords)
            if (val > v.min_at(key.first)) u.set(key.first, key.second, val + 3);
          CHECK(filt_ord(u) == js);
          // profile: non-increasing, breaks at beta(I), value rho^beta(i)
          auto g = quotient_weight_profile(v, 8);
          for (size_t n = 1; n < g.size(); ++n) CHECK(g[n] <= g[n - 1]);
          for (const auto& en : js.entries) CHECK(g[en.beta] == s.iterate(en.i, en.beta));
          CHECK(jumpset_from_profile(s, true, g) == js);
        }
      }
}

TEST_CASE("canonical vectors round trip") {
  for (int p : {2, 3})
    for (i64 e = 1; e <= 6; ++e)
      for (bool ext : {false, true}) {
        Shift s = Shift::rho_ep(p, e);
        for (const auto& js : enumerate(s, ext, 4, false))
          for (int f : {1, 2}) CHECK(filt_ord(canonical_vector(js, f)) == js);
      }
}
