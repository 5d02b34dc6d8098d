#include <doctest.h>

#include <set>

#include "jset/characters.hpp"

using namespace jset;

namespace {

JumpSet js(const Shift& s, std::vector<Entry> e) { return make_jumpset(s, true, std::move(e)); }

}  // namespace

TEST_CASE("jumps_of_character examples") {
  Shift s22 = Shift::rho_ep(2, 2);
  CHECK(jumps_of_character({s22, true, {}}).empty());
  CHECK(jumps_of_character({s22, true, {{1, 2}, {3, 1}}}) == js(s22, {{1, 2}, {3, 1}}));
  CHECK(jumps_of_character({s22, true, {{1, 2}, {2, 1}}}) == js(s22, {{1, 2}}));
  Shift s63 = Shift::rho_ep(3, 6);
  CHECK(jumps_of_character({s63, true, {{1, 2}, {4, 1}}}) == js(s63, {{1, 2}, {4, 1}}));
}

TEST_CASE("order_at_level examples") {
  Shift s = Shift::rho_ep(2, 2);
  CharacterSummary cs{s, true, {{1, 2}, {3, 1}}};
  CHECK(order_at_level(cs, 1) == 2);
  CharacterSummary one{s, true, {{1, 2}}};
  CHECK(order_at_level(one, 2) == 1);
  CHECK(order_at_level(one, 3) == 0);
  CHECK(order_at_level(one, 50) == 0);
}

TEST_CASE("compatibility examples") {
  Shift s = Shift::rho_ep(2, 2);
  // disjoint supports
  CHECK(is_compatible(js(s, {{3, 1}}), js(s, {{1, 2}, {4, 1}}), 1, 2));
  CHECK(is_adequate(js(s, {{3, 1}}), js(s, {{1, 2}, {4, 1}}), 1, 2));
  // f = 1, singleton above the module value
  auto w = check_compatibility(js(s, {{1, 3}}), js(s, {{1, 2}}), 1, 2);
  CHECK_FALSE(w.compatible);
  CHECK(w.max_set == std::vector<i64>{1});
  CHECK(w.c == 1);
  CHECK_FALSE(is_adequate(js(s, {{1, 3}}), js(s, {{1, 2}}), 1, 2));
  // f >= 2 and e* not in I': everything compatible
  for (int p : {2, 3})
    for (i64 e = p - 1; e <= 4; e += p - 1) {
      Shift t = Shift::rho_ep(p, e);
      for (const auto& mod : enumerate(t, true, 0, true)) {
        if (mod.contains(t.e_star())) continue;
        for (const auto& cand : enumerate(t, true, 4, false)) {
          CHECK(is_compatible(cand, mod, 2, p));
          CHECK(is_adequate(cand, mod, 2, p));
        }
      }
    }
}

TEST_CASE("candidate equal to module is compatible") {
  for (int p : {2, 3, 5})
    for (i64 e = p - 1; e <= 3 * (p - 1); e += p - 1) {
      Shift s = Shift::rho_ep(p, e);
      for (const auto& mod : enumerate(s, true, 0, true)) {
        auto w = check_compatibility(mod, mod, 1, p);
        CHECK(w.compatible);
        CHECK(w.max_set.empty());
        CHECK(is_adequate(mod, mod, 1, p));
      }
    }
}

TEST_CASE("family examples") {
  Shift s = Shift::rho_ep(2, 2);
  auto free2 = character_jumpset_family(s, std::nullopt, 1, 2, 2);
  CHECK(free2.size() == enumerate(s, false, 2, false).size());
  auto fam = character_jumpset_family(s, js(s, {{1, 2}}), 1, 2, 3);
  std::set<JumpSet> got(fam.begin(), fam.end());
  CHECK_FALSE(got.count(js(s, {{1, 3}})));
  CHECK(got.count(js(s, {{1, 2}})));
  CHECK(got.count(js(s, {{1, 1}})));
  auto all = enumerate(s, true, 3, false);
  CHECK(character_jumpset_family(s, js(s, {{1, 2}, {3, 1}}), 2, 2, 3).size() == all.size());
}

TEST_CASE("three compatibility tests agree exhaustively") {
  for (int p : {2, 3, 5})
    for (int e0 = 1; e0 <= 3; ++e0)
      for (int f : {1, 2, 3}) {
        Shift s = Shift::rho_ep(p, static_cast<i64>(p - 1) * e0);
        auto all = enumerate(s, true, 4, false);
        int bad = 0;
        for (const auto& a : all)
          for (const auto& b : all) {
            bool c = is_compatible(a, b, f, p);
            if (c != is_adequate(a, b, f, p) || c != is_compatible_cheap(a, b, f, p)) ++bad;
          }
        CHECK(bad == 0);
      }
}

TEST_CASE("brute-force characters on a small quotient") {
  Shift s = Shift::rho_ep(2, 2);
  for (const auto& mod : enumerate(s, true, 0, true)) {
    std::set<std::vector<Entry>> a, b;
    for (const auto& j : brute_force_character_jumpsets(s, mod, 2, 3)) a.insert(j.entries);
    for (const auto& j : character_jumpset_family(s, mod, 1, 2, 3)) b.insert(j.entries);
    CHECK(a == b);
  }
}
