#include <doctest.h>

#include <set>

#include "jset/errors.hpp"
#include "jset/jumpset.hpp"

using namespace jset;

namespace {

JumpSet js(const Shift& s, std::vector<Entry> e, bool ext = true) { return make_jumpset(s, ext, std::move(e)); }

// A_(I,beta) = { rho^n(i) : i in I, 0 <= n < beta(i) - beta(next i) }, beta(next of max) = 0.
std::set<i64> subset_oracle(const JumpSet& j) {
  std::set<i64> a;
  for (size_t k = 0; k < j.entries.size(); ++k) {
    int next = k + 1 < j.entries.size() ? j.entries[k + 1].beta : 0;
    i64 x = j.entries[k].i;
    for (int n = 0; n < j.entries[k].beta - next; ++n, x = j.shift(x)) a.insert(x);
  }
  return a;
}

// Brute force over all subsets of [1, e* + 2e] that satisfy the jump-set axioms.
bool axioms_hold(const Shift& s, bool ext, const std::vector<Entry>& e) {
  for (size_t k = 0; k < e.size(); ++k) {
    bool in = s.in_t(e[k].i) || (ext && e[k].i == s.e_star());
    if (!in || e[k].beta < 1) return false;
    if (k > 0 && !(e[k].beta < e[k - 1].beta && s.iterate(e[k].i, e[k].beta) > s.iterate(e[k - 1].i, e[k - 1].beta)))
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("to_subset examples") {
  Shift s22 = Shift::rho_ep(2, 2);
  CHECK(to_subset(js(s22, {})).empty());
  CHECK(to_subset(js(s22, {{1, 2}})) == std::set<i64>{1, 2});
  // The formula gives {1,4}; the extra 3 would break the condition rho(3) <= 4.
  CHECK(to_subset(js(Shift::rho_ep(3, 6), {{1, 2}, {4, 1}})) == std::set<i64>{1, 4});
}

TEST_CASE("from_subset examples") {
  Shift s = Shift::rho_ep(2, 2);
  CHECK(from_subset(s, true, {1, 2}) == js(s, {{1, 2}}));
  CHECK(from_subset(s, true, {1, 3}) == js(s, {{1, 2}, {3, 1}}));
  CHECK_THROWS_AS(from_subset(s, true, {2, 3}), DomainError);
}

TEST_CASE("extract examples") {
  CHECK(extract(Shift::rho_ep(3, 6), true, {{1, 2}, {4, 1}}, Which::Minimal) == js(Shift::rho_ep(3, 6), {{1, 2}, {4, 1}}));
  CHECK(extract(Shift::rho_ep(3, 2), true, {{1, 2}, {2, 1}}, Which::Minimal) == js(Shift::rho_ep(3, 2), {{2, 1}}));
  CHECK(extract(Shift::rho_ep(5, 4), true, {{3, 2}}, Which::Maximal) == js(Shift::rho_ep(5, 4), {{3, 2}}));
  CHECK(extract(Shift::rho_ep(5, 4), true, {}, Which::Minimal).empty());
}

TEST_CASE("is_admissible examples") {
  CHECK(is_admissible(js(Shift::rho_ep(3, 2), {{1, 1}})));
  CHECK(is_admissible(js(Shift::rho_ep(3, 6), {{1, 2}, {4, 1}})));
  CHECK_FALSE(is_admissible(js(Shift::rho_ep(3, 6), {})));
  CHECK_THROWS(is_admissible(JumpSet{Shift::rho_inf(2), true, {{1, 1}}}));
}

TEST_CASE("enumerate examples") {
  auto a = enumerate(Shift::rho_ep(3, 2), true, 0, true);
  REQUIRE(a.size() == 1);
  CHECK(a[0] == js(Shift::rho_ep(3, 2), {{1, 1}}));
  Shift s = Shift::rho_ep(2, 2);
  auto b = enumerate(s, true, 0, true);
  std::set<JumpSet> got(b.begin(), b.end());
  CHECK(got == std::set<JumpSet>{js(s, {{1, 2}}), js(s, {{1, 2}, {3, 1}}), js(s, {{1, 2}, {4, 1}})});
  auto c = enumerate(Shift::rho_ep(3, 6), false, 0, false);
  REQUIRE(c.size() == 1);
  CHECK(c[0].empty());
}

TEST_CASE("validate names the violated condition") {
  Shift s = Shift::rho_ep(2, 2);
  CHECK(validate(JumpSet{s, true, {{2, 1}}}) != "");
  CHECK(validate(JumpSet{s, true, {{1, 1}, {3, 2}}}) != "");
  CHECK(validate(JumpSet{s, false, {{4, 1}}}) != "");
  CHECK(validate(JumpSet{s, true, {{4, 1}}}) == "");
}

TEST_CASE("enumerate equals brute force over entry lists") {
  for (int p : {2, 3})
    for (i64 e = 1; e <= 4; ++e)
      for (bool ext : {false, true}) {
        Shift s = Shift::rho_ep(p, e);
        const int bound = 3;
        auto idx = ext ? s.tset_star() : s.tset();
        std::set<std::vector<Entry>> brute;
        // every assignment of beta in {0..bound} per index; 0 means absent
        std::vector<int> b(idx.size(), 0);
        while (true) {
          std::vector<Entry> e2;
          for (size_t k = 0; k < idx.size(); ++k)
            if (b[k]) e2.push_back({idx[k], b[k]});
          if (axioms_hold(s, ext, e2)) brute.insert(e2);
          size_t k = 0;
          while (k < b.size() && ++b[k] > bound) b[k++] = 0;
          if (k == b.size()) break;
        }
        std::set<std::vector<Entry>> got;
        for (const auto& j : enumerate(s, ext, bound, false)) got.insert(j.entries);
        CHECK(got == brute);
        if (ext && e % (p - 1) == 0) {
          std::set<std::vector<Entry>> adm, filt;
          for (const auto& j : enumerate(s, true, 0, true)) adm.insert(j.entries);
          for (const auto& j : enumerate(s, true, s.v_rho(s.e_star()), false))
            if (is_admissible(j)) filt.insert(j.entries);
          CHECK(adm == filt);
        }
      }
}

TEST_CASE("subset bijection round trips") {
  for (int p : {2, 3, 5})
    for (i64 e = 1; e <= 6; ++e) {
      Shift s = Shift::rho_ep(p, e);
      for (const auto& j : enumerate(s, true, 4, false)) {
        auto a = to_subset(j);
        CHECK(a == subset_oracle(j));
        CHECK(from_subset(s, true, a) == j);
        CHECK(extract(s, true, j.graph(), Which::Minimal) == j);
        CHECK(extract(s, true, j.graph(), Which::Maximal) == j);
      }
    }
}

TEST_CASE("to_string format") {
  CHECK(to_string(js(Shift::rho_ep(3, 6), {{1, 2}, {4, 1}})) == "({1,4},(2,1))");
}
