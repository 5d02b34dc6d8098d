#include <doctest.h>

#include <cmath>
#include <set>

#include "jset/filtered.hpp"
#include "jset/shooting.hpp"

using namespace jset;

namespace {

JumpSet js(const Shift& s, std::vector<Entry> e) { return make_jumpset(s, true, std::move(e)); }

// Direct sum over truncated valuation vectors: P(val >= k) = q^{1-k} on T, p^{1-k} at e*.
std::map<JumpSet, double> haar_by_summation(const Shift& s, int p, int f, int cap) {
  double q = std::pow(p, f);
  auto idx = s.tset_star();
  std::vector<int> val(idx.size(), 1);
  std::map<JumpSet, double> mass;
  double adm = 0;
  while (true) {
    double w = 1;
    ValuationVector v{s, 1, true, {}};
    for (size_t k = 0; k < idx.size(); ++k) {
      double base = idx[k] == s.e_star() ? p : q;
      w *= std::pow(base, -(val[k] - 1)) * (1 - 1 / base);
      v.set(idx[k], 1, val[k]);
    }
    auto j = filt_ord(v);
    if (is_admissible(j)) {
      mass[j] += w;
      adm += w;
    }
    size_t k = 0;
    while (k < val.size() && ++val[k] > cap) val[k++] = 1;
    if (k == val.size()) break;
  }
  for (auto& [j, m] : mass) m /= adm;
  return mass;
}

}  // namespace

TEST_CASE("step law examples") {
  Shift s = Shift::rho_ep(2, 2);
  GameParams g{s, 2, 2, true};
  auto law = step_distribution(g, {2, 1, GameState::Kind::First}, 40);
  CHECK(law.next.at({4, 0, GameState::Kind::Second}) == Rational(1, 4));
  CHECK(law.next.at({3, 0, GameState::Kind::First}) == Rational(1, 2));
  Rational total = law.tail;
  for (const auto& [st, m] : law.next) total += m;
  CHECK(total == 1);

  GameParams plain{s, 3, 2, false};
  auto pl = step_distribution(plain, {5, s.v_rho(5), GameState::Kind::First}, 30);
  for (int h = 1; h <= 5; ++h) {
    Rational want(2, 1);
    for (int k = 0; k < h; ++k) want /= 3;
    CHECK(pl.next.at({5 + h, s.v_rho(5 + h), GameState::Kind::First}) == want);
  }
}

TEST_CASE("exact distribution examples") {
  Shift s = Shift::rho_ep(2, 2);
  auto d = exact_distribution({s, 2, 2, true}, 2);
  CHECK(d.mass.size() == 3);
  CHECK(d.mass.at(js(s, {{1, 2}, {3, 1}})) == Rational(1, 2));
  CHECK(d.mass.at(js(s, {{1, 2}})) == Rational(1, 4));
  CHECK(d.mass.at(js(s, {{1, 2}, {4, 1}})) == Rational(1, 4));
  for (i64 q : {3, 9}) {
    auto t = exact_distribution({Shift::rho_ep(3, 2), q, 3, true}, 1);
    REQUIRE(t.mass.size() == 1);
    CHECK(t.mass.begin()->second == 1);
  }
  CHECK_THROWS(exact_distribution({s, 2, 2, true}, 4));
}

TEST_CASE("exact distribution: totals, support, Haar equality over the grid") {
  for (int p : {2, 3, 5})
    for (int f : {1, 2})
      for (int e0 = 1; e0 <= 6; ++e0) {
        Shift s = Shift::rho_ep(p, static_cast<i64>(p - 1) * e0);
        i64 q = static_cast<i64>(std::pow(p, f));
        auto d = exact_distribution({s, q, p, true}, s.e_prime());
        CHECK(d.total() == 1);
        std::set<JumpSet> support, adm;
        for (const auto& [j, m] : d.mass) {
          CHECK(m > 0);
          support.insert(j);
        }
        for (const auto& j : enumerate(s, true, 0, true)) adm.insert(j);
        CHECK(support == adm);
        CHECK(haar_distribution(s, p, f).mass == d.mass);
        for (i64 r = 1; r < s.e_star(); ++r) CHECK(exact_distribution({s, q, p, true}, r).total() == 1);
      }
}

TEST_CASE("Haar masses match a direct truncated summation") {
  struct Case {
    int p, f;
    i64 e;
    int cap;
  };
  for (auto c : {Case{2, 1, 2, 22}, Case{3, 1, 2, 14}, Case{2, 1, 4, 11}, Case{3, 2, 2, 10}}) {
    Shift s = Shift::rho_ep(c.p, c.e);
    auto want = haar_by_summation(s, c.p, c.f, c.cap);
    auto got = haar_distribution(s, c.p, c.f);
    CHECK(got.mass.size() == want.size());
    for (const auto& [j, m] : got.mass) CHECK(m.get_d() == doctest::Approx(want[j]).epsilon(5e-3));
  }
}

TEST_CASE("identity checks") {
  auto a = identity_checks(Shift::rho_ep(3, 6), 3, 3);
  CHECK(a.ok);
  auto b = identity_checks(Shift::rho_ep(2, 4), 2, 2);
  CHECK(b.ok);
  CHECK_THROWS(identity_checks(Shift::rho_ep(3, 2), 3, 3));
}

TEST_CASE("simulation examples and reproducibility") {
  Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    auto path = simulate({Shift::rho_ep(3, 2), 3, 3, true}, 1, rng);
    CHECK(path.jumps == js(Shift::rho_ep(3, 2), {{1, 1}}));
  }
  Shift s = Shift::rho_ep(2, 2);
  std::set<JumpSet> seen;
  for (int k = 0; k < 500; ++k) {
    auto path = simulate({s, 2, 2, true}, 2, rng);
    seen.insert(path.jumps);
    REQUIRE(!path.jumps.empty());
    CHECK(path.jumps.entries.front() == Entry{1, 2});
  }
  CHECK(seen.size() == 3);
  Shift t = Shift::rho_ep(3, 6);
  for (i64 r = 1; r < t.e_star(); ++r) {
    Rng a(Rng::split(9, r));
    auto path = simulate({t, 3, 3, true}, r, a);
    int v = t.v_rho(r);
    CHECK(path.jumps.entries.front() == Entry{t.root(r, v), v + 1});
  }
  CHECK(simulate_counts({t, 3, 3, true}, 2, 2000, 42) == simulate_counts({t, 3, 3, true}, 2, 2000, 42));
  CHECK(Rng::split(1, 2) != Rng::split(2, 1));
}

TEST_CASE("Monte Carlo frequencies within 4 sigma of the exact law") {
  for (auto [p, e0, f] : {std::tuple{2, 2, 1}, std::tuple{3, 3, 1}, std::tuple{2, 4, 2}}) {
    Shift s = Shift::rho_ep(p, static_cast<i64>(p - 1) * e0);
    i64 q = static_cast<i64>(std::pow(p, f));
    GameParams g{s, q, p, true};
    const long n = 100000;
    auto counts = simulate_counts(g, s.e_prime(), n, 2024);
    auto d = exact_distribution(g, s.e_prime());
    for (const auto& [j, c] : counts) CHECK(d.mass.count(j) == 1);
    for (const auto& [j, m] : d.mass) {
      double mu = m.get_d();
      double c = counts.count(j) ? static_cast<double>(counts.at(j)) : 0.0;
      CHECK(std::abs(c - n * mu) <= 4 * std::sqrt(n * mu * (1 - mu)) + 1e-9);
    }
  }
}
