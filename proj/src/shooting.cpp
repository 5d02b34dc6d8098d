#include "jset/shooting.hpp"

#include <algorithm>
#include <functional>

#include "jset/errors.hpp"

namespace jset {

namespace {

Rational frac(i64 a, i64 b) {
  Rational r(mpz_class(static_cast<long>(a)), mpz_class(static_cast<long>(b)));
  r.canonicalize();
  return r;
}

// k with rho^k(e*) == z, or -1.
int special_index(const Shift& s, i64 z) {
  i64 x = s.e_star();
  for (int k = 0; x <= z; ++k, x = s(x))
    if (x == z) return k;
  return -1;
}

using Suffix = std::vector<Entry>;
using SuffixLaw = std::map<Suffix, Rational>;

void add_to(SuffixLaw& out, const Suffix& key, const Rational& w) {
  auto [it, fresh] = out.try_emplace(key, w);
  if (!fresh) it->second += w;
}

Distribution finish(const GameParams& g, i64 r, const SuffixLaw& law) {
  Distribution d{g, r, {}};
  for (const auto& [entries, w] : law) {
    if (w == 0) continue;
    d.mass[make_jumpset(g.shift, g.extended, entries)] += w;
  }
  return d;
}

void check_params(const GameParams& g) {
  if (!g.shift.finite_t()) throw DomainError("shooting game needs a shift with finite T_rho");
  if (g.q < 2 || g.p < 2) throw DomainError("shooting game: q and p must be >= 2");
}

}  // namespace

int special_count(const Shift& s, i64 lo, i64 hi) {
  int n = 0;
  for (i64 x = s.e_star(); x <= hi; x = s(x))
    if (x > lo) ++n;
  return n;
}

StepLaw step_distribution(const GameParams& g, const GameState& from, i64 cutoff) {
  check_params(g);
  StepLaw law;
  law.cutoff = std::max(cutoff, from.position);
  Rational pass = 1;
  const Rational first = frac(g.q - 1, g.q), skip = frac(1, g.q);
  for (i64 y = from.position + 1; y <= law.cutoff; ++y) {
    int k = g.extended ? special_index(g.shift, y) : -1;
    Rational pdiv = k >= 0 ? frac(1, g.p) : Rational(1);
    law.next[{y, g.shift.v_rho(y), GameState::Kind::First}] = pass * first * pdiv;
    if (k >= 0) law.next[{y, k, GameState::Kind::Second}] = pass * frac(g.p - 1, g.p);
    pass *= skip * pdiv;
  }
  law.tail = pass;
  return law;
}

i64 inert_threshold(const GameParams& g, int m) {
  const Shift& s = g.shift;
  if (m < 1) return 0;
  i64 x = s.iterate(s.e_star(), m - 1);
  if (s.kind() == Shift::Kind::RhoEp && x > s.e_star() + static_cast<i64>(m) * s.e())
    throw std::logic_error("inert threshold exceeds e* + m*e");
  return x;
}

Rational Distribution::total() const {
  Rational t = 0;
  for (const auto& [js, w] : mass) t += w;
  return t;
}

Distribution exact_distribution(const GameParams& g, i64 r) {
  check_params(g);
  const Shift& s = g.shift;
  if (r < 1 || r >= s.e_star()) throw DomainError("exact_distribution: need 1 <= r < e*");
  const Rational first = frac(g.q - 1, g.q), skip = frac(1, g.q);
  const Rational second = frac(g.p - 1, g.p), pinv = frac(1, g.p);

  std::map<std::pair<i64, int>, SuffixLaw> memo;
  std::function<const SuffixLaw&(i64, int)> from = [&](i64 x, int m) -> const SuffixLaw& {
    auto key = std::make_pair(x, m);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    SuffixLaw out;
    Rational pass = 1;
    const i64 lim = inert_threshold(g, m);
    for (i64 y = x + 1; y <= lim; ++y) {
      int k = g.extended ? special_index(s, y) : -1;
      Rational pdiv = k >= 0 ? pinv : Rational(1);
      Rational pf = pass * first * pdiv;
      int len = s.v_rho(y);
      if (len < m) {
        Entry en{s.root(y, len), len + 1};
        if (len == 0) {
          add_to(out, {en}, pf);
        } else {
          for (const auto& [suf, w] : from(y, len)) {
            Suffix full{en};
            full.insert(full.end(), suf.begin(), suf.end());
            add_to(out, full, pf * w);
          }
        }
      } else {
        for (const auto& [suf, w] : from(y, m)) add_to(out, suf, pf * w);
      }
      if (k >= 0) add_to(out, {Entry{s.e_star(), k + 1}}, pass * second);  // k < m below lim
      pass *= skip * pdiv;
    }
    add_to(out, {}, pass);
    return memo.emplace(key, std::move(out)).first->second;
  };

  int m0 = s.v_rho(r);
  Entry head{s.root(r, m0), m0 + 1};
  SuffixLaw law;
  if (m0 == 0) {
    law[{head}] = 1;
  } else {
    for (const auto& [suf, w] : from(r, m0)) {
      Suffix full{head};
      full.insert(full.end(), suf.begin(), suf.end());
      add_to(law, full, w);
    }
  }
  return finish(g, r, law);
}

Distribution haar_distribution(const Shift& s, int p, int f) {
  if (!s.finite_t()) throw DomainError("haar_distribution needs a shift with finite T_rho");
  if (!is_prime(p) || f < 1) throw DomainError("haar_distribution: need prime p and f >= 1");
  i64 q = 1;
  for (int k = 0; k < f; ++k) q *= p;
  const i64 estar = s.e_star();
  const int m = s.v_rho(estar);
  const i64 istar = s.root(estar, m);

  // Conditioned on admissibility every index t != i* of T has rho^val(t) > e*.
  struct Idx {
    i64 t;
    int c;
    Rational h;
  };
  std::vector<Idx> idx;
  for (i64 t : s.tset()) {
    if (t == istar) continue;
    int c = 1;
    while (s.iterate(t, c) <= estar) ++c;
    idx.push_back({t, c, frac(q - 1, q)});
  }
  idx.push_back({estar, 1, frac(p - 1, p)});

  std::map<std::pair<int, i64>, SuffixLaw> memo;
  std::function<const SuffixLaw&(int, i64)> level = [&](int b, i64 wmin) -> const SuffixLaw& {
    auto key = std::make_pair(b, wmin);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    SuffixLaw out;
    if (b == m) {
      out[{Entry{istar, m}}] = 1;
    } else {
      Rational none = 1;
      for (const auto& ix : idx) {
        if (ix.c > b) continue;
        i64 reach = s.iterate(ix.t, b);
        if (reach >= wmin) continue;
        Rational w = none * ix.h;
        for (const auto& [suf, pr] : level(b + 1, reach)) {
          Suffix full = suf;
          full.push_back({ix.t, b});
          add_to(out, full, w * pr);
        }
        none *= 1 - ix.h;
      }
      for (const auto& [suf, pr] : level(b + 1, wmin)) add_to(out, suf, none * pr);
    }
    return memo.emplace(key, std::move(out)).first->second;
  };

  SuffixLaw law;
  for (const auto& [suf, w] : level(1, kHuge)) {
    Suffix sorted = suf;
    std::sort(sorted.begin(), sorted.end());
    add_to(law, sorted, w);
  }
  GameParams g{s, q, p, true};
  return finish(g, s.e_prime(), law);
}

Rng::Rng(std::uint64_t seed) : gen_(split(seed, 0)) {}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw DomainError("Rng::below: empty range");
  const std::uint64_t threshold = (0 - n) % n;
  while (true) {
    std::uint64_t x = gen_();
    if (x >= threshold) return x % n;
  }
}

std::uint64_t Rng::split(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

GamePath simulate(const GameParams& g, i64 r, Rng& rng) {
  check_params(g);
  const Shift& s = g.shift;
  if (r < 1 || r >= s.e_star()) throw DomainError("simulate: need 1 <= r < e*");
  GamePath path;
  int m = s.v_rho(r);
  path.shots.push_back({r, m, GameState::Kind::First});
  std::vector<Entry> entries{{s.root(r, m), m + 1}};
  const auto q = static_cast<std::uint64_t>(g.q), p = static_cast<std::uint64_t>(g.p);
  i64 lim = inert_threshold(g, m);
  for (i64 z = r + 1; m > 0 && z <= lim; ++z) {
    int k = g.extended ? special_index(s, z) : -1;
    if (k >= 0 && rng.below(p) < p - 1) {
      path.shots.push_back({z, k, GameState::Kind::Second});
      entries.push_back({s.e_star(), k + 1});
      break;
    }
    if (rng.below(q) < q - 1) {
      int len = s.v_rho(z);
      path.shots.push_back({z, len, GameState::Kind::First});
      if (len < m) {
        entries.push_back({s.root(z, len), len + 1});
        m = len;
        lim = inert_threshold(g, m);
      }
    }
  }
  std::sort(entries.begin(), entries.end());
  path.jumps = make_jumpset(s, g.extended, std::move(entries));
  return path;
}

std::map<JumpSet, long> simulate_counts(const GameParams& g, i64 r, long n, std::uint64_t seed) {
  std::map<JumpSet, long> counts;
  for (long k = 0; k < n; ++k) {
    Rng rng(Rng::split(seed, static_cast<std::uint64_t>(k)));
    ++counts[simulate(g, r, rng).jumps];
  }
  return counts;
}

namespace {

int min_beta(const JumpSet& js) { return js.empty() ? 0 : js.entries.back().beta; }

JumpSet shifted(const JumpSet& js, int by) {
  JumpSet out = js;
  for (auto& en : out.entries) en.beta += by;
  return out;
}

}  // namespace

IdentityReport identity_checks(const Shift& s, i64 q, int p) {
  IdentityReport rep;
  const int m = s.v_rho(s.e_star());
  if (m < 2) throw DomainError("identity checks need v_rho(e*) >= 2");
  GameParams g{s, q, p, true};
  const i64 eprime = s.e_prime();
  Distribution mu = exact_distribution(g, eprime);
  auto mass_where = [&](auto pred) {
    Rational t = 0;
    for (const auto& [js, w] : mu.mass)
      if (pred(js)) t += w;
    return t;
  };
  for (int j = 1; j <= m + 1; ++j) {
    Rational lhs = (p - 1) * mass_where([&](const JumpSet& js) { return min_beta(js) >= j + 1; });
    Rational rhs = mass_where([&](const JumpSet& js) { return js.beta(s.e_star()) == j; });
    bool ok = lhs == rhs;
    rep.ok = rep.ok && ok;
    rep.lines.push_back("dec5 j=" + std::to_string(j) + ": " + lhs.get_str() + " vs " + rhs.get_str() +
                        (ok ? " ok" : " FAIL"));
  }
  for (int j = 1; j <= m; ++j) {
    i64 rj = s.root(eprime, j - 1);
    Distribution dj = exact_distribution(g, rj);
    Rational scale = mass_where([&](const JumpSet& js) { return min_beta(js) >= j; });
    bool ok = true;
    std::string bad;
    for (const auto& [js, w] : dj.mass) {
      auto it = mu.mass.find(shifted(js, j - 1));
      Rational got = it == mu.mass.end() ? Rational(0) : it->second;
      if (got != scale * w) {
        ok = false;
        bad = to_string(js) + ": " + got.get_str() + " vs " + Rational(scale * w).get_str();
      }
    }
    for (const auto& [js, w] : mu.mass) {
      if (min_beta(js) < j) continue;
      if (!dj.mass.count(shifted(js, -(j - 1)))) {
        ok = false;
        bad = to_string(js) + " has no preimage";
      }
    }
    rep.ok = rep.ok && ok;
    rep.lines.push_back("dec1 j=" + std::to_string(j) + " start=" + std::to_string(rj) + ": " +
                        (ok ? "ok" : "FAIL " + bad));
  }
  return rep;
}

}  // namespace jset
