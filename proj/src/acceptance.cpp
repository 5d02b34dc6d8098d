#include "jset/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "jset/characters.hpp"
#include "jset/eisenstein.hpp"
#include "jset/errors.hpp"
#include "jset/filtered.hpp"
#include "jset/padic.hpp"
#include "jset/shooting.hpp"

namespace jset {

namespace {

i64 power(i64 b, int k) {
  i64 r = 1;
  while (k-- > 0) r *= b;
  return r;
}

std::string fmt_poly(const Polygon& poly) {
  std::string s = "[";
  for (size_t k = 0; k < poly.vertices.size(); ++k) {
    if (k) s += ",";
    s += "(" + std::to_string(poly.vertices[k].first) + "," + std::to_string(poly.vertices[k].second) + ")";
  }
  return s + "]";
}

// Every (p, f, e0) point of the mass-formula grid.
template <class F>
void mass_grid(F&& fn) {
  for (int p : {2, 3, 5})
    for (int f : {1, 2})
      for (int e0 = 1; e0 <= 6; ++e0) fn(p, f, e0);
}

struct Sample {
  int p, f, n;
  EisensteinShape shape;
  std::vector<Tower::BElem> g;
  int precision;
};

// The strongly separable samples shared by criteria 6, 7 and 13.
std::vector<Sample> separable_samples(std::uint64_t seed, int per_point) {
  std::vector<Sample> out;
  for (int p : {3, 5})
    for (int f : {1, 2})
      for (int n = 1; n <= 5; ++n) {
        Rng rng(Rng::split(seed, static_cast<std::uint64_t>(p * 100 + f * 10 + n)));
        int prec = default_oracle_precision(p, 0, static_cast<i64>(p - 1) * n) + 2;
        BaseRing b(p, f, 0, prec);
        for (int k = 0; k < per_point; ++k) {
          auto shape = random_separable_shape(p, f, 0, n, rng);
          auto g = polynomial_of_shape(shape, b, rng);
          out.push_back({p, f, n, shape, std::move(g), prec});
        }
      }
  return out;
}

void c1(CriterionResult& r, const AcceptanceOptions&) {
  Shift s = Shift::rho_ep(2, 2);
  auto d = exact_distribution({s, 2, 2, true}, 2);
  std::map<JumpSet, Rational> want{
      {make_jumpset(s, true, {{1, 2}, {3, 1}}), Rational(1, 2)},
      {make_jumpset(s, true, {{1, 2}}), Rational(1, 4)},
      {make_jumpset(s, true, {{1, 2}, {4, 1}}), Rational(1, 4)},
  };
  for (const auto& [js, m] : d.mass) r.details.push_back(to_string(js) + " -> " + m.get_str());
  r.pass = d.mass == want;
  r.summary = "exact masses over rho_{2,2}, q=2, start 2: " + std::to_string(d.mass.size()) + " classes";
}

void c2(CriterionResult& r, const AcceptanceOptions&) {
  int bad = 0, points = 0;
  mass_grid([&](int p, int f, int e0) {
    Shift s = Shift::rho_ep(p, static_cast<i64>(p - 1) * e0);
    i64 q = power(p, f);
    auto game = exact_distribution({s, q, p, true}, s.e_prime());
    std::map<JumpSet, Rational> admissible;
    for (const auto& [js, m] : game.mass)
      if (is_admissible(js)) admissible[js] = m;
    auto haar = haar_distribution(s, p, f);
    ++points;
    if (haar.mass != admissible || game.total() != 1) {
      ++bad;
      r.details.push_back("mismatch at p=" + std::to_string(p) + " f=" + std::to_string(f) + " e0=" + std::to_string(e0));
    }
  });
  r.pass = bad == 0;
  r.summary = std::to_string(points - bad) + "/" + std::to_string(points) + " grid points agree exactly";
}

void c3(CriterionResult& r, const AcceptanceOptions&) {
  int bad = 0, checked = 0, skipped = 0, single = 0;
  mass_grid([&](int p, int f, int e0) {
    Shift s = Shift::rho_ep(p, static_cast<i64>(p - 1) * e0);
    i64 q = power(p, f);
    auto haar = haar_distribution(s, p, f);
    Rational top = 0;
    for (const auto& [js, m] : haar.mass) top = std::max(top, m);
    std::string where = "p=" + std::to_string(p) + " f=" + std::to_string(f) + " e0=" + std::to_string(e0);
    if (e0 % p != 0) {
      ++skipped;
      if (haar.mass.size() == 1 && top == 1) ++single;
      r.details.push_back("outside hypothesis p | e0: " + where + ", " + std::to_string(haar.mass.size()) +
                          " admissible class(es), max mass " + top.get_str());
      return;
    }
    ++checked;
    if (top != Rational(q - 1, q)) {
      ++bad;
      r.details.push_back("FAIL " + where + ": max mass " + top.get_str());
    }
  });
  r.pass = bad == 0 && checked > 0;
  r.summary = std::to_string(checked - bad) + "/" + std::to_string(checked) +
              " grid points with p | e0 have max mass (q-1)/q; " + std::to_string(skipped) +
              " points with p not dividing e0 excluded, " + std::to_string(single) +
              " of them with a single admissible class of mass 1";
}

void c4(CriterionResult& r, const AcceptanceOptions&) {
  int bad = 0, points = 0;
  mass_grid([&](int p, int f, int e0) {
    Shift s = Shift::rho_ep(p, static_cast<i64>(p - 1) * e0);
    if (s.v_rho(s.e_star()) < 2) return;
    ++points;
    auto rep = identity_checks(s, power(p, f), p);
    if (!rep.ok) {
      ++bad;
      for (const auto& l : rep.lines) r.details.push_back(l);
    }
  });
  r.pass = bad == 0 && points > 0;
  r.summary = std::to_string(points - bad) + "/" + std::to_string(points) + " grid points with v_rho(e*) >= 2 satisfy the identities";
}

void c5(CriterionResult& r, const AcceptanceOptions& opt) {
  const long total = 20000;
  bool ok = true;
  for (auto [p, n] : {std::pair{3, 3}, std::pair{2, 2}}) {
    Shift s = Shift::rho_ep(p, static_cast<i64>(p - 1) * n);
    int prec = default_oracle_precision(p, 0, s.e());
    BaseRing b(p, 1, 0, prec);
    std::map<JumpSet, long> counts;
    for (long k = 0; k < total; ++k) {
      Rng rng(Rng::split(opt.seed ^ static_cast<std::uint64_t>(p * 1000 + n), static_cast<std::uint64_t>(k)));
      Tower t(p, 1, 0, random_eisenstein(b, n, rng), prec);
      ++counts[field_jump_set(t)];
    }
    auto haar = haar_distribution(s, p, 1);
    std::set<JumpSet> classes;
    for (const auto& [js, c] : counts) classes.insert(js);
    for (const auto& [js, m] : haar.mass) classes.insert(js);
    double worst = 0;
    for (const auto& js : classes) {
      double mu = haar.mass.count(js) ? haar.mass.at(js).get_d() : 0.0;
      long c = counts.count(js) ? counts.at(js) : 0;
      double sigma = std::sqrt(total * mu * (1 - mu));
      double z = sigma > 0 ? std::abs(c - total * mu) / sigma : (c == 0 ? 0.0 : INFINITY);
      worst = std::max(worst, z);
      std::ostringstream line;
      line.precision(4);
      line << "p=" << p << " e0=" << n << " " << to_string(js) << " observed " << c << " expected " << total * mu
           << " z " << z;
      r.details.push_back(line.str());
      if (z > 4) ok = false;
    }
    std::ostringstream w;
    w.precision(3);
    w << "(p=" << p << ",e0=" << n << ") max |z| " << worst;
    r.summary += (r.summary.empty() ? "" : "; ") + w.str();
  }
  r.pass = ok;
  r.summary = "20000 Haar samples each: " + r.summary;
}

void c6(CriterionResult& r, const AcceptanceOptions& opt) {
  int bad = 0, disagree = 0, total = 0;
  for (const auto& sm : separable_samples(opt.seed, 100)) {
    ++total;
    auto sj = jump_set_of_shape(sm.shape);
    if (!sj.routes_agree) ++disagree;
    Tower t(sm.p, sm.f, 0, sm.g, sm.precision);
    auto js = field_jump_set(t);
    if (!sj.field || *sj.field != js) {
      ++bad;
      r.details.push_back("mismatch p=" + std::to_string(sm.p) + " f=" + std::to_string(sm.f) + " n=" +
                          std::to_string(sm.n) + ": oracle " + to_string(js) + ", shape " + to_string(sj.over_inf));
    }
  }
  r.pass = bad == 0 && disagree == 0;
  r.summary = std::to_string(total - bad) + "/" + std::to_string(total) + " shapes match the oracle; procedure routes disagree on " +
              std::to_string(disagree);
}

void c7(CriterionResult& r, const AcceptanceOptions& opt) {
  int bad = 0, total = 0;
  for (const auto& sm : separable_samples(opt.seed, 100)) {
    ++total;
    Tower t(sm.p, sm.f, 0, sm.g, sm.precision);
    auto js = field_jump_set(t);
    auto a = ramification_polygon(js, sm.n), b = ramification_newton(t);
    if (a != b) {
      ++bad;
      r.details.push_back("mismatch " + to_string(js) + ": " + fmt_poly(a) + " vs " + fmt_poly(b));
    }
  }
  BaseRing b(3, 1, 0, 10);
  Tower t(3, 1, 0, {b.y(), b.y(), b.zero()}, 10);
  auto hand = ramification_newton(t);
  Polygon want{{{1, 4}, {3, 3}}};
  r.details.push_back("x^3+yx+y: " + fmt_poly(hand));
  r.pass = bad == 0 && hand == want;
  r.summary = std::to_string(total - bad) + "/" + std::to_string(total) + " polygons equal; hand example " + fmt_poly(hand);
}

void c8(CriterionResult& r, const AcceptanceOptions&) {
  BaseRing b(2, 1, 0, 12);
  Tower t(2, 1, 0, {b.from_int(2), b.from_int(2)}, 12);
  auto oracle = field_jump_set(t);
  EisensteinShape shape{2, 1, 0, 2, {{0, 1}, {1, 1}}};
  auto sj = jump_set_of_shape(shape);
  JumpSet want = make_jumpset(Shift::rho_ep(2, 2), true, {{1, 2}});
  std::string from_shape = sj.field ? to_string(*sj.field) : to_string(sj.over_inf) + " (not a jump set over rho_{2,2})";
  r.details.push_back("oracle " + to_string(oracle) + ", shape route " + from_shape);
  r.pass = oracle == want && (!sj.field || *sj.field != oracle);
  r.summary = "x^2+2x+2 over Q_2: oracle " + to_string(oracle) + ", shape route " + from_shape;
}

void c9(CriterionResult& r, const AcceptanceOptions&) {
  long pairs = 0, bad = 0;
  for (int p : {2, 3, 5})
    for (int e0 = 1; e0 <= 3; ++e0)
      for (int f : {1, 2}) {
        Shift s = Shift::rho_ep(p, static_cast<i64>(p - 1) * e0);
        auto all = enumerate(s, true, 4, false);
        for (const auto& a : all)
          for (const auto& b : all) {
            ++pairs;
            if (is_compatible(a, b, f, p) != is_adequate(a, b, f, p)) {
              if (++bad <= 10) r.details.push_back("p=" + std::to_string(p) + " f=" + std::to_string(f) + " " +
                                                   to_string(a) + " vs " + to_string(b));
            }
          }
      }
  r.pass = bad == 0;
  r.summary = std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches";
}

void c10(CriterionResult& r, const AcceptanceOptions&) {
  int cases = 0, bad = 0;
  for (int p : {2, 3})
    for (i64 e = p - 1; e <= 4; e += p - 1) {
      Shift s = Shift::rho_ep(p, e);
      const int k = static_cast<int>(s.tset_star().size());
      int n = 4;
      while (n > 1 && std::pow(double(p), n * k) > 2e7) --n;
      std::vector<std::optional<JumpSet>> mods{std::nullopt};
      for (auto& js : enumerate(s, true, 0, true)) mods.push_back(js);
      for (const auto& mod : mods) {
        ++cases;
        std::set<std::vector<Entry>> brute, fam;
        for (const auto& js : brute_force_character_jumpsets(s, mod, p, n)) brute.insert(js.entries);
        for (const auto& js : character_jumpset_family(s, mod, 1, p, n)) fam.insert(js.entries);
        std::string label = "p=" + std::to_string(p) + " e=" + std::to_string(e) + " N=" + std::to_string(n) +
                            " module " + (mod ? to_string(*mod) : "free");
        if (brute != fam) {
          ++bad;
          r.details.push_back("FAIL " + label);
        } else {
          r.details.push_back(label + ": " + std::to_string(fam.size()) + " jump sets");
        }
      }
    }
  r.pass = bad == 0;
  r.summary = std::to_string(cases - bad) + "/" + std::to_string(cases) + " quotients: brute force = family";
}

void c11(CriterionResult& r, const AcceptanceOptions& opt) {
  long vectors = 0, bad = 0, canon = 0, canon_bad = 0;
  for (int p : {2, 3, 5})
    for (int e0 = 1; e0 <= 3; ++e0)
      for (int f : {1, 2})
        for (bool ext : {false, true}) {
          Shift s = Shift::rho_ep(p, static_cast<i64>(p - 1) * e0);
          Rng rng(Rng::split(opt.seed, static_cast<std::uint64_t>(p * 1000 + e0 * 100 + f * 10 + ext)));
          std::vector<i64> idx = ext ? s.tset_star() : s.tset();
          for (int k = 0; k < 1000; ++k) {
            ValuationVector v{s, f, ext, {}};
            int top = 0;
            for (i64 i : idx) {
              int slots = (ext && i == s.e_star()) ? 1 : f;
              for (int sl = 1; sl <= slots; ++sl) {
                int val = static_cast<int>(rng.below(7));  // 0 means infinite
                if (val > 0) v.set(i, sl, val);
                top = std::max(top, val);
              }
            }
            ++vectors;
            auto direct = filt_ord(v);
            auto rebuilt = jumpset_from_profile(s, ext, quotient_weight_profile(v, top + 2));
            if (direct != rebuilt && ++bad <= 5) r.details.push_back("mismatch " + to_string(direct) + " vs " + to_string(rebuilt));
          }
          for (const auto& js : enumerate(s, ext, 5, false)) {
            ++canon;
            if (filt_ord(canonical_vector(js, f)) != js) ++canon_bad;
          }
        }
  r.pass = bad == 0 && canon_bad == 0;
  r.summary = std::to_string(vectors - bad) + "/" + std::to_string(vectors) + " random vectors agree; " +
              std::to_string(canon - canon_bad) + "/" + std::to_string(canon) + " canonical vectors round-trip";
}

void c12(CriterionResult& r, const AcceptanceOptions&) {
  int total = 0, bad = 0;
  for (int p : {2, 3})
    for (i64 e = p - 1; e <= 6; e += p - 1) {
      Shift s = Shift::rho_ep(p, e);
      for (const auto& js : enumerate(s, true, 0, true)) {
        if (js.contains(s.e_star())) continue;
        ++total;
        auto real = realize(js, 1);
        Tower t(p, 1, 0, real.g, real.precision);
        auto got = field_jump_set(t);
        if (got != js) {
          ++bad;
          r.details.push_back("FAIL " + to_string(js) + " -> " + to_string(got));
        }
      }
    }
  r.pass = bad == 0 && total > 0;
  r.summary = std::to_string(total - bad) + "/" + std::to_string(total) + " admissible jump sets realized";
}

void c13(CriterionResult& r, const AcceptanceOptions& opt) {
  int total = 0, bad = 0;
  auto samples = separable_samples(opt.seed, 100);
  for (size_t k = 0; k < samples.size(); k += 10) {
    const auto& sm = samples[k];
    for (int d : {2, 5}) {
      if (d % sm.p == 0) continue;
      // Same integer coefficients, read at the higher precision g(x^d) needs.
      int prec = default_oracle_precision(sm.p, 0, static_cast<i64>(sm.p - 1) * sm.n * d) + 2;
      BaseRing b(sm.p, sm.f, 0, prec);
      auto js = field_jump_set(Tower(sm.p, sm.f, 0, sm.g, prec));
      Tower big(sm.p, sm.f, 0, substitute_power(sm.g, b, d), prec);
      auto got = field_jump_set(big);
      ++total;
      if (got != tame_transform(js, d)) {
        ++bad;
        r.details.push_back("FAIL d=" + std::to_string(d) + " " + to_string(js) + " -> " + to_string(got));
      }
    }
  }
  r.pass = bad == 0 && total > 0;
  r.summary = std::to_string(total - bad) + "/" + std::to_string(total) + " g(x^d) oracles equal the tame transform";
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& opt) {
  static const std::vector<std::function<void(CriterionResult&, const AcceptanceOptions&)>> table{
      c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13};
  if (id < 1 || id > kCriteria) throw DomainError("unknown criterion id " + std::to_string(id));
  CriterionResult r;
  r.id = id;
  auto t0 = std::chrono::steady_clock::now();
  try {
    table[id - 1](r, opt);
  } catch (const std::exception& ex) {
    r.pass = false;
    r.summary = std::string("error: ") + ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.summary << " [" << r.seconds << "s]";
  return os.str();
}

}  // namespace jset
