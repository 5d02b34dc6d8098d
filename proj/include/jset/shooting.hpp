#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "jset/jumpset.hpp"

namespace jset {

using Rational = mpq_class;

struct GameParams {
  Shift shift;
  i64 q = 2;
  int p = 2;
  bool extended = true;
};

struct GameState {
  enum class Kind { First, Second };
  i64 position = 1;
  int length = 0;
  Kind kind = Kind::First;
  bool operator<(const GameState& o) const {
    if (position != o.position) return position < o.position;
    if (kind != o.kind) return kind < o.kind;
    return length < o.length;
  }
  bool operator==(const GameState& o) const {
    return position == o.position && length == o.length && kind == o.kind;
  }
};

struct StepLaw {
  std::map<GameState, Rational> next;
  i64 cutoff = 0;      // positions up to here are listed
  Rational tail;       // mass of landing beyond cutoff
};

// #{k >= 0 : lo < rho^k(e*) <= hi}
int special_count(const Shift& s, i64 lo, i64 hi);

StepLaw step_distribution(const GameParams& g, const GameState& from, i64 cutoff);

// Past this position no record shorter than m can occur.
i64 inert_threshold(const GameParams& g, int m);

struct Distribution {
  GameParams params;
  i64 r = 0;
  std::map<JumpSet, Rational> mass;
  Rational total() const;
};

Distribution exact_distribution(const GameParams& g, i64 r);
// Law of filt_ord of a Haar-random vector, conditioned on admissibility.
Distribution haar_distribution(const Shift& s, int p, int f);

// Named portable generator: splitmix64 expands the seed, mt19937_64 draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next() { return gen_(); }
  std::uint64_t below(std::uint64_t n);  // uniform on [0, n), rejection sampling
  static std::uint64_t split(std::uint64_t seed, std::uint64_t index);

 private:
  std::mt19937_64 gen_;
};

struct GamePath {
  std::vector<GameState> shots;  // start state first
  JumpSet jumps;
};

GamePath simulate(const GameParams& g, i64 r, Rng& rng);
// n games; game k uses Rng(Rng::split(seed, k)).
std::map<JumpSet, long> simulate_counts(const GameParams& g, i64 r, long n, std::uint64_t seed);

struct IdentityReport {
  bool ok = true;
  std::vector<std::string> lines;
};

IdentityReport identity_checks(const Shift& s, i64 q, int p);

}  // namespace jset
