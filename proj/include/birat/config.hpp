#pragma once

#include <cstdint>

namespace birat {

// Engine budgets and knobs for randomized procedures. Everything that can
// consume unbounded time is gated by pair_budget and surfaces as a
// ResourceLimit error, never as silent truncation.
struct Config {
  uint64_t pair_budget = 2'000'000; // S-pairs processed before ResourceLimit
  unsigned r_max = 3;               // powers I^r examined by the regularity profile
  unsigned reduction_trials = 3;    // Monte-Carlo trials for reduction numbers
  unsigned reduction_cap = 6;       // largest reduction number probed
  int coeff_bound = 50;             // random coefficients drawn from {-B..B}\{0}
  uint64_t seed = 42;
};

// splitmix64: deterministic across platforms, which std::uniform_int_distribution
// is not. Seeds are recorded in reports so runs can be replayed.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n), rejection-sampled to stay unbiased
  uint64_t below(uint64_t n) {
    uint64_t lim = ~0ull - (~0ull % n);
    uint64_t v;
    do {
      v = next();
    } while (v >= lim);
    return v % n;
  }

  // inclusive range
  int64_t in_range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

private:
  uint64_t state_;
};

} // namespace birat
