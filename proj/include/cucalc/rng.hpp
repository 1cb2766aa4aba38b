#pragma once

#include <cstdint>
#include <random>

namespace cucalc {

// Deterministic sampling source. mt19937_64 is fully specified by the
// standard; the bounded reductions below avoid std::uniform_int_distribution,
// whose output is implementation-defined, so same-seed runs produce identical
// reports on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  // Uniform in [0, n) by rejection; n must be positive.
  uint64_t below(uint64_t n) {
    uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n);
    uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

  // Uniform integer in [lo, hi], inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  // True with probability num/den.
  bool chance(uint64_t num, uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace cucalc
