#pragma once

#include <cstdint>
#include <random>

namespace survopt::num {

// Deterministic generator: mt19937_64 with explicit output transforms.
// The std <random> distributions are implementation-defined, which would
// break byte-identical output across toolchains, so the few transforms we
// need are spelled out here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // [0, 1), 53-bit resolution
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  // (0, 1]
  double uniform_pos() { return 1.0 - uniform(); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal via Box-Muller, spare cached
  double normal();

  // unbiased draw from [0, n) by rejection
  std::uint64_t below(std::uint64_t n);

  // inclusive bounds
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace survopt::num
