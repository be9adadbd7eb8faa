#pragma once

#include <cstdint>
#include <random>

#include "spectral/numbers.hpp"

namespace spectral {

inline constexpr std::uint64_t default_seed = 0xC0FFEE;

// Seeded generator with explicitly scaled draws, so identical seeds give
// identical streams no matter which standard library is linked.
class rng {
  public:
    explicit rng(std::uint64_t seed = default_seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }

    /// Uniform integer in [lo, hi] (inclusive).
    long uniform_int(long lo, long hi) {
        std::uint64_t span = std::uint64_t(hi - lo) + 1;
        return lo + long(bits() % span);
    }

    /// Uniform double in [lo, hi).
    double uniform_real(double lo, double hi) {
        double unit = double(bits() >> 11) * 0x1.0p-53;
        return lo + unit * (hi - lo);
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace spectral
