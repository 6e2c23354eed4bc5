#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace dustbench {

// Seeded generator with platform-independent derived distributions.
// std::uniform_*_distribution output differs between standard libraries, so
// the mapping from engine output to values is done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform index in [0, n); unbiased via rejection.
  std::size_t index(std::size_t n);

  // Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Per-entry seed derived from (master seed, subset name, entry index).
std::uint64_t derive_seed(std::uint64_t master, std::string_view subset,
                          std::uint64_t index);

}  // namespace dustbench
