#pragma once

#include <cstdint>
#include <random>

namespace grnet {

/// Deterministic random source. mt19937_64 output is fixed by the C++
/// standard, and the int sampling below avoids uniform_int_distribution
/// (whose mapping is implementation-defined), so a seed pins the exact
/// stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi] inclusive (modulo bias is irrelevant
  /// here; only determinism and coverage matter).
  long uniform(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace grnet
