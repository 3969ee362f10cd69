#pragma once

#include <cstdint>

#include "grnet/errors.hpp"

namespace grnet_test {

/// Runs `attempt` on consecutive seeds until one draw satisfies the
/// generic-position preconditions (no LatticeError). Exact arithmetic on
/// bounded integer draws occasionally hits honest degeneracies (a singular
/// coefficient, a collapsed span); those draws are discarded and counted,
/// never patched. The seed cursor advances past consumed seeds.
template <typename F>
auto with_generic_draw(std::uint64_t& seed, F attempt, int* discarded = nullptr,
                       int max_tries = 64) {
  for (int t = 0; t < max_tries; ++t) {
    std::uint64_t s = seed++;
    try {
      return attempt(s);
    } catch (const grnet::LatticeError&) {
      if (discarded) ++*discarded;
    }
  }
  throw grnet::Error("no generic draw found within the seed budget");
}

}  // namespace grnet_test
