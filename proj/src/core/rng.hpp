#pragma once

#include <cstdint>
#include <string_view>

namespace ncrsim {

// Deterministic, platform-independent random streams. Every stochastic
// process in the simulator owns a stream derived from (master seed, purpose
// tag, entity ids), so adding or removing entities never shifts the draws
// of unrelated processes.
class RngStream {
  public:
    explicit RngStream(uint64_t seed);

    uint64_t next_u64();
    /// Uniform double in [0, 1) with 53-bit resolution.
    double uniform();
    /// Standard normal via Box-Muller (pairs cached).
    double normal();

  private:
    uint64_t s_[4];
    double cached_normal_ = 0.0;
    bool has_cached_ = false;
};

/// Derives a child seed from a master seed, a purpose tag and up to two ids.
uint64_t derive_seed(uint64_t master, std::string_view tag, uint64_t a = 0, uint64_t b = 0);

} // namespace ncrsim
