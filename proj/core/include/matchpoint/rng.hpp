#ifndef MATCHPOINT_RNG_HPP
#define MATCHPOINT_RNG_HPP

#include <cstdint>

namespace matchpoint {

/// SplitMix64 stream. Trial streams are derived from (seed, trial index) by
/// avalanche mixing, so trial i's draws never depend on how many draws trial
/// i-1 consumed; parallel runs partitioned by index are reproducible.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}

    static RandomStream for_trial(std::uint64_t seed, std::uint64_t trial) {
        return RandomStream(mix(seed ^ mix(trial + 0x9e3779b97f4a7c15ull)));
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double prob) { return next_unit() < prob; }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace matchpoint

#endif
