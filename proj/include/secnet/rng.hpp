#ifndef SECNET_RNG_HPP
#define SECNET_RNG_HPP

#include <cstdint>

namespace secnet {

// Counter-based generator: sample m of a run keyed by seed k is a pure
// function of (k, m). Streams derived from the same seed are independent
// for practical purposes and reproducible under any execution order.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}

    // splitmix64 finalizer
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key() const { return key_; }

    CounterRng derive(std::uint64_t stream) const {
        return CounterRng(mix(key_ ^ mix(stream + 0x165667b19e3779f9ULL)));
    }

    std::uint64_t bits(std::uint64_t counter) const {
        return mix(key_ ^ mix(counter));
    }

    // uniform in [0,1)
    double uniform(std::uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

    // uniform integer in [0, bound), bound > 0
    std::uint64_t below(std::uint64_t counter, std::uint64_t bound) const {
        return static_cast<std::uint64_t>(uniform(counter) * static_cast<double>(bound));
    }

private:
    std::uint64_t key_;
};

// Sequential stream view over a CounterRng, for generator-style code.
class RngStream {
public:
    explicit RngStream(CounterRng rng) : rng_(rng) {}
    RngStream(std::uint64_t seed, std::uint64_t stream)
        : rng_(CounterRng(seed).derive(stream)) {}

    double uniform() { return rng_.uniform(counter_++); }
    std::uint64_t below(std::uint64_t bound) { return rng_.below(counter_++, bound); }

private:
    CounterRng rng_;
    std::uint64_t counter_ = 0;
};

}  // namespace secnet

#endif
