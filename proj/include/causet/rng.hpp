#pragma once

#include <cstdint>

namespace causet {

/// Counter-based deterministic random generator (SplitMix64 in counter mode).
///
/// The word at counter i equals the (i+1)-th output of the reference
/// sequential SplitMix64 generator seeded with the same value, so the base
/// stream can be checked against published test vectors. Distinct streams
/// derive independent keys from (seed, stream), which makes the generator
/// splittable: any chunk of the output can be produced without generating
/// the words before it, and chunked generation is bit-identical to
/// sequential generation on every platform.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(derive_key(seed, stream)) {}

    /// 64 random bits at position `counter` of this stream.
    std::uint64_t word(std::uint64_t counter) const {
        return finalize(key_ + (counter + 1) * kGamma);
    }

    /// Uniform double in [0, 1) at position `counter` (53 mantissa bits).
    double unit(std::uint64_t counter) const {
        return static_cast<double>(word(counter) >> 11) * 0x1.0p-53;
    }

    std::uint64_t key() const { return key_; }

    static std::uint64_t finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

    // Stream 0 keeps the raw seed so it matches the reference sequence.
    static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream) {
        if (stream == 0) return seed;
        return finalize(seed ^ finalize(stream * kGamma));
    }

    std::uint64_t key_;
};

/// Sequential adapter over CounterRng for consumers that just want a stream.
class CounterStream {
public:
    explicit CounterStream(std::uint64_t seed, std::uint64_t stream = 0)
        : rng_(seed, stream) {}

    std::uint64_t next_word() { return rng_.word(counter_++); }
    double next_unit() { return rng_.unit(counter_++); }

    /// Uniform double in [lo, hi).
    double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    std::uint64_t counter() const { return counter_; }

private:
    CounterRng rng_;
    std::uint64_t counter_ = 0;
};

}
