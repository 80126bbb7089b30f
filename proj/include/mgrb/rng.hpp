#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace mgrb {

// Deterministic tag-based seed derivation (FNV-1a over the tag, then a
// splitmix64 finalizer). Lets one experiment seed drive many independent
// streams ("phase2.shuffle", "memory", ...) whose outputs do not depend on
// how much any other stream consumed.
std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag);

// Seeded PRNG with a fixed, documented core: MT19937-64 as specified in the
// C++ standard, which pins the raw output stream bit-exactly on every
// conforming platform. All distributions are implemented here rather than via
// std::*_distribution (whose algorithms are implementation-defined).
// Single-owner: never share an Rng across threads.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0,1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Unbiased integer in [0,n) by rejection sampling. n must be > 0.
    std::uint64_t below(std::uint64_t n);

    // Standard normal via Box-Muller. One fresh pair of uniforms per call, no
    // cached spare, so serialized state fully describes the stream.
    double normal();

    // Independent stream derived from this Rng's original seed and a tag.
    // Does not consume or depend on the current state.
    Rng derive(std::string_view tag) const { return Rng(mix_seed(seed_, tag)); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

    // k distinct indices drawn uniformly from [0,n), in draw order.
    std::vector<std::size_t> pick(std::size_t n, std::size_t k);

    std::string serialize_state() const;
    void restore_state(const std::string& s);

    bool operator==(const Rng& other) const {
        return seed_ == other.seed_ && engine_ == other.engine_;
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace mgrb
