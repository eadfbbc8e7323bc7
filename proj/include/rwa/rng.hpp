#pragma once

// Counter-based pseudo-random stream built on SplitMix64 mixing
// (Steele, Lea & Flood, "Fast splittable pseudorandom number generators"):
//
//   out_n = mix64(key + n * GAMMA),  n = 1, 2, ...
//   key   = mix64(seed ^ mix64(stream_id ^ STREAM_SALT))
//
// where GAMMA = 0x9E3779B97F4A7C15 and mix64 is the SplitMix64 finalizer.
// The state is (key, counter) only, so a fixed (seed, stream_id) replays the
// exact same 64-bit sequence on any platform, and jump-ahead is free.

#include <cstdint>

namespace rwa {

namespace detail {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kStreamSalt = 0x5851F42D4C957F2DULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

}  // namespace detail

class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0)
        : seed_(seed),
          stream_id_(stream_id),
          key_(detail::mix64(seed ^ detail::mix64(stream_id ^ detail::kStreamSalt))) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    std::uint64_t next_u64() noexcept {
        ++counter_;
        return detail::mix64(key_ + counter_ * detail::kGamma);
    }

    // Uniform on [0, 1) with 53 random bits.
    double next_uniform01() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform on the open interval (0, 1); zero draws are rejected.
    double next_open01() noexcept {
        for (;;) {
            const double u = next_uniform01();
            if (u > 0.0) return u;
        }
    }

    // Child stream with a hashed id, disjoint from the parent and from the
    // children of other parents; counter starts at zero.
    RngStream substream(std::uint64_t offset) const noexcept {
        return RngStream(seed_, detail::mix64(stream_id_ + detail::kGamma * (offset + 1)));
    }

    static constexpr const char* algorithm_name = "splitmix64-counter";

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace rwa
