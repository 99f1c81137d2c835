#pragma once

#include <cmath>
#include <cstdint>

namespace ratiostat {

// Finalizer step of splitmix64 (Steele, Lea & Flood); bijective in the
// state, so successive outputs are never equal.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256** (Blackman & Vigna), state expanded from a (seed, stream
// index) key by splitmix64, so substream creation is O(1) and any
// replicate can be regenerated in isolation.  A stream is single-owner:
// never share one instance across threads; create one per task instead.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t key = seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
        for (auto& word : s_) word = splitmix64_next(key);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform on the open interval (0,1): 53-bit mantissa, offset by half an
    // ulp so 0 and 1 are unreachable (logs and reciprocals stay finite).
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Rate-1 exponential by inversion.
    double exponential() { return -std::log(uniform()); }

    // Standard normal; polar method due to Marsaglia, one value cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double v1, v2, s;
        do {
            v1 = 2.0 * uniform() - 1.0;
            v2 = 2.0 * uniform() - 1.0;
            s = v1 * v1 + v2 * v2;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v2 * f;
        have_spare_ = true;
        return v1 * f;
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

inline RngStream substream(std::uint64_t seed, std::uint64_t index) {
    return RngStream(seed, index);
}

}  // namespace ratiostat
