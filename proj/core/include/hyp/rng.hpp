#ifndef HYP_RNG_HPP
#define HYP_RNG_HPP

#include <cstdint>

namespace hyp {

// Splittable counter-based generator: output i of stream (seed, stream) is a
// pure function of (seed, stream, i), so parallel consumers stay reproducible.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(mix(mix(seed ^ 0x9e3779b97f4a7c15ULL) + mix(stream))) {}

    std::uint64_t next_u64() { return mix(key_ + (++counter_) * 0x9e3779b97f4a7c15ULL); }

    // Uniform on [lo, hi], inclusive, via rejection.
    long uniform_int(long lo, long hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t x = next_u64();
        while (x >= limit) x = next_u64();
        return lo + static_cast<long>(x % range);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace hyp

#endif
