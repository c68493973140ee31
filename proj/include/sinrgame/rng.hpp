#pragma once
#include <cstdint>

namespace sinrgame {

// Counter-based generator: the k-th draw of a stream is a pure function of
// (seed, stream, k), so per-player streams are reproducible regardless of
// evaluation order.
namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
} // namespace detail

class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : base_(detail::mix64(detail::mix64(seed) ^ (0xD6E8FEB86659FD93ULL * (stream + 1)))) {}

    // draw #k as u64
    std::uint64_t at(std::uint64_t k) const {
        return detail::mix64(base_ ^ (0xA0761D6478BD642FULL * (k + 1)));
    }

    // draw #k mapped to [0,1)
    double unit_at(std::uint64_t k) const {
        return static_cast<double>(at(k) >> 11) * 0x1.0p-53;
    }

    std::uint64_t next() { return at(counter_++); }
    double next_unit() { return unit_at(counter_++); }

private:
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

} // namespace sinrgame
