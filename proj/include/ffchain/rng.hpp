#ifndef FFCHAIN_RNG_HPP
#define FFCHAIN_RNG_HPP

#include <cstdint>
#include <stdexcept>

namespace ffchain {

/// Small deterministic random stream (splitmix64). Identical seeds produce
/// identical sequences on every platform, which is what the reproducibility
/// contracts of the survey code rely on; the standard distributions make no
/// such promise.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) noexcept : state_(seed) {}

    /// Independent stream for parallel work unit `task_index` under one master seed.
    static SeededRng derived(std::uint64_t master_seed, std::uint64_t task_index) noexcept {
        return SeededRng(mix(master_seed) ^ mix(task_index + 0x9e3779b97f4a7c15ull));
    }

    std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    /// Uniform draw from [0, bound) via rejection; bound must be positive.
    std::uint64_t uniform_below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("SeededRng::uniform_below: bound must be positive");
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        std::uint64_t r = next();
        while (r >= limit) r = next();
        return r % bound;
    }

private:
    static std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace ffchain

#endif // FFCHAIN_RNG_HPP
