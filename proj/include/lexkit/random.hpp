#ifndef LEXKIT_RANDOM_HPP
#define LEXKIT_RANDOM_HPP

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace lexkit {

/// Named sub-streams so that, e.g., seed selection and baseline sampling for
/// the same repetition never share randomness.
enum class Stream : std::uint32_t {
    Seeds = 1,
    Baseline = 2,
    Annotation = 3,
    Bootstrap = 4,
    Correlation = 5,
};

/// Engine for item `counter` of `stream` under `rng_seed`. Every repetition
/// can be regenerated in isolation, independent of scheduling.
inline std::mt19937_64 stream_engine(std::uint64_t rng_seed, Stream stream, std::uint64_t counter) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(rng_seed),
        static_cast<std::uint32_t>(rng_seed >> 32),
        static_cast<std::uint32_t>(stream),
        static_cast<std::uint32_t>(counter),
        static_cast<std::uint32_t>(counter >> 32),
    };
    return std::mt19937_64(seq);
}

/// Partial Fisher-Yates: `k` distinct indices from [0, n) in draw order.
/// `scratch` is reused across calls to avoid reallocating.
template<typename Engine_>
void sample_indices(std::size_t n, std::size_t k, Engine_& engine, std::vector<std::size_t>& scratch) {
    if (scratch.size() != n) {
        scratch.resize(n);
        std::iota(scratch.begin(), scratch.end(), std::size_t{0});
    }
    for (std::size_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(scratch[i], scratch[pick(engine)]);
    }
}

template<typename Engine_>
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, Engine_& engine) {
    std::vector<std::size_t> scratch;
    sample_indices(n, k, engine, scratch);
    scratch.resize(k);
    return scratch;
}

/// Empirical quantile with linear interpolation between order statistics
/// (the "type 7" definition). `sorted` must be ascending and non-empty.
inline double quantile_sorted(const std::vector<double>& sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const std::size_t hi = lo + 1 < sorted.size() ? lo + 1 : lo;
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}

#endif
