#pragma once

// Subset enumeration in increasing mask order and deterministic range-parallel
// evaluation. Internal to the library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <thread>
#include <vector>

namespace clawcycle::detail {

std::uint64_t binomial(int n, int k);

/// The rank-th k-subset of {0..n-1} in increasing mask order (colex).
std::uint64_t unrank_subset(std::uint64_t rank, int n, int k);

/// Next mask with the same popcount (Gosper's hack).
inline std::uint64_t next_subset(std::uint64_t x) {
    const std::uint64_t low = x & (~x + 1);
    const std::uint64_t ripple = x + low;
    return ripple | (((x ^ ripple) >> 2) / low);
}

/// Splits [0, count) into `workers` contiguous ranges and runs
/// fn(begin, end, out) on each, where out views outcomes[begin, end).
template <typename Fn>
std::vector<std::uint8_t> run_ranges(std::uint64_t count, int workers, Fn&& fn) {
    std::vector<std::uint8_t> outcomes(count, 0);
    const auto w = static_cast<std::uint64_t>(workers < 1 ? 1 : workers);
    const std::uint64_t chunk = (count + w - 1) / w;
    std::vector<std::jthread> threads;
    for (std::uint64_t i = 1; i < w; ++i) {
        const std::uint64_t begin = std::min(count, i * chunk);
        const std::uint64_t end = std::min(count, begin + chunk);
        if (begin < end) {
            threads.emplace_back([&, begin, end] {
                fn(begin, end, std::span<std::uint8_t>(outcomes.data() + begin, end - begin));
            });
        }
    }
    const std::uint64_t end0 = std::min(count, chunk);
    fn(std::uint64_t{0}, end0, std::span<std::uint8_t>(outcomes.data(), end0));
    threads.clear();
    return outcomes;
}

/// run_ranges over independent configurations addressed by index.
template <typename Fn>
std::vector<std::uint8_t> run_indexed(std::uint64_t count, int workers, Fn&& fn) {
    return run_ranges(count, workers, [&](std::uint64_t begin, std::uint64_t end, std::span<std::uint8_t> out) {
        for (std::uint64_t i = begin; i < end; ++i) {
            out[i - begin] = fn(i);
        }
    });
}

/// FNV-1a 64 over bytes normalised to pass (1) / fail (0).
std::string pass_fail_digest(std::span<const std::uint8_t> outcomes);

}  // namespace clawcycle::detail
