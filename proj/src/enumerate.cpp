#include "enumerate.hpp"

#include <cstdio>

namespace clawcycle::detail {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

std::uint64_t unrank_subset(std::uint64_t rank, int n, int k) {
    std::uint64_t mask = 0;
    int c = n - 1;
    for (int i = k; i >= 1; --i) {
        while (binomial(c, i) > rank) --c;
        mask |= std::uint64_t{1} << c;
        rank -= binomial(c, i);
        --c;
    }
    return mask;
}

std::string pass_fail_digest(std::span<const std::uint8_t> outcomes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto o : outcomes) {
        h ^= o != 0 ? 1u : 0u;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace clawcycle::detail
