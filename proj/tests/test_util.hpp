#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <random>
#include <vector>

namespace testutil {

// Distance in representable doubles between a and b (0 means bit-equal).
inline std::int64_t ulp_distance(double a, double b) {
    auto ordered = [](double x) {
        const auto i = std::bit_cast<std::int64_t>(x);
        return i < 0 ? std::numeric_limits<std::int64_t>::min() - i : i;
    };
    const std::int64_t d = ordered(a) - ordered(b);
    return d < 0 ? -d : d;
}

inline std::vector<double> random_vector(std::size_t size, std::uint64_t seed,
                                         double lo = -1.0, double hi = 1.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> v(size);
    for (double& x : v) x = dist(rng);
    return v;
}

}  // namespace testutil
