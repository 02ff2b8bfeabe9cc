#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace defender {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based random stream keyed by up to four 64-bit values.
/// Draw sequences depend only on the key and draw index, so generation
/// partitioned across threads stays bitwise reproducible.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t k1 = 0, std::uint64_t k2 = 0,
                        std::uint64_t k3 = 0) {
        key_ = splitmix64(seed);
        key_ = splitmix64(key_ ^ (k1 + 0x632be59bd9b4e019ULL));
        key_ = splitmix64(key_ ^ (k2 + 0x9e6c63d0876a9a47ULL));
        key_ = splitmix64(key_ ^ (k3 + 0xd2b74407b1ce6e93ULL));
    }

    std::uint64_t next_u64() { return splitmix64(key_ ^ ctr_++); }

    /// Uniform in [0, 1).
    double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_int(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("uniform_int: n == 0");
        return next_u64() % n;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Standard normal via Box-Muller (consumes two draws).
    double normal() {
        double u1 = next_double(), u2 = next_double();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    /// Poisson draw by inversion; large means are split so the cumulative
    /// product never underflows.
    std::int64_t poisson(double lambda) {
        if (!(lambda >= 0.0)) throw std::invalid_argument("poisson: negative mean");
        std::int64_t total = 0;
        while (lambda > 30.0) {
            total += poisson_small(30.0);
            lambda -= 30.0;
        }
        return total + poisson_small(lambda);
    }

private:
    std::int64_t poisson_small(double lambda) {
        if (lambda <= 0.0) return 0;
        const double limit = std::exp(-lambda);
        double prod = next_double();
        std::int64_t k = 0;
        while (prod > limit) {
            prod *= next_double();
            ++k;
        }
        return k;
    }

    std::uint64_t key_ = 0;
    std::uint64_t ctr_ = 0;
};

}  // namespace defender
