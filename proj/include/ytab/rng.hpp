#ifndef YTAB_RNG_HPP
#define YTAB_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace ytab {

// mt19937_64 with hand-rolled variate transforms. The std::*_distribution
// classes are implementation-defined, so we map raw 64-bit draws to doubles
// ourselves: the same seed gives the same stream on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }

    // uniform on [0,1), 53-bit resolution
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // strictly positive exponential variate
    double exponential(double rate) {
        double u;
        do { u = uniform01(); } while (u == 0.0);
        return -std::log(u) / rate;
    }

    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do { x = gen_(); } while (x >= limit);
        return x % n;
    }

private:
    std::mt19937_64 gen_;
};

// splitmix64 finalizer, used to derive independent per-replica seeds
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Seed for replica k of a run with the given master seed. Documented
// splitting rule: replicas may be simulated in any order or in parallel.
inline std::uint64_t replica_seed(std::uint64_t master, std::uint64_t k) {
    return mix64(master ^ mix64(k + 1));
}

} // namespace ytab

#endif
