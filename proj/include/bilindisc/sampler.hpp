#pragma once

#include "bilindisc/rational.hpp"

#include <cstdint>
#include <random>

namespace bilindisc {

// Seeded source of small exact numbers. A sampler is an explicit value; the
// stream for trial t of a run seeded with s is Sampler(s, t), independent of
// how many other trials ran before it.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed, std::uint64_t trial = 0) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(trial),
                          static_cast<std::uint32_t>(trial >> 32)};
        engine_.seed(seq);
    }

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
    }

    // p/q with p in [-bound, bound] and q in [1, max_den].
    Rational rational(std::int64_t bound = 10, std::int64_t max_den = 4) {
        const std::int64_t p = integer(-bound, bound);
        const std::int64_t q = integer(1, max_den);
        return Rational(p, q);
    }

    // Nonzero variant of rational().
    Rational nonzero_rational(std::int64_t bound = 10, std::int64_t max_den = 4) {
        Rational r = 0;
        while (r == 0) r = rational(bound, max_den);
        return r;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace bilindisc
