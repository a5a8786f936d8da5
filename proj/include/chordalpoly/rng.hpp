#pragma once

#include <cstdint>

#include "chordalpoly/rational.hpp"

namespace chordalpoly {

// SplitMix64. Hand-rolled so that seeded runs are reproducible across
// platforms and standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), n >= 1, via rejection.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t threshold = -n % n;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    long range(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // True with probability num/den, exactly.
    bool bernoulli(unsigned long num, unsigned long den) {
        if (num >= den) return true;
        return below(den) < num;
    }

    bool bernoulli(const Rational& p) {
        if (p <= 0) return false;
        if (p >= 1) return true;
        unsigned long num = p.get_num().get_ui();
        unsigned long den = p.get_den().get_ui();
        return bernoulli(num, den);
    }

    // Independent stream for trial i of a master-seeded run.
    static std::uint64_t derive(std::uint64_t master, std::uint64_t trial) {
        Rng r(master ^ (0x6a09e667f3bcc909ULL + trial * 0x9e3779b97f4a7c15ULL));
        return r.next();
    }

private:
    std::uint64_t state_;
};

}  // namespace chordalpoly
