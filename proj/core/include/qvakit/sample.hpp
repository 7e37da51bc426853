#pragma once

#include <cstdint>
#include <functional>

#include "qvakit/rational.hpp"

namespace qvakit {

// Deterministic sample-point source: small-height rationals with numerator
// and denominator bounded by 97. Pole avoidance is done at the use site by
// rejection (operations throw pole_at_sample_error and the caller redraws).
class SampleGen {
public:
    explicit SampleGen(uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {}

    uint64_t next_u64() {
        // splitmix64: tiny, fully deterministic across platforms
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    long next_int(long lo, long hi) { // inclusive bounds
        return lo + static_cast<long>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
    }

    Rat next_rat() {
        long p = next_int(-kHeight, kHeight);
        long q = next_int(1, kHeight);
        return rat(p, q);
    }

    Rat next_nonzero_rat() {
        for (;;) {
            Rat r = next_rat();
            if (!is_zero(r)) return r;
        }
    }

    // Redraws until `ok` accepts the candidate; throws after too many misses.
    Rat next_rat_where(const std::function<bool(const Rat&)>& ok) {
        for (int tries = 0; tries < kMaxTries; ++tries) {
            Rat r = next_rat();
            if (ok(r)) return r;
        }
        throw pole_at_sample_error("sample rejection did not terminate");
    }

    static constexpr long kHeight = 97;
    static constexpr int kMaxTries = 4096;

private:
    uint64_t state_;
};

// Per-check seed derivation: stable against check reordering and worker count.
inline uint64_t derive_seed(uint64_t base, const std::string& tag) {
    uint64_t x = base;
    for (unsigned char ch : tag) {
        x ^= ch;
        x *= 0x100000001b3ull;
    }
    return x;
}

} // namespace qvakit
