// Copyright 2026 The Telesim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TELESIM_RNG_H
#define TELESIM_RNG_H

#include <cmath>
#include <cstdint>
#include <random>

namespace telesim {

/// Deterministic random stream.
///
/// Wraps std::mt19937_64 (whose output sequence is pinned by the standard)
/// but performs all derived draws (bounded integers, uniform doubles,
/// gaussians) with fixed in-house algorithms, because the std `<random>`
/// distributions are implementation-defined and would break byte-identical
/// outputs across compilers.
class Rng {
   public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() {
        return gen_();
    }

    /// One fair bit (taken from the high bits of the engine output).
    bool bit() {
        return (next_u64() >> 63) != 0;
    }

    /// Uniform integer in [0, n). Unbiased via rejection sampling.
    uint64_t below(uint64_t n) {
        // Largest multiple of n that fits in 64 bits, as a rejection limit.
        uint64_t limit = UINT64_MAX - (UINT64_MAX % n + 1) % n;
        while (true) {
            uint64_t x = next_u64();
            if (x <= limit) {
                return x % n;
            }
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Standard normal deviate (Box-Muller; spare value cached).
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do {
            u1 = uniform01();
        } while (u1 <= 0.0);
        u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

   private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// SplitMix64 finalizer; used to derive well-separated substream seeds.
inline uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed for the substream identified by (a) under `master`.
inline uint64_t substream_seed(uint64_t master, uint64_t a) {
    return mix64(mix64(master) ^ mix64(a * 0xD6E8FEB86659FD93ULL + 1));
}

/// Seed for the substream identified by (a, b) under `master`.
inline uint64_t substream_seed(uint64_t master, uint64_t a, uint64_t b) {
    return substream_seed(substream_seed(master, a), b);
}

}  // namespace telesim

#endif
