/*
 * Copyright 2026 The ranklab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RANKLAB_RNG_HPP
#define RANKLAB_RNG_HPP

#include <cstdint>

namespace ranklab {

/*
 * xoshiro256** seeded through splitmix64. Chosen over <random> engines so
 * that the byte streams (and therefore key files, ciphertexts and attack
 * transcripts) are reproducible across platforms and standard libraries.
 * The algorithm is pinned in README.md; alternative implementations must
 * reproduce it exactly to regenerate fixtures.
 */
class Rng {
   public:
    explicit Rng(uint64_t seed) {
        // splitmix64 expansion of the seed into the four state words
        uint64_t x = seed;
        for (auto& word : state_) {
            x += 0x9e3779b97f4a7c15ULL;
            uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    uint64_t next() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Unbiased integer in [0, bound) via rejection sampling; bound > 0.
    uint64_t below(uint64_t bound) {
        const uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

   private:
    static uint64_t rotl(uint64_t v, int s) { return (v << s) | (v >> (64 - s)); }

    uint64_t state_[4];
};

}  // namespace ranklab

#endif  // RANKLAB_RNG_HPP
