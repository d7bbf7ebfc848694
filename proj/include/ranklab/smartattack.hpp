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

#ifndef RANKLAB_SMARTATTACK_HPP
#define RANKLAB_SMARTATTACK_HPP

#include "ranklab/overbeck.hpp"

namespace ranklab::smart {

/// One evaluation of the rank-stabilization criterion at a candidate s.
struct SProbe {
    size_t s = 0;
    size_t rank_low = 0;   // rank Lambda_{n+s-k}
    size_t rank_high = 0;  // rank Lambda_{n+s+1-k}
};

/// One candidate position test during the redundancy search.
struct RedundancyProbe {
    size_t position = 0;  // 1-based, in the original public code
    size_t dim = 0;       // dim Lambda_{n+s-k} after removing it
    bool accepted = false;
};

struct AttackStats {
    std::vector<SProbe> s_probes;
    std::vector<RedundancyProbe> redundancy_probes;
    double ms_compute_s = 0;
    double ms_redundancy = 0;
    double ms_recover = 0;
    double ms_total = 0;
};

struct AttackResult {
    size_t s = 0;
    std::vector<size_t> redundancy;  // a-s positions in {1..n+ell}
    ExtMatrix reduced_pub;           // k x (n+s+ell-a)
    overbeck::AlternativeKey alt;
    AttackStats stats;
};

/*
 * Smallest s in [0, a] with rank Lambda_{n+s-k}(C_pub) =
 * rank Lambda_{n+s+1-k}(C_pub): the descending loop floored at 0. A key
 * whose profile never stabilizes by s = a raises StabilizationNotFound.
 */
size_t compute_s(const ExtMatrix& g_pub, size_t k, size_t n, size_t a,
                 std::vector<SProbe>* probes = nullptr);

/*
 * Draw candidate positions uniformly without replacement and keep those
 * whose removal leaves dim Lambda_{n+s-k} = n+s+ell-a, until w = a-s
 * positions are found. Rejected candidates leave the pool; the pool
 * resets after each acceptance. Returns 1-based positions of the
 * original code. Raises NoRedundancyFound when the pool empties first.
 */
std::vector<size_t> find_redundancy_set(const ExtMatrix& g_pub, size_t k, size_t n, size_t ell,
                                        size_t a, size_t s, Rng& rng,
                                        std::vector<RedundancyProbe>* probes = nullptr);

/// Full key recovery: compute_s, redundancy search, puncture, then the
/// general-GPT recovery on the reduced code with f = n+s-k-1. Retries the
/// redundancy search with fresh randomness up to 5 times if the reduced
/// code fails the dual-dimension hypothesis.
AttackResult attack(const gpt::PublicKey& pk, Rng& rng);

/// Fraction of `trials` random messages that survive encrypt ->
/// puncture-at-redundancies -> decrypt_with exactly. trials = 0 returns
/// 1.0 by convention.
double verify(const gpt::PublicKey& pk, const AttackResult& result, size_t trials, Rng& rng);

}  // namespace ranklab::smart

#endif  // RANKLAB_SMARTATTACK_HPP
