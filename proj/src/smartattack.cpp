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

#include "ranklab/smartattack.hpp"

#include <chrono>
#include <map>
#include <numeric>

namespace ranklab::smart {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

size_t compute_s(const ExtMatrix& g_pub, size_t k, size_t n, size_t a,
                 std::vector<SProbe>* probes) {
    std::map<size_t, size_t> rank_at;  // Lambda exponent -> rank
    auto rank_of = [&](size_t exponent) {
        auto it = rank_at.find(exponent);
        if (it != rank_at.end()) return it->second;
        const size_t r = row_space_dim(lambda(g_pub, exponent));
        rank_at.emplace(exponent, r);
        return r;
    };
    auto stabilizes = [&](size_t s) {
        const size_t low = rank_of(n + s - k);
        const size_t high = rank_of(n + s + 1 - k);
        if (probes) probes->push_back({s, low, high});
        return low == high;
    };

    if (!stabilizes(a)) {
        throw StabilizationNotFound("rank profile does not stabilize by s = a");
    }
    size_t s = a;
    while (s > 0 && stabilizes(s - 1)) --s;
    return s;
}

std::vector<size_t> find_redundancy_set(const ExtMatrix& g_pub, size_t k, size_t n, size_t ell,
                                        size_t a, size_t s, Rng& rng,
                                        std::vector<RedundancyProbe>* probes) {
    const size_t w = a - s;
    std::vector<size_t> found;
    if (w == 0) return found;

    const size_t y = n + s + ell - a;
    const size_t f = n + s - k;
    EchelonSpace space(lambda(g_pub, f));
    if (space.dim() != y) {
        throw NoRedundancyFound("dim Lambda_f(C_pub) = " + std::to_string(space.dim()) +
                                ", expected " + std::to_string(y));
    }

    // current column index -> original 1-based position
    std::vector<size_t> original(g_pub.cols());
    std::iota(original.begin(), original.end(), 1);
    std::vector<size_t> pool(original.size());
    std::iota(pool.begin(), pool.end(), 0);

    while (found.size() < w) {
        if (pool.empty()) {
            throw NoRedundancyFound("candidate pool exhausted with " +
                                    std::to_string(found.size()) + " of " + std::to_string(w) +
                                    " positions");
        }
        const size_t pick = rng.below(pool.size());
        const size_t col = pool[pick];
        const size_t dim = space.dim_if_column_removed(col);
        const bool accept = (dim == y);
        if (probes) probes->push_back({original[col], dim, accept});
        if (accept) {
            found.push_back(original[col]);
            space.remove_column(col);
            original.erase(original.begin() + static_cast<ptrdiff_t>(col));
            pool.resize(original.size());
            std::iota(pool.begin(), pool.end(), 0);
        } else {
            pool.erase(pool.begin() + static_cast<ptrdiff_t>(pick));
        }
    }
    return found;
}

AttackResult attack(const gpt::PublicKey& pk, Rng& rng) {
    if (pk.params.variant != gpt::Variant::smart) {
        throw ParamViolation("attack targets smart-approach keys");
    }
    const size_t k = pk.params.k, n = pk.params.n;
    const size_t ell = pk.params.ell, a = pk.params.a;

    AttackResult result;
    const auto t_total = std::chrono::steady_clock::now();

    {
        const auto t0 = std::chrono::steady_clock::now();
        try {
            result.s = compute_s(pk.g_pub, k, n, a, &result.stats.s_probes);
        } catch (const StabilizationNotFound& e) {
            throw StabilizationNotFound(std::string("[phase compute_s] ") + e.what());
        }
        result.stats.ms_compute_s = elapsed_ms(t0);
    }

    const size_t n_eff = n + result.s;
    const size_t ell_eff = ell - a;
    constexpr int kMaxAttempts = 5;
    for (int attempt = 1;; ++attempt) {
        const auto t1 = std::chrono::steady_clock::now();
        try {
            result.redundancy = find_redundancy_set(pk.g_pub, k, n, ell, a, result.s, rng,
                                                    &result.stats.redundancy_probes);
        } catch (const NoRedundancyFound& e) {
            throw NoRedundancyFound(std::string("[phase redundancy] ") + e.what());
        }
        result.stats.ms_redundancy += elapsed_ms(t1);
        result.reduced_pub =
            result.redundancy.empty() ? pk.g_pub : puncture(pk.g_pub, result.redundancy);

        const auto t2 = std::chrono::steady_clock::now();
        try {
            result.alt = overbeck::recover(result.reduced_pub, k, n_eff, ell_eff);
            result.stats.ms_recover += elapsed_ms(t2);
            break;
        } catch (const DualDimensionNotOne& e) {
            result.stats.ms_recover += elapsed_ms(t2);
            if (attempt == kMaxAttempts) {
                throw DualDimensionNotOne(std::string("[phase overbeck] after ") +
                                          std::to_string(kMaxAttempts) +
                                          " redundancy-set attempts: " + e.what());
            }
            result.stats.redundancy_probes.clear();
        } catch (const RecoveryInconsistent& e) {
            throw RecoveryInconsistent(std::string("[phase overbeck] ") + e.what());
        }
    }
    result.stats.ms_total = elapsed_ms(t_total);
    return result;
}

double verify(const gpt::PublicKey& pk, const AttackResult& result, size_t trials, Rng& rng) {
    if (trials == 0) return 1.0;
    const FieldCtxPtr& ctx = pk.g_pub.field_ptr();
    size_t good = 0;
    for (size_t trial = 0; trial < trials; ++trial) {
        ExtMatrix msg = gpt::random_message(ctx, pk.params.k, rng);
        gpt::Ciphertext ct = gpt::encrypt(msg, pk, rng);
        ExtMatrix z = result.redundancy.empty() ? ct.z : puncture(ct.z, result.redundancy);
        try {
            if (overbeck::decrypt_with(result.alt, z) == msg) ++good;
        } catch (const Error&) {
            // counted as a failed trial
        }
    }
    return static_cast<double>(good) / static_cast<double>(trials);
}

}  // namespace ranklab::smart
