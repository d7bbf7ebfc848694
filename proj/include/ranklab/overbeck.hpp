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

#ifndef RANKLAB_OVERBECK_HPP
#define RANKLAB_OVERBECK_HPP

#include "ranklab/gpt.hpp"

namespace ranklab::overbeck {

/*
 * Alternative decomposition of a public matrix: G_pub = S* (X* | G*) P*
 * with G* the generator of Gab_k(g*). Any such decomposition decrypts,
 * whether or not it matches the original secret key.
 */
struct AlternativeKey {
    ExtMatrix s_star;   // k x k, invertible
    ExtMatrix x_star;   // k x ell_eff
    ExtMatrix g_star;   // 1 x n_eff, rank weight n_eff
    BaseMatrix p_star;  // N x N over F_q, invertible
    size_t n_eff = 0;
    size_t k = 0;
};

/// dim Lambda_i(rowspace G) for i = 0..i_max; monotone nondecreasing.
/// Gabidulin inputs give k+i, generic ones min(n, (i+1)k).
std::vector<size_t> lambda_profile(const ExtMatrix& g, size_t i_max);

/*
 * Key recovery for a general GPT public matrix (k x (n_eff + ell_eff)).
 * Requires dim Lambda_{n_eff-k-1}(C_pub)^perp = 1 (DualDimensionNotOne
 * otherwise — the caller may resample or report the key as resistant).
 * Steps: take the spanning dual vector h_pub, rank-reduce it to
 * (0 | h*) via a base-field transform, invert the dual relation on h*
 * to get the seed g*, then solve for S* and X* by elimination. The
 * decomposition identity is checked before returning; any degenerate
 * intermediate raises RecoveryInconsistent.
 */
AlternativeKey recover(const ExtMatrix& g_pub, size_t k, size_t n_eff, size_t ell_eff);

/// z P*^{-1}, last n_eff coordinates decoded in Gab_k(g*), times S*^{-1}.
ExtMatrix decrypt_with(const AlternativeKey& alt, const ExtMatrix& z);

/// Exact check of G_pub = S* (X* | G*) P*.
bool reconstructs(const AlternativeKey& alt, const ExtMatrix& g_pub);

}  // namespace ranklab::overbeck

#endif  // RANKLAB_OVERBECK_HPP
