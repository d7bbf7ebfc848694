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

#include "ranklab/overbeck.hpp"

namespace ranklab::overbeck {

std::vector<size_t> lambda_profile(const ExtMatrix& g, size_t i_max) {
    std::vector<size_t> dims(i_max + 1);
    for (size_t i = 0; i <= i_max; ++i) {
        dims[i] = row_space_dim(lambda(g, i));
    }
    return dims;
}

AlternativeKey recover(const ExtMatrix& g_pub, size_t k, size_t n_eff, size_t ell_eff) {
    const size_t len = n_eff + ell_eff;
    if (g_pub.rows() != k || g_pub.cols() != len || n_eff <= k) {
        throw LengthMismatch("public matrix must be k x (n_eff + ell_eff) with k < n_eff");
    }

    ExtMatrix dual = dual_space(lambda(g_pub, n_eff - k - 1));
    if (dual.rows() != 1) {
        throw DualDimensionNotOne("dual of Lambda_{n-k-1} has dimension " +
                                  std::to_string(dual.rows()));
    }

    if (rank_weight(dual) != n_eff) {
        throw RecoveryInconsistent("dual vector has rank weight " +
                                   std::to_string(rank_weight(dual)) + ", expected " +
                                   std::to_string(n_eff));
    }
    RankReduction rr = rank_reduction(dual);

    // move the zero block to the front: h_pub T' = (0 | h*)
    const uint32_t q = g_pub.field().q();
    BaseMatrix block_swap(q, len, len);
    for (size_t j = 0; j < ell_eff; ++j) block_swap.at(n_eff + j, j) = 1;
    for (size_t j = ell_eff; j < len; ++j) block_swap.at(j - ell_eff, j) = 1;
    const BaseMatrix t_prime = rr.t * block_swap;

    // unscramble the generator and split off the Gabidulin part
    ExtMatrix transformed = mul_ext_base(g_pub, t_prime.transposed().inverse());
    ExtMatrix y_block = columns_range(transformed, 0, ell_eff);
    ExtMatrix z_block = columns_range(transformed, ell_eff, len);

    ExtMatrix g_star;
    try {
        g_star = twisted_kernel_vector(rr.m_star);
    } catch (const DegenerateSystem& e) {
        throw RecoveryInconsistent(e.what());
    }
    if (rank_weight(g_star) != n_eff) {
        throw RecoveryInconsistent("recovered seed is rank deficient");
    }

    AlternativeKey alt;
    alt.g_star = std::move(g_star);
    alt.n_eff = n_eff;
    alt.k = k;
    alt.p_star = t_prime.transposed();
    try {
        alt.s_star = solve_left_factor(q_vandermonde(alt.g_star, k), z_block);
        alt.x_star = mul(ext_inverse(alt.s_star), y_block);
    } catch (const DegenerateSystem& e) {
        throw RecoveryInconsistent(e.what());
    }

    if (!reconstructs(alt, g_pub)) {
        throw RecoveryInconsistent("decomposition identity failed");
    }
    return alt;
}

ExtMatrix decrypt_with(const AlternativeKey& alt, const ExtMatrix& z) {
    const size_t len = alt.p_star.rows();
    if (z.rows() != 1 || z.cols() != len) {
        throw LengthMismatch("ciphertext must be 1 x (n_eff + ell_eff)");
    }
    ExtMatrix unscrambled = mul_ext_base(z, alt.p_star.inverse());
    ExtMatrix tail = columns_range(unscrambled, len - alt.n_eff, len);
    GabidulinCode code(alt.g_star, alt.k);
    Decoded dec = decode(tail, code);
    return mul(dec.msg, ext_inverse(alt.s_star));
}

bool reconstructs(const AlternativeKey& alt, const ExtMatrix& g_pub) {
    ExtMatrix rebuilt = mul_ext_base(
        mul(alt.s_star, hstack(alt.x_star, q_vandermonde(alt.g_star, alt.k))), alt.p_star);
    return rebuilt == g_pub;
}

}  // namespace ranklab::overbeck
