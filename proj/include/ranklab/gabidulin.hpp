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

#ifndef RANKLAB_GABIDULIN_HPP
#define RANKLAB_GABIDULIN_HPP

#include "ranklab/ranklin.hpp"

namespace ranklab {

/// q-Vandermonde matrix: row j is the entrywise q^j-th power of the seed.
ExtMatrix q_vandermonde(const ExtMatrix& seed, size_t rows);

/*
 * Gabidulin code of length n and dimension k: evaluation code of
 * q-linearized polynomials of q-degree < k on a seed vector g of full
 * rank weight n (which forces n <= m). Generator rows are g^{[0]},
 * ..., g^{[k-1]}; errors of rank weight up to floor((n-k)/2) are
 * decodable.
 */
class GabidulinCode {
   public:
    GabidulinCode(ExtMatrix g, size_t k);

    const ExtMatrix& g() const { return g_; }
    size_t k() const { return k_; }
    size_t n() const { return g_.cols(); }
    size_t decoding_radius() const { return (n() - k_) / 2; }
    const FieldCtxPtr& field_ptr() const { return g_.field_ptr(); }

   private:
    ExtMatrix g_;  // 1 x n
    size_t k_;
};

struct RankError {
    ExtMatrix e;  // 1 x n
    size_t rank = 0;
};

struct Decoded {
    ExtMatrix msg;  // 1 x k
    RankError err;
};

ExtMatrix generator_matrix(const GabidulinCode& code);

/// Codeword msg * G; msg must be 1 x k.
ExtMatrix encode(const ExtMatrix& msg, const GabidulinCode& code);

/*
 * Bounded-rank-distance decoding by linearized interpolation: find a
 * nonzero pair (N, W) of q-polynomials, deg_q W <= tau and
 * deg_q N <= k - 1 + tau with tau = floor((n-k)/2), satisfying
 * W(y_i) = N(g_i) at every position; the message polynomial is the
 * symbolic left quotient of N by W. Any received word c + e with
 * rank_weight(e) <= tau decodes exactly; anything else raises
 * DecodingFailure (callers treat that as a failed trial, not a crash).
 */
Decoded decode(const ExtMatrix& y, const GabidulinCode& code);

/// The vector h spanning the 1-dimensional dual of Gab_{n-1}(g),
/// normalized so its first nonzero entry is 1. Requires rank_weight(g)=n.
ExtMatrix dual_vector(const ExtMatrix& g);

/// Normalized spanning vector of the kernel of the Frobenius-twisted
/// system sum_i v_i^{[-j]} x_i = 0, j = 0..len-2; inverts the
/// dual-vector relation (feeding v = h back returns the seed direction).
/// Raises DegenerateSystem when the kernel dimension is not 1.
ExtMatrix twisted_kernel_vector(const ExtMatrix& v);

/// Error of rank weight exactly t: u * V with u a length-t vector of
/// F_q-independent entries and V a uniform full-rank t x n base matrix.
RankError random_rank_error(const FieldCtxPtr& ctx, size_t n, size_t t, Rng& rng);

/// Uniform vector with rank_weight = n (resampled until full rank).
ExtMatrix random_full_rank_vector(const FieldCtxPtr& ctx, size_t n, Rng& rng);

}  // namespace ranklab

#endif  // RANKLAB_GABIDULIN_HPP
