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

#ifndef RANKLAB_GPT_HPP
#define RANKLAB_GPT_HPP

#include "ranklab/gabidulin.hpp"

namespace ranklab::gpt {

enum class Variant { general, smart };

/*
 * System parameters. The public code lives in F_{q^m}^{n+ell}: a k x n
 * Gabidulin generator hidden behind a k x ell distortion block and an
 * invertible column scrambler over F_q. The smart variant splits the
 * distortion into a q-Vandermonde part X1 (width a) and a random part X2.
 * t = floor((n-k)/2) is the error rank bound.
 */
struct GptParams {
    uint32_t q = 2;
    uint32_t m = 0;
    size_t n = 0;
    size_t k = 0;
    size_t ell = 0;
    size_t a = 0;  // smart only
    Variant variant = Variant::general;
    std::vector<uint8_t> modulus;  // empty = deterministic default

    size_t t() const { return (n - k) / 2; }
    size_t code_len() const { return n + ell; }
    void validate() const;  // throws ParamViolation
    FieldCtxPtr make_field() const;
};

struct PublicKey {
    GptParams params;
    ExtMatrix g_pub;  // k x (n+ell)
    size_t t = 0;
};

struct SecretKey {
    GptParams params;
    ExtMatrix s;   // k x k, invertible over F_{q^m}
    BaseMatrix p;  // (n+ell) x (n+ell), invertible over F_q
    ExtMatrix g;   // 1 x n Gabidulin seed, rank weight n
    ExtMatrix x;   // k x ell (general)
    ExtMatrix b;   // 1 x a (smart)
    ExtMatrix x1;  // k x a, q-Vandermonde on b (smart)
    ExtMatrix x2;  // k x (ell-a) (smart)
};

struct KeyPair {
    PublicKey pk;
    SecretKey sk;
};

struct Ciphertext {
    ExtMatrix z;  // 1 x (n+ell)
};

KeyPair keygen_general(const GptParams& params, Rng& rng);
KeyPair keygen_smart(const GptParams& params, Rng& rng);

/// Smart keygen with b engineered so that rank_weight(b | g) = n + s_target:
/// s_target entries extend the F_q-span of g, the rest are sampled inside
/// it. Requires s_target <= min(a, m - n).
KeyPair keygen_smart_engineered(const GptParams& params, size_t s_target, Rng& rng);

/// The unscrambled block (X | G), or (X1 | X2 | G) for the smart variant.
ExtMatrix distortion_block(const SecretKey& sk);

/// S * (X-blocks | G) * P; must equal pk.g_pub bit-exactly.
ExtMatrix reconstruct_public(const SecretKey& sk);

/// z = msg * G_pub + e with rank_weight(e) = t exactly (or uniform in
/// [0, t] when exact_rank is false).
Ciphertext encrypt(const ExtMatrix& msg, const PublicKey& pk, Rng& rng, bool exact_rank = true);

/// z P^{-1}, last n coordinates Gabidulin-decoded, then times S^{-1}.
ExtMatrix decrypt(const Ciphertext& ct, const SecretKey& sk);

ExtMatrix random_message(const FieldCtxPtr& ctx, size_t k, Rng& rng);
ExtMatrix random_invertible_ext(const FieldCtxPtr& ctx, size_t n, Rng& rng);

}  // namespace ranklab::gpt

#endif  // RANKLAB_GPT_HPP
