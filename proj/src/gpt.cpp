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

#include "ranklab/gpt.hpp"

#include <algorithm>

namespace ranklab::gpt {

void GptParams::validate() const {
    if (k < 1 || k >= n) throw ParamViolation("need 1 <= k < n");
    if (n > m) throw ParamViolation("need n <= m");
    if (ell < 1 || ell >= n) throw ParamViolation("need 1 <= ell < n");
    if (variant == Variant::smart) {
        if (a < 1 || a >= ell) throw ParamViolation("smart variant needs 0 < a < ell");
    } else if (a != 0) {
        throw ParamViolation("a is only meaningful for the smart variant");
    }
}

FieldCtxPtr GptParams::make_field() const {
    if (modulus.empty()) return make_context(q, m);
    return make_context(q, m, &modulus);
}

ExtMatrix random_invertible_ext(const FieldCtxPtr& ctx, size_t n, Rng& rng) {
    for (;;) {
        ExtMatrix s = ExtMatrix::random(ctx, n, n, rng);
        if (row_space_dim(s) == n) return s;
    }
}

ExtMatrix random_message(const FieldCtxPtr& ctx, size_t k, Rng& rng) {
    return ExtMatrix::random(ctx, 1, k, rng);
}

ExtMatrix distortion_block(const SecretKey& sk) {
    const ExtMatrix gmat = q_vandermonde(sk.g, sk.params.k);
    if (sk.params.variant == Variant::general) {
        return hstack(sk.x, gmat);
    }
    return hstack(hstack(sk.x1, sk.x2), gmat);
}

ExtMatrix reconstruct_public(const SecretKey& sk) {
    return mul_ext_base(mul(sk.s, distortion_block(sk)), sk.p);
}

namespace {

KeyPair assemble(GptParams params, FieldCtxPtr ctx, SecretKey sk) {
    // record the concrete modulus so key files rebuild the exact context
    params.modulus = ctx->modulus();
    sk.params = params;
    PublicKey pk{params, reconstruct_public(sk), params.t()};
    return KeyPair{std::move(pk), std::move(sk)};
}

SecretKey sample_common(const GptParams& params, const FieldCtxPtr& ctx, Rng& rng) {
    SecretKey sk;
    sk.g = random_full_rank_vector(ctx, params.n, rng);
    sk.s = random_invertible_ext(ctx, params.k, rng);
    sk.p = BaseMatrix::random_invertible(ctx->q(), params.code_len(), rng);
    return sk;
}

}  // namespace

KeyPair keygen_general(const GptParams& params, Rng& rng) {
    params.validate();
    if (params.variant != Variant::general) throw ParamViolation("variant must be general");
    FieldCtxPtr ctx = params.make_field();
    SecretKey sk = sample_common(params, ctx, rng);
    sk.x = ExtMatrix::random(ctx, params.k, params.ell, rng);
    return assemble(params, ctx, std::move(sk));
}

namespace {

KeyPair finish_smart(const GptParams& params, const FieldCtxPtr& ctx, SecretKey sk, Rng& rng) {
    sk.x1 = q_vandermonde(sk.b, params.k);
    sk.x2 = ExtMatrix::random(ctx, params.k, params.ell - params.a, rng);
    return assemble(params, ctx, std::move(sk));
}

}  // namespace

KeyPair keygen_smart(const GptParams& params, Rng& rng) {
    params.validate();
    if (params.variant != Variant::smart) throw ParamViolation("variant must be smart");
    FieldCtxPtr ctx = params.make_field();
    SecretKey sk = sample_common(params, ctx, rng);
    sk.b = ExtMatrix::random(ctx, 1, params.a, rng);
    return finish_smart(params, ctx, std::move(sk), rng);
}

KeyPair keygen_smart_engineered(const GptParams& params, size_t s_target, Rng& rng) {
    params.validate();
    if (params.variant != Variant::smart) throw ParamViolation("variant must be smart");
    if (s_target > params.a || params.n + s_target > params.m) {
        throw ParamViolation("s_target must satisfy s <= a and n + s <= m");
    }
    FieldCtxPtr ctx = params.make_field();
    SecretKey sk = sample_common(params, ctx, rng);

    // entries extending the span of g, then entries inside it
    std::vector<ExtElement> entries;
    ExtMatrix span = sk.g;
    for (size_t i = 0; i < s_target; ++i) {
        for (;;) {
            ExtMatrix cand = ExtMatrix::random(ctx, 1, 1, rng);
            ExtMatrix grown = hstack(span, cand);
            if (rank_weight(grown) == span.cols() + 1) {
                entries.push_back(cand.get(0, 0));
                span = std::move(grown);
                break;
            }
        }
    }
    for (size_t i = s_target; i < params.a; ++i) {
        BaseMatrix coeffs = BaseMatrix::random(ctx->q(), params.n, 1, rng);
        ExtMatrix combo = mul_ext_base(sk.g, coeffs);  // 1 x 1
        entries.push_back(combo.get(0, 0));
    }
    // shuffle so engineered structure does not leak into positions
    for (size_t i = entries.size(); i > 1; --i) {
        std::swap(entries[i - 1], entries[rng.below(i)]);
    }
    sk.b = ExtMatrix(ctx, 1, params.a);
    for (size_t i = 0; i < params.a; ++i) sk.b.set(0, i, entries[i]);
    return finish_smart(params, ctx, std::move(sk), rng);
}

Ciphertext encrypt(const ExtMatrix& msg, const PublicKey& pk, Rng& rng, bool exact_rank) {
    if (msg.rows() != 1 || msg.cols() != pk.params.k) {
        throw LengthMismatch("message must be 1 x k");
    }
    const size_t t = exact_rank ? pk.t : rng.below(pk.t + 1);
    RankError e = random_rank_error(pk.g_pub.field_ptr(), pk.params.code_len(), t, rng);
    return Ciphertext{add(mul(msg, pk.g_pub), e.e)};
}

ExtMatrix decrypt(const Ciphertext& ct, const SecretKey& sk) {
    const GptParams& p = sk.params;
    if (ct.z.rows() != 1 || ct.z.cols() != p.code_len()) {
        throw LengthMismatch("ciphertext must be 1 x (n+ell)");
    }
    ExtMatrix unscrambled = mul_ext_base(ct.z, sk.p.inverse());
    ExtMatrix tail = columns_range(unscrambled, p.ell, p.code_len());
    GabidulinCode code(sk.g, p.k);
    Decoded dec = decode(tail, code);
    return mul(dec.msg, ext_inverse(sk.s));
}

}  // namespace ranklab::gpt
