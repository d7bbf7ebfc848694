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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ranklab/overbeck.hpp"

using namespace ranklab;

namespace {

gpt::GptParams p1(gpt::Variant variant) {
    gpt::GptParams p;
    p.q = 2;
    p.m = 12;
    p.n = 12;
    p.k = 6;
    p.ell = 4;
    p.variant = variant;
    if (variant == gpt::Variant::smart) p.a = 2;
    return p;
}

}  // namespace

TEST_CASE("lambda profile separates Gabidulin from random") {
    auto ctx = make_context(2, 12);
    Rng rng(200);
    const size_t n = 12, k = 6;

    ExtMatrix gen = q_vandermonde(random_full_rank_vector(ctx, n, rng), k);
    auto prof = overbeck::lambda_profile(gen, n - k - 1);
    REQUIRE(prof.size() == n - k);
    for (size_t i = 0; i < prof.size(); ++i) CHECK(prof[i] == k + i);
    CHECK(overbeck::lambda_profile(gen, 0) == std::vector<size_t>{k});

    ExtMatrix rnd = ExtMatrix::random(ctx, k, n, rng);
    auto rprof = overbeck::lambda_profile(rnd, 3);
    for (size_t i = 0; i < rprof.size(); ++i) {
        CHECK(rprof[i] == std::min(n, (i + 1) * k));
    }
    // monotone nondecreasing in both cases
    for (size_t i = 1; i < prof.size(); ++i) CHECK(prof[i] >= prof[i - 1]);
}

TEST_CASE("recovery on a general GPT key decrypts") {
    Rng rng(201);
    const auto p = p1(gpt::Variant::general);
    gpt::KeyPair kp = gpt::keygen_general(p, rng);

    overbeck::AlternativeKey alt = overbeck::recover(kp.pk.g_pub, p.k, p.n, p.ell);
    CHECK(overbeck::reconstructs(alt, kp.pk.g_pub));
    CHECK(rank_weight(alt.g_star) == p.n);
    CHECK(alt.p_star.rank() == p.n + p.ell);

    for (int i = 0; i < 20; ++i) {
        ExtMatrix msg = gpt::random_message(kp.pk.g_pub.field_ptr(), p.k, rng);
        gpt::Ciphertext ct = gpt::encrypt(msg, kp.pk, rng);
        CHECK(overbeck::decrypt_with(alt, ct.z) == msg);
    }
    // error-free ciphertext
    ExtMatrix msg = gpt::random_message(kp.pk.g_pub.field_ptr(), p.k, rng);
    CHECK(overbeck::decrypt_with(alt, mul(msg, kp.pk.g_pub)) == msg);
}

TEST_CASE("smart keys defeat the bare recovery") {
    Rng rng(202);
    const auto p = p1(gpt::Variant::smart);
    size_t rejected = 0;
    for (int i = 0; i < 10; ++i) {
        gpt::KeyPair kp = gpt::keygen_smart(p, rng);
        try {
            overbeck::recover(kp.pk.g_pub, p.k, p.n, p.ell);
        } catch (const DualDimensionNotOne&) {
            ++rejected;
        }
    }
    CHECK(rejected >= 8);
}

TEST_CASE("recovery commutes with extra scrambling") {
    Rng rng(203);
    const auto p = p1(gpt::Variant::general);
    gpt::KeyPair kp = gpt::keygen_general(p, rng);
    const size_t len = p.code_len();

    for (int i = 0; i < 5; ++i) {
        BaseMatrix t = BaseMatrix::random_invertible(2, len, rng);
        ExtMatrix scrambled = mul_ext_base(kp.pk.g_pub, t);
        overbeck::AlternativeKey alt = overbeck::recover(scrambled, p.k, p.n, p.ell);
        CHECK(overbeck::reconstructs(alt, scrambled));
        for (int j = 0; j < 5; ++j) {
            ExtMatrix msg = gpt::random_message(kp.pk.g_pub.field_ptr(), p.k, rng);
            gpt::Ciphertext ct = gpt::encrypt(msg, kp.pk, rng);
            CHECK(overbeck::decrypt_with(alt, mul_ext_base(ct.z, t)) == msg);
        }
    }
}

TEST_CASE("alternative keys do not silently accept foreign ciphertexts") {
    Rng rng(204);
    const auto p = p1(gpt::Variant::general);
    gpt::KeyPair kp1 = gpt::keygen_general(p, rng);
    gpt::KeyPair kp2 = gpt::keygen_general(p, rng);
    overbeck::AlternativeKey alt = overbeck::recover(kp1.pk.g_pub, p.k, p.n, p.ell);

    size_t accidental = 0;
    for (int i = 0; i < 20; ++i) {
        ExtMatrix msg = gpt::random_message(kp2.pk.g_pub.field_ptr(), p.k, rng);
        gpt::Ciphertext ct = gpt::encrypt(msg, kp2.pk, rng);
        try {
            if (overbeck::decrypt_with(alt, ct.z) == msg) ++accidental;
        } catch (const DecodingFailure&) {
            // expected outcome
        }
    }
    CHECK(accidental == 0);
}
