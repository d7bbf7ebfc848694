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
#include "ranklab/gabidulin.hpp"

using namespace ranklab;

TEST_CASE("generator matrix structure") {
    auto ctx = make_context(2, 12);
    Rng rng(1);
    const size_t n = 8;
    ExtMatrix g = random_full_rank_vector(ctx, n, rng);

    GabidulinCode c1(g, 1);
    CHECK(generator_matrix(c1) == g);

    GabidulinCode c3(g, 3);
    ExtMatrix gen = generator_matrix(c3);
    CHECK(row_space_dim(gen) == 3);
    for (size_t j = 0; j < 3; ++j) {
        for (size_t c = 0; c < n; ++c) {
            CHECK(gen.get(j, c) == ctx->frobenius(g.get(0, c), static_cast<long long>(j)));
        }
    }

    // lambda closure: lambda_i(Gab_k) spans Gab_{k+i}
    for (size_t i = 0; i + 3 <= n - 1; ++i) {
        CHECK(row_space_equal(lambda(gen, i), q_vandermonde(g, 3 + i)));
    }
}

TEST_CASE("code construction guards") {
    auto ctx = make_context(2, 6);
    Rng rng(2);
    ExtMatrix g = random_full_rank_vector(ctx, 5, rng);
    CHECK_THROWS_AS(GabidulinCode(g, 0), LengthMismatch);
    CHECK_THROWS_AS(GabidulinCode(g, 5), LengthMismatch);
    ExtMatrix ones(ctx, 1, 4);
    for (size_t c = 0; c < 4; ++c) ones.set(0, c, ctx->one());
    CHECK_THROWS_AS(GabidulinCode(ones, 2), InvalidRank);
}

TEST_CASE("right scrambling maps Gabidulin codes to Gabidulin codes") {
    auto ctx = make_context(2, 12);
    Rng rng(3);
    const size_t n = 9, k = 4;
    for (int i = 0; i < 10; ++i) {
        ExtMatrix g = random_full_rank_vector(ctx, n, rng);
        BaseMatrix t = BaseMatrix::random_invertible(2, n, rng);
        ExtMatrix left = mul_ext_base(generator_matrix(GabidulinCode(g, k)), t);
        ExtMatrix right = generator_matrix(GabidulinCode(mul_ext_base(g, t), k));
        CHECK(row_space_equal(left, right));
    }
}

TEST_CASE("encode basics") {
    auto ctx = make_context(2, 12);
    Rng rng(4);
    const size_t n = 10, k = 4;
    GabidulinCode code(random_full_rank_vector(ctx, n, rng), k);

    CHECK(encode(ExtMatrix(ctx, 1, k), code).is_zero());

    ExtMatrix e1(ctx, 1, k);
    e1.set(0, 0, ctx->one());
    CHECK(encode(e1, code) == code.g());

    CHECK_THROWS_AS(encode(ExtMatrix(ctx, 1, k + 1), code), LengthMismatch);
}

TEST_CASE("decoding within the rank radius") {
    auto ctx = make_context(2, 12);
    Rng rng(5);
    const size_t n = 12, k = 6;
    GabidulinCode code(random_full_rank_vector(ctx, n, rng), k);
    const size_t tau = code.decoding_radius();
    CHECK(tau == 3);

    // error-free word
    ExtMatrix msg = ExtMatrix::random(ctx, 1, k, rng);
    Decoded clean = decode(encode(msg, code), code);
    CHECK(clean.msg == msg);
    CHECK(clean.err.rank == 0);
    CHECK(clean.err.e.is_zero());

    // rank exactly tau, worst case for the decoder
    for (int trial = 0; trial < 150; ++trial) {
        ExtMatrix m = ExtMatrix::random(ctx, 1, k, rng);
        RankError e = random_rank_error(ctx, n, tau, rng);
        Decoded dec = decode(add(encode(m, code), e.e), code);
        REQUIRE(dec.msg == m);
        REQUIRE(dec.err.e == e.e);
        REQUIRE(dec.err.rank == tau);
    }

    // every rank below the radius as well
    for (size_t t = 0; t <= tau; ++t) {
        for (int trial = 0; trial < 20; ++trial) {
            ExtMatrix m = ExtMatrix::random(ctx, 1, k, rng);
            RankError e = random_rank_error(ctx, n, t, rng);
            Decoded dec = decode(add(encode(m, code), e.e), code);
            REQUIRE(dec.msg == m);
        }
    }
}

TEST_CASE("decoding at a second parameter scale") {
    auto ctx = make_context(2, 24);
    Rng rng(6);
    const size_t n = 20, k = 10;
    GabidulinCode code(random_full_rank_vector(ctx, n, rng), k);
    for (int trial = 0; trial < 25; ++trial) {
        ExtMatrix m = ExtMatrix::random(ctx, 1, k, rng);
        RankError e = random_rank_error(ctx, n, code.decoding_radius(), rng);
        Decoded dec = decode(add(encode(m, code), e.e), code);
        REQUIRE(dec.msg == m);
    }
}

TEST_CASE("exhaustive rank-1 errors on a small code (sample)") {
    auto ctx = make_context(2, 6);
    Rng rng(7);
    const size_t n = 6, k = 2;
    GabidulinCode code(random_full_rank_vector(ctx, n, rng), k);
    ExtMatrix msg = ExtMatrix::random(ctx, 1, k, rng);
    ExtMatrix cw = encode(msg, code);

    // e = lambda * v over the first few lambdas, all nonzero supports
    size_t tested = 0;
    for (uint64_t lam = 1; lam < 8; ++lam) {
        ExtElement le(ctx->m(), 0);
        for (uint32_t b = 0; b < 3; ++b) le[b] = static_cast<uint8_t>((lam >> b) & 1);
        for (uint64_t v = 1; v < (1u << n); v += 7) {
            ExtMatrix e(ctx, 1, n);
            for (size_t c = 0; c < n; ++c) {
                if ((v >> c) & 1) e.set(0, c, le);
            }
            Decoded dec = decode(add(cw, e), code);
            REQUIRE(dec.msg == msg);
            ++tested;
        }
    }
    CHECK(tested > 50);
}

TEST_CASE("dual vector spans the one-dimensional dual") {
    auto ctx = make_context(2, 12);
    Rng rng(8);

    // n = 2: single relation g1 h1 + g2 h2 = 0
    ExtMatrix g2 = random_full_rank_vector(ctx, 2, rng);
    ExtMatrix h2 = dual_vector(g2);
    ExtMatrix prod = mul(q_vandermonde(g2, 1), transposed(h2));
    CHECK(prod.is_zero());
    CHECK(h2.get(0, 0) == ctx->one());  // normalized

    const size_t n = 8;
    for (int i = 0; i < 10; ++i) {
        ExtMatrix g = random_full_rank_vector(ctx, n, rng);
        ExtMatrix h = dual_vector(g);
        CHECK(mul(q_vandermonde(g, n - 1), transposed(h)).is_zero());
        CHECK(rank_weight(h) == n);

        ExtMatrix d = dual_space(q_vandermonde(g, n - 1));
        REQUIRE(d.rows() == 1);
        CHECK(row_space_equal(d, h));
    }
}

TEST_CASE("twisted kernel inverts the dual relation") {
    auto ctx = make_context(2, 12);
    Rng rng(9);
    const size_t n = 8;
    for (int i = 0; i < 10; ++i) {
        ExtMatrix g = random_full_rank_vector(ctx, n, rng);
        ExtMatrix h = dual_vector(g);
        ExtMatrix back = twisted_kernel_vector(h);
        CHECK(row_space_equal(back, g));  // proportional to g
    }
}

TEST_CASE("random rank errors have exact rank") {
    auto ctx = make_context(2, 12);
    Rng rng(10);

    CHECK(random_rank_error(ctx, 12, 0, rng).e.is_zero());

    for (int i = 0; i < 50; ++i) {
        RankError e1 = random_rank_error(ctx, 12, 1, rng);
        CHECK(rank_weight(e1.e) == 1);
    }
    for (int i = 0; i < 200; ++i) {
        RankError e3 = random_rank_error(ctx, 12, 3, rng);
        CHECK(rank_weight(e3.e) == 3);
    }
    CHECK_THROWS_AS(random_rank_error(ctx, 12, 13, rng), InvalidRank);
    CHECK_THROWS_AS(random_rank_error(ctx, 14, 13, rng), InvalidRank);
}
