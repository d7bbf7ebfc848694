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
#include "ranklab/ranklin.hpp"

using namespace ranklab;

namespace {

// Independent rank oracle: column elimination, scanning columns right to
// left and picking the bottom-most nonzero entry, so it shares no code
// path or pivot order with rref_ext_in_place.
size_t rank_by_column_elimination(const ExtMatrix& m) {
    const auto& f = m.field();
    ExtMatrix w = m;
    std::vector<bool> used_row(w.rows(), false);
    size_t rank = 0;
    std::vector<uint8_t> inv(f.m()), coef(f.m()), prod(f.m());
    for (size_t c = w.cols(); c-- > 0;) {
        size_t pivot = w.rows();
        for (size_t r = w.rows(); r-- > 0;) {
            if (!used_row[r] && !w.entry_is_zero(r, c)) {
                pivot = r;
                break;
            }
        }
        if (pivot == w.rows()) continue;
        used_row[pivot] = true;
        ++rank;
        f.inv(w.at(pivot, c), inv);
        for (size_t r = 0; r < w.rows(); ++r) {
            if (r == pivot || used_row[r] || w.entry_is_zero(r, c)) continue;
            f.mul(w.at(r, c), inv, coef);
            for (size_t cc = 0; cc < w.cols(); ++cc) {
                f.mul(coef, w.at(pivot, cc), prod);
                auto dst = w.at(r, cc);
                f.sub(dst, prod, dst);
            }
        }
    }
    return rank;
}

ExtMatrix vec(const FieldCtxPtr& ctx, std::vector<ExtElement> entries) {
    ExtMatrix v(ctx, 1, entries.size());
    for (size_t i = 0; i < entries.size(); ++i) v.set(0, i, entries[i]);
    return v;
}

}  // namespace

TEST_CASE("expand_to_base reads off coefficients") {
    auto ctx = make_context(2, 2);
    const ExtElement a = ctx->element({0, 1});   // alpha
    const ExtElement a1 = ctx->element({1, 1});  // alpha + 1
    const ExtElement one = ctx->one();

    BaseMatrix z = expand_to_base(ExtMatrix(ctx, 1, 3));
    CHECK(z.rows() == 2);
    CHECK(z.cols() == 3);
    CHECK(z.is_zero());

    BaseMatrix ones = expand_to_base(vec(ctx, {one, one, one}));
    for (size_t j = 0; j < 3; ++j) {
        CHECK(ones.at(0, j) == 1);
        CHECK(ones.at(1, j) == 0);
    }

    BaseMatrix mixed = expand_to_base(vec(ctx, {a, a1, one}));
    CHECK(mixed.at(0, 0) == 0);
    CHECK(mixed.at(1, 0) == 1);
    CHECK(mixed.at(0, 1) == 1);
    CHECK(mixed.at(1, 1) == 1);
    CHECK(mixed.at(0, 2) == 1);
    CHECK(mixed.at(1, 2) == 0);
    CHECK(mixed.rank() == 2);
}

TEST_CASE("rank_weight on hand vectors") {
    auto ctx = make_context(2, 2);
    CHECK(rank_weight(ExtMatrix(ctx, 1, 3)) == 0);
    CHECK(rank_weight(vec(ctx, {ctx->one(), ctx->one(), ctx->one()})) == 1);
    CHECK(rank_weight(vec(ctx, {ctx->element({0, 1}), ctx->element({1, 1}), ctx->one()})) == 2);
}

TEST_CASE("column_rank on hand matrices") {
    auto ctx = make_context(2, 2);
    CHECK(column_rank(ExtMatrix::identity(ctx, 3)) == 3);
    CHECK(column_rank(ExtMatrix(ctx, 2, 3)) == 0);

    // rows (alpha, alpha+1, 1) and its entrywise square
    ExtMatrix m(ctx, 2, 3);
    ExtMatrix row = vec(ctx, {ctx->element({0, 1}), ctx->element({1, 1}), ctx->one()});
    for (size_t c = 0; c < 3; ++c) {
        m.set(0, c, row.at(0, c));
        m.set(1, c, ctx->frobenius(row.get(0, c), 1));
    }
    CHECK(column_rank(m) == 2);
}

TEST_CASE("column_rank dominates the rank weight of row combinations") {
    auto ctx = make_context(2, 8);
    Rng rng(5);
    for (int i = 0; i < 40; ++i) {
        ExtMatrix m = ExtMatrix::random(ctx, 3, 6, rng);
        ExtMatrix comb = mul(ExtMatrix::random(ctx, 1, 3, rng), m);
        CHECK(rank_weight(comb) <= column_rank(m));
        for (size_t r = 0; r < m.rows(); ++r) {
            CHECK(rank_weight(row_vector(m, r)) <= column_rank(m));
        }
    }
}

TEST_CASE("rank_reduction compacts dependent columns") {
    auto ctx = make_context(2, 4);
    Rng rng(11);

    // duplicated column
    ExtMatrix c = ExtMatrix::random(ctx, 1, 1, rng);
    ExtMatrix dup = hstack(c, c);
    RankReduction rr = rank_reduction(dup);
    CHECK(rr.s == 1);
    ExtMatrix moved = mul_ext_base(dup, rr.t);
    CHECK(moved.get(0, 0) == c.get(0, 0));
    CHECK(moved.entry_is_zero(0, 1));

    // zero matrix: s = 0, M*T all-zero
    ExtMatrix zero(ctx, 2, 3);
    RankReduction rz = rank_reduction(zero);
    CHECK(rz.s == 0);
    CHECK(mul_ext_base(zero, rz.t).is_zero());
    CHECK(rz.t.rank() == 3);

    // full column rank: identity transform
    ExtMatrix full = ExtMatrix::identity(ctx, 3);
    RankReduction rf = rank_reduction(full);
    CHECK(rf.s == 3);
    CHECK(rf.t.is_identity());
}

TEST_CASE("rank_reduction postcondition on random matrices") {
    Rng rng(17);
    for (uint32_t q : {2u, 3u}) {
        auto ctx = make_context(q, 6);
        for (int i = 0; i < 60; ++i) {
            const size_t rows = 1 + rng.below(3), cols = 2 + rng.below(7);
            ExtMatrix m = ExtMatrix::random(ctx, rows, cols, rng);
            RankReduction rr = rank_reduction(m);
            CHECK(rr.s == column_rank(m));
            CHECK(rr.t.rank() == cols);
            ExtMatrix moved = mul_ext_base(m, rr.t);
            CHECK(columns_range(moved, 0, rr.s) == rr.m_star);
            CHECK(columns_range(moved, rr.s, cols).is_zero());
            CHECK(column_rank(rr.m_star) == rr.s);
        }
    }
}

TEST_CASE("rank_reduction on a q-Vandermonde block matches the seed-rank oracle") {
    // (X1 | G) with one b entry inside the span of g and one extending it:
    // the zero block has a - s columns where s = rank_weight(b|g) - n
    auto ctx = make_context(2, 16);
    Rng rng(23);
    const size_t n = 8, k = 3, a = 2;
    ExtMatrix g = random_full_rank_vector(ctx, n, rng);

    // b1 inside the span: an F_q-combination of g entries; b2 extending it
    ExtMatrix b1 = mul_ext_base(g, BaseMatrix::random(2, n, 1, rng));
    ExtMatrix b2;
    do {
        b2 = ExtMatrix::random(ctx, 1, 1, rng);
    } while (rank_weight(hstack(g, b2)) != n + 1);
    ExtMatrix b = hstack(b1, b2);

    const size_t s = rank_weight(hstack(b, g)) - n;
    CHECK(s == 1);

    ExtMatrix block = hstack(q_vandermonde(b, k), q_vandermonde(g, k));
    RankReduction rr = rank_reduction(block);
    CHECK(rr.s == n + s);
    CHECK(rr.s + (a - s) == n + a);
}

TEST_CASE("lambda stacking and its interplay with base-field factors") {
    auto ctx = make_context(2, 12);
    Rng rng(31);

    ExtMatrix m = ExtMatrix::random(ctx, 2, 5, rng);
    CHECK(lambda(m, 0) == m);

    // lambda(A B) = lambda(A) B for base-field B
    for (int i = 0; i < 20; ++i) {
        ExtMatrix a = ExtMatrix::random(ctx, 2, 5, rng);
        BaseMatrix b = BaseMatrix::random(2, 5, 5, rng);
        CHECK(lambda(mul_ext_base(a, b), 2) == mul_ext_base(lambda(a, 2), b));
    }

    // Gabidulin profile: dim lambda_i = k + i
    const size_t n = 8, k = 2;
    ExtMatrix g = random_full_rank_vector(ctx, n, rng);
    ExtMatrix gen = q_vandermonde(g, k);
    for (size_t i = 0; i + k <= n - 1; ++i) {
        CHECK(row_space_dim(lambda(gen, i)) == k + i);
    }

    // random 2x8 over F_{2^12}: dim lambda_2 = 6 with high probability
    size_t hits = 0;
    for (int i = 0; i < 20; ++i) {
        ExtMatrix r = ExtMatrix::random(ctx, 2, 8, rng);
        if (row_space_dim(lambda(r, 2)) == 6) ++hits;
    }
    CHECK(hits >= 18);
}

TEST_CASE("lambda dimension bounds for distorted Gabidulin generators") {
    // k+i <= dim lambda_i(X | G) <= k+i+d with d = min((i+1)k, ell)
    auto ctx = make_context(2, 12);
    Rng rng(37);
    const size_t n = 9, k = 3, ell = 4;
    for (int trial = 0; trial < 15; ++trial) {
        ExtMatrix g = random_full_rank_vector(ctx, n, rng);
        ExtMatrix block = hstack(ExtMatrix::random(ctx, k, ell, rng), q_vandermonde(g, k));
        for (size_t i = 0; i + k <= n - 1; ++i) {
            const size_t dim = row_space_dim(lambda(block, i));
            const size_t d = std::min((i + 1) * k, ell);
            CHECK(dim >= k + i);
            CHECK(dim <= k + i + d);
        }
    }
}

TEST_CASE("row_space_dim with an independent elimination oracle") {
    auto ctx = make_context(2, 10);
    CHECK(row_space_dim(ExtMatrix::identity(ctx, 4)) == 4);

    ExtMatrix twice(ctx, 2, 3);
    Rng rng(41);
    ExtMatrix row = ExtMatrix::random(ctx, 1, 3, rng);
    for (size_t c = 0; c < 3; ++c) {
        twice.set(0, c, row.at(0, c));
        twice.set(1, c, row.at(0, c));
    }
    CHECK(row_space_dim(twice) == 1);

    for (int i = 0; i < 30; ++i) {
        ExtMatrix m = ExtMatrix::random(ctx, 3, 5, rng);
        CHECK(row_space_dim(m) == rank_by_column_elimination(m));
    }
    for (int i = 0; i < 20; ++i) {
        // rank-deficient by construction
        ExtMatrix m = mul(ExtMatrix::random(ctx, 4, 2, rng), ExtMatrix::random(ctx, 2, 5, rng));
        CHECK(row_space_dim(m) == rank_by_column_elimination(m));
    }
}

TEST_CASE("dual_space basics and involution") {
    auto ctx = make_context(2, 6);

    CHECK(dual_space(ExtMatrix::identity(ctx, 2)).rows() == 0);

    ExtMatrix ones = vec(ctx, {ctx->one(), ctx->one()});
    ExtMatrix d = dual_space(ones);
    REQUIRE(d.rows() == 1);
    // spanned by (1, -1); over F_2 that is (1, 1)
    CHECK(d.get(0, 0) == ctx->one());
    CHECK(d.get(0, 1) == ctx->one());

    Rng rng(43);
    for (int i = 0; i < 40; ++i) {
        const size_t rows = 1 + rng.below(3), cols = rows + 1 + rng.below(4);
        ExtMatrix m = ExtMatrix::random(ctx, rows, cols, rng);
        ExtMatrix dual = dual_space(m);
        CHECK(dual.rows() == cols - row_space_dim(m));
        CHECK(mul(m, transposed(dual)).is_zero());
        CHECK(row_space_equal(dual_space(dual), m));
    }
}

TEST_CASE("dual annihilation over an odd-characteristic field") {
    auto ctx = make_context(5, 3);
    Rng rng(47);
    for (int i = 0; i < 20; ++i) {
        ExtMatrix m = ExtMatrix::random(ctx, 2, 5, rng);
        ExtMatrix dual = dual_space(m);
        CHECK(mul(m, transposed(dual)).is_zero());
        CHECK(row_space_equal(dual_space(dual), m));
    }
}

TEST_CASE("puncture positions are 1-based sets") {
    auto ctx = make_context(2, 4);
    Rng rng(53);
    ExtMatrix m = ExtMatrix::random(ctx, 2, 3, rng);

    CHECK(puncture(m, {}) == m);

    ExtMatrix p = puncture(m, {2});
    CHECK(p.cols() == 2);
    CHECK(p.get(0, 0) == m.get(0, 0));
    CHECK(p.get(0, 1) == m.get(0, 2));
    CHECK(p.get(1, 1) == m.get(1, 2));

    CHECK_THROWS_AS(puncture(m, {0}), InvalidPositions);
    CHECK_THROWS_AS(puncture(m, {4}), InvalidPositions);
    CHECK_THROWS_AS(puncture(m, {1, 1}), InvalidPositions);
    CHECK_THROWS_AS(puncture(m, {1, 2, 3}), InvalidPositions);
}

TEST_CASE("rank weight is a rank-metric isometry invariant") {
    auto ctx = make_context(3, 6);
    Rng rng(59);
    for (int i = 0; i < 25; ++i) {
        ExtMatrix v = ExtMatrix::random(ctx, 1, 6, rng);
        BaseMatrix t = BaseMatrix::random_invertible(3, 6, rng);
        CHECK(rank_weight(mul_ext_base(v, t)) == rank_weight(v));
    }
}

TEST_CASE("echelon space tracks rank across column deletions") {
    auto ctx = make_context(2, 12);
    Rng rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        ExtMatrix m = mul(ExtMatrix::random(ctx, 6, 4, rng), ExtMatrix::random(ctx, 4, 9, rng));
        EchelonSpace space(m);
        CHECK(space.dim() == row_space_dim(m));
        for (size_t c = 0; c < m.cols(); ++c) {
            CHECK(space.dim_if_column_removed(c) == row_space_dim(puncture(m, {c + 1})));
        }
        const size_t drop = rng.below(m.cols());
        space.remove_column(drop);
        ExtMatrix punct = puncture(m, {drop + 1});
        CHECK(space.dim() == row_space_dim(punct));
        for (size_t c = 0; c < punct.cols(); ++c) {
            CHECK(space.dim_if_column_removed(c) == row_space_dim(puncture(punct, {c + 1})));
        }
    }
}

TEST_CASE("solvers over the extension field") {
    auto ctx = make_context(2, 10);
    Rng rng(67);
    for (int i = 0; i < 15; ++i) {
        // X * A = B with known X
        ExtMatrix a(ctx, 3, 7);
        do {
            a = ExtMatrix::random(ctx, 3, 7, rng);
        } while (row_space_dim(a) != 3);
        ExtMatrix x = ExtMatrix::random(ctx, 2, 3, rng);
        CHECK(solve_left_factor(a, mul(x, a)) == x);

        ExtMatrix s(ctx, 3, 3);
        do {
            s = ExtMatrix::random(ctx, 3, 3, rng);
        } while (row_space_dim(s) != 3);
        CHECK(mul(s, ext_inverse(s)) == ExtMatrix::identity(ctx, 3));
    }
    ExtMatrix singular(ctx, 2, 2);
    CHECK_THROWS_AS(ext_inverse(singular), DegenerateSystem);
}

TEST_CASE("base matrix inverse and rank") {
    Rng rng(71);
    for (uint32_t q : {2u, 3u, 7u}) {
        for (int i = 0; i < 10; ++i) {
            BaseMatrix m = BaseMatrix::random_invertible(q, 5, rng);
            BaseMatrix prod = m * m.inverse();
            CHECK(prod.is_identity());
            CHECK(m.transposed().rank() == 5);
        }
    }
    BaseMatrix zero(2, 3, 3);
    CHECK_THROWS_AS(zero.inverse(), DegenerateSystem);
}
