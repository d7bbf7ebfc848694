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
#include <vector>

#include "doctest.h"
#include "ranklab/kernels.hpp"
#include "ranklab/rng.hpp"

using namespace ranklab;

namespace {

std::vector<uint8_t> random_residues(Rng& rng, size_t n, uint8_t q) {
    std::vector<uint8_t> v(n);
    for (auto& x : v) x = static_cast<uint8_t>(rng.below(q));
    return v;
}

const uint8_t kPrimes[] = {2, 3, 5, 7, 11, 127, 251};
const size_t kLengths[] = {0, 1, 5, 31, 32, 33, 64, 100, 257};

}  // namespace

TEST_CASE("scalar addmul semantics") {
    auto ops = kern::scalar_ops();
    std::vector<uint8_t> y{2, 1, 0, 2};
    const std::vector<uint8_t> x{2, 2, 1, 0};
    ops.row_addmul(y.data(), x.data(), y.size(), 2, 3);
    CHECK(y == std::vector<uint8_t>{0, 2, 2, 2});

    std::vector<uint8_t> y2{1, 0, 1};
    const std::vector<uint8_t> x2{1, 1, 0};
    ops.row_addmul(y2.data(), x2.data(), y2.size(), 1, 2);
    CHECK(y2 == std::vector<uint8_t>{0, 1, 1});
}

TEST_CASE("scalar scale and zero-scan semantics") {
    auto ops = kern::scalar_ops();
    std::vector<uint8_t> y{4, 3, 0, 1};
    ops.row_scale(y.data(), y.size(), 3, 5);
    CHECK(y == std::vector<uint8_t>{2, 4, 0, 3});
    CHECK_FALSE(ops.row_is_zero(y.data(), y.size()));
    ops.row_scale(y.data(), y.size(), 0, 5);
    CHECK(ops.row_is_zero(y.data(), y.size()));
}

TEST_CASE("avx2 kernels match the scalar reference bytewise") {
    if (!kern::avx2_available()) {
        MESSAGE("AVX2 unavailable; equivalence suite skipped");
        return;
    }
    const kern::Ops& scalar = kern::scalar_ops();
    const kern::Ops& simd = *kern::avx2_ops_or_null();
    Rng rng(0xfeedface);
    for (uint8_t q : kPrimes) {
        for (size_t n : kLengths) {
            for (int rep = 0; rep < 8; ++rep) {
                const auto x = random_residues(rng, n, q);
                const auto y0 = random_residues(rng, n, q);
                const uint8_t c = static_cast<uint8_t>(rng.below(q));

                auto ys = y0, yv = y0;
                scalar.row_addmul(ys.data(), x.data(), n, c, q);
                simd.row_addmul(yv.data(), x.data(), n, c, q);
                CHECK(ys == yv);

                auto ss = y0, sv = y0;
                scalar.row_scale(ss.data(), n, c, q);
                simd.row_scale(sv.data(), n, c, q);
                CHECK(ss == sv);

                CHECK(scalar.row_is_zero(y0.data(), n) == simd.row_is_zero(y0.data(), n));
            }
        }
    }
}

TEST_CASE("dispatch honors force_scalar") {
    kern::force_scalar(true);
    CHECK(std::string(kern::active().name) == "scalar");
    kern::force_scalar(false);
    if (kern::avx2_available()) {
        CHECK(std::string(kern::active().name) == "avx2");
    } else {
        CHECK(std::string(kern::active().name) == "scalar");
    }
}
