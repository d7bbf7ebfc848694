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

#ifndef RANKLAB_KERNELS_HPP
#define RANKLAB_KERNELS_HPP

#include <cstddef>
#include <cstdint>

namespace ranklab::kern {

/*
 * Row kernels over residue arrays mod a small prime q (2 <= q <= 251,
 * one residue per byte). These are the inner loops of every elimination
 * in the library; everything else is built on top of them.
 *
 * Two implementations ship: a scalar reference and an AVX2 variant
 * (16-bit lanes, Barrett reduction). The AVX2 variant is selected at
 * runtime when the CPU supports it and must be byte-for-byte equivalent
 * to the scalar one; tests/test_kernels.cpp enforces that.
 */
struct Ops {
    // y[i] <- (y[i] + c * x[i]) mod q
    void (*row_addmul)(uint8_t* y, const uint8_t* x, size_t n, uint8_t c, uint8_t q);
    // y[i] <- (c * y[i]) mod q
    void (*row_scale)(uint8_t* y, size_t n, uint8_t c, uint8_t q);
    bool (*row_is_zero)(const uint8_t* x, size_t n);
    const char* name;
};

const Ops& scalar_ops();

/// AVX2 variant, or nullptr when not compiled in. Callers must check
/// avx2_available() before executing it.
const Ops* avx2_ops_or_null();

/// True when the AVX2 variant is compiled in and the CPU supports it.
bool avx2_available();

/// Active implementation (AVX2 when available unless forced off).
const Ops& active();

/// Test/diagnostic hook; also honored via env RANKLAB_FORCE_SCALAR=1.
void force_scalar(bool on);

inline void row_addmul(uint8_t* y, const uint8_t* x, size_t n, uint8_t c, uint8_t q) {
    active().row_addmul(y, x, n, c, q);
}

inline void row_scale(uint8_t* y, size_t n, uint8_t c, uint8_t q) {
    active().row_scale(y, n, c, q);
}

inline bool row_is_zero(const uint8_t* x, size_t n) { return active().row_is_zero(x, n); }

}  // namespace ranklab::kern

#endif  // RANKLAB_KERNELS_HPP
