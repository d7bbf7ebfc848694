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

// Compiled with -mavx2 for x86 targets only; dispatch guards execution.

#include "ranklab/kernels.hpp"

#include <immintrin.h>

namespace ranklab::kern {

namespace {

/*
 * Residues live in [0, q) with q <= 251, so y + c*x <= 250 + 250*250 < 2^16
 * fits 16-bit lanes. Reduction is Barrett with M = floor(2^16 / q): the
 * estimated quotient is off by at most one, leaving a remainder in [0, 2q)
 * fixed by a single conditional subtract (min against the wrapped value).
 */
inline __m256i barrett_mod(__m256i v, __m256i vq, __m256i vM) {
    __m256i qhat = _mm256_mulhi_epu16(v, vM);
    __m256i rem = _mm256_sub_epi16(v, _mm256_mullo_epi16(qhat, vq));
    return _mm256_min_epu16(rem, _mm256_sub_epi16(rem, vq));
}

inline __m256i pack_u16_pair(__m256i lo, __m256i hi) {
    __m256i packed = _mm256_packus_epi16(lo, hi);
    return _mm256_permute4x64_epi64(packed, 0xd8);
}

void addmul_avx2(uint8_t* y, const uint8_t* x, size_t n, uint8_t c, uint8_t q) {
    if (c == 0) return;
    size_t i = 0;
    if (q == 2) {
        for (; i + 32 <= n; i += 32) {
            __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
            __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), _mm256_xor_si256(a, b));
        }
        for (; i < n; ++i) y[i] ^= x[i];
        return;
    }
    const __m256i vq = _mm256_set1_epi16(q);
    const __m256i vM = _mm256_set1_epi16(static_cast<short>(65536u / q));
    const __m256i vc = _mm256_set1_epi16(c);
    for (; i + 32 <= n; i += 32) {
        __m256i xb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i yb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i xlo = _mm256_cvtepu8_epi16(_mm256_castsi256_si128(xb));
        __m256i xhi = _mm256_cvtepu8_epi16(_mm256_extracti128_si256(xb, 1));
        __m256i ylo = _mm256_cvtepu8_epi16(_mm256_castsi256_si128(yb));
        __m256i yhi = _mm256_cvtepu8_epi16(_mm256_extracti128_si256(yb, 1));
        __m256i vlo = _mm256_add_epi16(ylo, _mm256_mullo_epi16(xlo, vc));
        __m256i vhi = _mm256_add_epi16(yhi, _mm256_mullo_epi16(xhi, vc));
        vlo = barrett_mod(vlo, vq, vM);
        vhi = barrett_mod(vhi, vq, vM);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), pack_u16_pair(vlo, vhi));
    }
    const uint32_t cc = c;
    for (; i < n; ++i) y[i] = static_cast<uint8_t>((y[i] + cc * x[i]) % q);
}

void scale_avx2(uint8_t* y, size_t n, uint8_t c, uint8_t q) {
    if (c == 1) return;
    size_t i = 0;
    if (c == 0) {
        const __m256i zero = _mm256_setzero_si256();
        for (; i + 32 <= n; i += 32) {
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), zero);
        }
        for (; i < n; ++i) y[i] = 0;
        return;
    }
    const __m256i vq = _mm256_set1_epi16(q);
    const __m256i vM = _mm256_set1_epi16(static_cast<short>(65536u / q));
    const __m256i vc = _mm256_set1_epi16(c);
    for (; i + 32 <= n; i += 32) {
        __m256i yb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i ylo = _mm256_cvtepu8_epi16(_mm256_castsi256_si128(yb));
        __m256i yhi = _mm256_cvtepu8_epi16(_mm256_extracti128_si256(yb, 1));
        __m256i vlo = barrett_mod(_mm256_mullo_epi16(ylo, vc), vq, vM);
        __m256i vhi = barrett_mod(_mm256_mullo_epi16(yhi, vc), vq, vM);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), pack_u16_pair(vlo, vhi));
    }
    const uint32_t cc = c;
    for (; i < n; ++i) y[i] = static_cast<uint8_t>((cc * y[i]) % q);
}

bool is_zero_avx2(const uint8_t* x, size_t n) {
    size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 32 <= n; i += 32) {
        acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i)));
    }
    if (!_mm256_testz_si256(acc, acc)) return false;
    for (; i < n; ++i) {
        if (x[i] != 0) return false;
    }
    return true;
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops ops{addmul_avx2, scale_avx2, is_zero_avx2, "avx2"};
    return ops;
}

}  // namespace ranklab::kern
