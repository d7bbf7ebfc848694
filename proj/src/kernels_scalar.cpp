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

#include "ranklab/kernels.hpp"

namespace ranklab::kern {

namespace {

void addmul_scalar(uint8_t* y, const uint8_t* x, size_t n, uint8_t c, uint8_t q) {
    if (c == 0) return;
    if (q == 2) {
        // c can only be 1; residues are 0/1 so byte xor is addition mod 2
        for (size_t i = 0; i < n; ++i) y[i] ^= x[i];
        return;
    }
    const uint32_t cc = c;
    for (size_t i = 0; i < n; ++i) {
        y[i] = static_cast<uint8_t>((y[i] + cc * x[i]) % q);
    }
}

void scale_scalar(uint8_t* y, size_t n, uint8_t c, uint8_t q) {
    if (c == 1) return;
    if (c == 0) {
        for (size_t i = 0; i < n; ++i) y[i] = 0;
        return;
    }
    const uint32_t cc = c;
    for (size_t i = 0; i < n; ++i) {
        y[i] = static_cast<uint8_t>((cc * y[i]) % q);
    }
}

bool is_zero_scalar(const uint8_t* x, size_t n) {
    for (size_t i = 0; i < n; ++i) {
        if (x[i] != 0) return false;
    }
    return true;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{addmul_scalar, scale_scalar, is_zero_scalar, "scalar"};
    return ops;
}

}  // namespace ranklab::kern
