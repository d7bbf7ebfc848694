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

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace ranklab::kern {

#ifdef RANKLAB_AVX2_TU
const Ops& avx2_ops();  // defined in kernels_avx2.cpp
#endif

namespace {

bool cpu_has_avx2() {
#if defined(RANKLAB_AVX2_TU) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Ops* detect() {
    const char* env = std::getenv("RANKLAB_FORCE_SCALAR");
    if (env && std::strcmp(env, "0") != 0) return &scalar_ops();
#ifdef RANKLAB_AVX2_TU
    if (cpu_has_avx2()) return &avx2_ops();
#endif
    return &scalar_ops();
}

std::atomic<const Ops*> g_active{nullptr};

}  // namespace

bool avx2_available() { return cpu_has_avx2(); }

const Ops* avx2_ops_or_null() {
#ifdef RANKLAB_AVX2_TU
    return &avx2_ops();
#else
    return nullptr;
#endif
}

const Ops& active() {
    const Ops* ops = g_active.load(std::memory_order_acquire);
    if (!ops) {
        ops = detect();
        g_active.store(ops, std::memory_order_release);
    }
    return *ops;
}

void force_scalar(bool on) {
    g_active.store(on ? &scalar_ops() : detect(), std::memory_order_release);
}

}  // namespace ranklab::kern
