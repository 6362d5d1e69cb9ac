// Copyright 2026 The QAOA Workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>
#include <string>

#include "qaoa/error.h"
#include "qaoa/simd/kernels.h"

namespace qaoa::simd {

#ifndef QAOA_HAVE_AVX2
const KernelTable *avx2_kernels() {
    return nullptr;
}
#endif

std::string_view backend_name(Backend backend) {
    switch (backend) {
        case Backend::kScalar:
            return "scalar";
        case Backend::kAvx2:
            return "avx2";
    }
    return "?";
}

bool cpu_supports_avx2() {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
    static const bool supported = [] {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    }();
    return supported;
#else
    return false;
#endif
}

std::vector<Backend> available_backends() {
    std::vector<Backend> out{Backend::kScalar};
    if (avx2_kernels() != nullptr && cpu_supports_avx2()) {
        out.push_back(Backend::kAvx2);
    }
    return out;
}

const KernelTable &kernels_for(Backend backend) {
    if (backend == Backend::kAvx2) {
        if (avx2_kernels() == nullptr || !cpu_supports_avx2()) {
            throw InputError("backend avx2 is not available on this build or CPU");
        }
        return *avx2_kernels();
    }
    return scalar_kernels();
}

namespace {

Backend best_backend() {
    return available_backends().back();
}

struct ActiveSlot {
    std::atomic<Backend> backend{best_backend()};
    std::atomic<const KernelTable *> table{&kernels_for(best_backend())};
};

ActiveSlot &active_slot() {
    static ActiveSlot slot;
    return slot;
}

}  // namespace

const KernelTable &active_kernels() {
    return *active_slot().table.load(std::memory_order_acquire);
}

Backend active_backend() {
    return active_slot().backend.load(std::memory_order_acquire);
}

void set_active_backend(Backend backend) {
    const KernelTable &table = kernels_for(backend);
    active_slot().table.store(&table, std::memory_order_release);
    active_slot().backend.store(backend, std::memory_order_release);
}

}  // namespace qaoa::simd
