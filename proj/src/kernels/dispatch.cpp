// Copyright 2026 The adiagate Authors
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
#include <cstdlib>
#include <string>

#include "adiagate/core.hpp"
#include "adiagate/kernels.hpp"

namespace adiagate::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(ADIAGATE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend initial_backend() {
  if (const char* env = std::getenv("ADIAGATE_KERNELS")) {
    const std::string v{env};
    if (v == "scalar") return Backend::scalar;
    if (v == "avx2" && cpu_has_avx2()) return Backend::avx2;
  }
  return best_available();
}

std::atomic<Backend>& active_slot() {
  static std::atomic<Backend> slot{initial_backend()};
  return slot;
}

}  // namespace

bool available(Backend backend) {
  switch (backend) {
    case Backend::scalar: return true;
    case Backend::avx2: return cpu_has_avx2();
  }
  return false;
}

Backend best_available() { return available(Backend::avx2) ? Backend::avx2 : Backend::scalar; }

const KernelTable& table(Backend backend) {
#if defined(ADIAGATE_HAVE_AVX2)
  if (backend == Backend::avx2 && available(Backend::avx2)) return avx2_table();
#endif
  if (backend != Backend::scalar) throw ValidationError("kernel backend not available on this CPU");
  return scalar_table();
}

Backend active() { return active_slot().load(std::memory_order_relaxed); }

void set_active(Backend backend) {
  if (!available(backend)) throw ValidationError("kernel backend not available on this CPU");
  active_slot().store(backend, std::memory_order_relaxed);
}

std::string_view name(Backend backend) { return backend == Backend::avx2 ? "avx2" : "scalar"; }

}  // namespace adiagate::kernels
