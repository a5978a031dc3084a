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

#pragma once

// State-vector inner loops. Every kernel has a scalar reference version and,
// where the CPU allows it, an AVX2+FMA version. The backend is picked once at
// startup (override with ADIAGATE_KERNELS=scalar|avx2) and can be switched
// explicitly for equivalence tests.

#include <complex>
#include <cstddef>
#include <string_view>

namespace adiagate::kernels {

using Complex = std::complex<double>;

enum class Backend { scalar, avx2 };

struct KernelTable {
  // sum_i conj(a_i) * b_i
  Complex (*inner)(const Complex* a, const Complex* b, std::size_t n);
  // sum_i |a_i|^2
  double (*norm2)(const Complex* a, std::size_t n);
  // Applies a column-major dim x dim matrix to the amplitudes addressed by
  // `offsets` around every base index in `bases`.
  void (*apply_gathered)(Complex* state, const std::size_t* bases, std::size_t n_bases,
                         const std::size_t* offsets, std::size_t dim, const Complex* matrix);
};

const KernelTable& table(Backend backend);
bool available(Backend backend);
Backend best_available();

Backend active();
void set_active(Backend backend);
std::string_view name(Backend backend);

const KernelTable& scalar_table();
#if defined(ADIAGATE_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

}  // namespace adiagate::kernels
