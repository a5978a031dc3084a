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

#include <array>
#include <vector>

#include "adiagate/kernels.hpp"

namespace adiagate::kernels {
namespace {

Complex inner_scalar(const Complex* a, const Complex* b, std::size_t n) {
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double norm2_scalar(const Complex* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::norm(a[i]);
  return acc;
}

void apply_gathered_scalar(Complex* state, const std::size_t* bases, std::size_t n_bases,
                           const std::size_t* offsets, std::size_t dim, const Complex* matrix) {
  std::vector<Complex> in(dim);
  for (std::size_t b = 0; b < n_bases; ++b) {
    Complex* base = state + bases[b];
    for (std::size_t j = 0; j < dim; ++j) in[j] = base[offsets[j]];
    for (std::size_t r = 0; r < dim; ++r) {
      Complex acc{0.0, 0.0};
      for (std::size_t c = 0; c < dim; ++c) acc += matrix[c * dim + r] * in[c];
      base[offsets[r]] = acc;
    }
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable t{&inner_scalar, &norm2_scalar, &apply_gathered_scalar};
  return t;
}

}  // namespace adiagate::kernels
