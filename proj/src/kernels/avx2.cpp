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

// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <vector>

#include "adiagate/kernels.hpp"

namespace adiagate::kernels {
namespace {

// Lanes hold (re0, im0, re1, im1).
inline __m256d load2(const Complex* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

Complex inner_avx2(const Complex* a, const Complex* b, std::size_t n) {
  __m256d re = _mm256_setzero_pd();  // ar*br, ai*bi
  __m256d im = _mm256_setzero_pd();  // ar*bi, ai*br
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = load2(a + i);
    const __m256d vb = load2(b + i);
    re = _mm256_fmadd_pd(va, vb, re);
    im = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), im);
  }
  alignas(32) double r[4];
  alignas(32) double m[4];
  _mm256_store_pd(r, re);
  _mm256_store_pd(m, im);
  Complex acc{r[0] + r[1] + r[2] + r[3], (m[0] - m[1]) + (m[2] - m[3])};
  for (; i < n; ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double norm2_avx2(const Complex* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = load2(a + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += std::norm(a[i]);
  return s;
}

// out[r..r+1] += M[r..r+1, c] * x for a broadcast complex x.
inline __m256d cmul_acc(__m256d col, __m256d x_re, __m256d x_im, __m256d acc) {
  const __m256d swapped = _mm256_permute_pd(col, 0b0101);
  const __m256d t = _mm256_mul_pd(swapped, x_im);
  return _mm256_add_pd(acc, _mm256_fmaddsub_pd(col, x_re, t));
}

void apply_gathered_avx2(Complex* state, const std::size_t* bases, std::size_t n_bases,
                         const std::size_t* offsets, std::size_t dim, const Complex* matrix) {
  if (dim < 2) {
    for (std::size_t b = 0; b < n_bases; ++b) state[bases[b] + offsets[0]] *= matrix[0];
    return;
  }
  // dim is a power of two, so rows pair up exactly.
  std::vector<Complex> in(dim);
  std::vector<Complex> acc(dim);
  double* accd = reinterpret_cast<double*>(acc.data());
  for (std::size_t b = 0; b < n_bases; ++b) {
    Complex* base = state + bases[b];
    for (std::size_t j = 0; j < dim; ++j) in[j] = base[offsets[j]];
    std::fill(acc.begin(), acc.end(), Complex{0.0, 0.0});
    for (std::size_t c = 0; c < dim; ++c) {
      const __m256d x_re = _mm256_set1_pd(in[c].real());
      const __m256d x_im = _mm256_set1_pd(in[c].imag());
      const Complex* col = matrix + c * dim;
      for (std::size_t p = 0; p < dim; p += 2) {
        const __m256d sum = cmul_acc(load2(col + p), x_re, x_im, _mm256_loadu_pd(accd + 2 * p));
        _mm256_storeu_pd(accd + 2 * p, sum);
      }
    }
    for (std::size_t r = 0; r < dim; ++r) base[offsets[r]] = acc[r];
  }
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable t{&inner_avx2, &norm2_avx2, &apply_gathered_avx2};
  return t;
}

}  // namespace adiagate::kernels
