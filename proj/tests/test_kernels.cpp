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


#include <vector>

#include "adiagate/kernels.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace adiagate;
using namespace testing;

namespace {

std::vector<kernels::Backend> backends() {
  std::vector<kernels::Backend> out{kernels::Backend::scalar};
  if (kernels::available(kernels::Backend::avx2)) out.push_back(kernels::Backend::avx2);
  return out;
}

struct BackendGuard {
  kernels::Backend saved = kernels::active();
  ~BackendGuard() { kernels::set_active(saved); }
};

}  // namespace

TEST_CASE("inner and norm2 agree across backends") {
  for (std::size_t n : {1u, 2u, 3u, 7u, 64u, 1025u}) {
    const Vector a = random_vector(static_cast<Eigen::Index>(n));
    const Vector b = random_vector(static_cast<Eigen::Index>(n));
    const Complex ref = a.dot(b);
    for (auto backend : backends()) {
      CAPTURE(kernels::name(backend));
      const auto& k = kernels::table(backend);
      CHECK(std::abs(k.inner(a.data(), b.data(), n) - ref) < 1e-13);
      CHECK(k.norm2(a.data(), n) == doctest::Approx(1.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("local operator application agrees across backends") {
  BackendGuard guard;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 6;
    const int k = 1 + trial % std::min(n, 3);
    std::vector<int> targets;
    for (int q = n - 1; static_cast<int>(targets.size()) < k; q -= 1) targets.push_back(q);
    const Matrix op = random_matrix(Eigen::Index{1} << k);
    const Vector psi = random_vector(Eigen::Index{1} << n);
    const Vector ref = brute_force_embed(op, targets, n) * psi;
    for (auto backend : backends()) {
      CAPTURE(kernels::name(backend));
      kernels::set_active(backend);
      CHECK((apply_local(op, targets, psi) - ref).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("avx2 backend is reported only when the CPU supports it") {
  if (!kernels::available(kernels::Backend::avx2)) {
    CHECK(kernels::best_available() == kernels::Backend::scalar);
    CHECK_THROWS(kernels::set_active(kernels::Backend::avx2));
  } else {
    CHECK(kernels::best_available() == kernels::Backend::avx2);
  }
  CHECK(kernels::name(kernels::Backend::scalar) == "scalar");
}
