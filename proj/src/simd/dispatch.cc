// Copyright 2026 The zberta Authors.
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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "zberta/simd/kernels.h"

namespace zberta::simd {
namespace {

constexpr KernelTable kScalarTable = {
    &scalar::Dot, &scalar::Sum, &scalar::SumSquares,
    &scalar::SumSquaredDeviations};

#ifdef ZBERTA_HAVE_AVX2_KERNELS
constexpr KernelTable kAvx2Table = {&avx2::Dot, &avx2::Sum, &avx2::SumSquares,
                                    &avx2::SumSquaredDeviations};
#endif

Isa DetectIsa() {
  // ZBERTA_FORCE_SCALAR=1 pins the reference path (debugging, benchmarks).
  if (const char *env = std::getenv("ZBERTA_FORCE_SCALAR");
      env != nullptr && std::string(env) == "1") {
    return Isa::kScalar;
  }
  return IsaSupported(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
}

const KernelTable &Active() {
  static const KernelTable &table = KernelsFor(ActiveIsa());
  return table;
}

}  // namespace

std::string_view IsaName(Isa isa) {
  return isa == Isa::kAvx2 ? "avx2" : "scalar";
}

bool IsaSupported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(ZBERTA_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa ActiveIsa() {
  static const Isa isa = DetectIsa();
  return isa;
}

const KernelTable &KernelsFor(Isa isa) {
  if (!IsaSupported(isa)) {
    throw std::invalid_argument("unsupported ISA: " + std::string(IsaName(isa)));
  }
#ifdef ZBERTA_HAVE_AVX2_KERNELS
  if (isa == Isa::kAvx2) return kAvx2Table;
#endif
  return kScalarTable;
}

double Dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("Dot: length mismatch");
  }
  return Active().dot(a.data(), b.data(), a.size());
}

double Sum(std::span<const double> a) { return Active().sum(a.data(), a.size()); }

double SumSquares(std::span<const double> a) {
  return Active().sum_squares(a.data(), a.size());
}

double SumSquaredDeviations(std::span<const double> a, double center) {
  return Active().sum_squared_deviations(a.data(), a.size(), center);
}

}  // namespace zberta::simd
