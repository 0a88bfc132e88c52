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

#ifndef ZBERTA_SIMD_KERNELS_H_
#define ZBERTA_SIMD_KERNELS_H_

#include <span>
#include <string_view>

// Reduction kernels behind cosine similarity and the threshold statistics.
//
// Every variant accumulates in four interleaved lanes (element i goes to lane
// i % 4), folds the lanes as (l0 + l1) + (l2 + l3), then adds the tail
// elements in order. The scalar reference performs exactly these operations,
// so all variants are bit-identical and results do not depend on the CPU.

namespace zberta::simd {

enum class Isa { kScalar, kAvx2 };

std::string_view IsaName(Isa isa);

// True when the running CPU (and this build) can execute `isa`.
bool IsaSupported(Isa isa);

// Best supported instruction set, detected once.
Isa ActiveIsa();

struct KernelTable {
  double (*dot)(const double *a, const double *b, size_t n);
  double (*sum)(const double *a, size_t n);
  double (*sum_squares)(const double *a, size_t n);
  double (*sum_squared_deviations)(const double *a, size_t n, double center);
};

// Kernels for a specific ISA; throws std::invalid_argument if unsupported.
const KernelTable &KernelsFor(Isa isa);

namespace scalar {
double Dot(const double *a, const double *b, size_t n);
double Sum(const double *a, size_t n);
double SumSquares(const double *a, size_t n);
double SumSquaredDeviations(const double *a, size_t n, double center);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define ZBERTA_HAVE_AVX2_KERNELS 1
namespace avx2 {
double Dot(const double *a, const double *b, size_t n);
double Sum(const double *a, size_t n);
double SumSquares(const double *a, size_t n);
double SumSquaredDeviations(const double *a, size_t n, double center);
}  // namespace avx2
#endif

// Dispatched entry points.
double Dot(std::span<const double> a, std::span<const double> b);
double Sum(std::span<const double> a);
double SumSquares(std::span<const double> a);
double SumSquaredDeviations(std::span<const double> a, double center);

}  // namespace zberta::simd

#endif  // ZBERTA_SIMD_KERNELS_H_
