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

#include "zberta/simd/kernels.h"

namespace zberta::simd::scalar {
namespace {

constexpr size_t kLanes = 4;

double Fold(const double (&lane)[kLanes]) {
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

}  // namespace

double Dot(const double *a, const double *b, size_t n) {
  double lane[kLanes] = {0.0, 0.0, 0.0, 0.0};
  size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    for (size_t l = 0; l < kLanes; ++l) lane[l] += a[i + l] * b[i + l];
  }
  double acc = Fold(lane);
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double Sum(const double *a, size_t n) {
  double lane[kLanes] = {0.0, 0.0, 0.0, 0.0};
  size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    for (size_t l = 0; l < kLanes; ++l) lane[l] += a[i + l];
  }
  double acc = Fold(lane);
  for (; i < n; ++i) acc += a[i];
  return acc;
}

double SumSquares(const double *a, size_t n) { return Dot(a, a, n); }

double SumSquaredDeviations(const double *a, size_t n, double center) {
  double lane[kLanes] = {0.0, 0.0, 0.0, 0.0};
  size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    for (size_t l = 0; l < kLanes; ++l) {
      double d = a[i + l] - center;
      lane[l] += d * d;
    }
  }
  double acc = Fold(lane);
  for (; i < n; ++i) {
    double d = a[i] - center;
    acc += d * d;
  }
  return acc;
}

}  // namespace zberta::simd::scalar
