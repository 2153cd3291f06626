// Copyright 2026 The nexcodec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NXC_QUANTIZATION_H_
#define NXC_QUANTIZATION_H_

#include <cmath>
#include <cstdint>
#include <vector>

#include "nxc/random.h"
#include "nxc/tensor.h"

namespace nxc {

enum class QuantMode {
  kTrainNoise,  // v + U(-1/2, 1/2); identity gradient
  kEvalRound,   // round(v - mu) + mu
};

// Round half away from zero, identical on every platform.
template <typename T>
inline T RoundHalfAway(T v) {
  return std::round(v);
}

// Adds i.i.d. uniform noise in [-1/2, 1/2) drawn from rng. The derivative of
// the output with respect to v is exactly 1.
template <typename T>
Tensor<T> QuantizeTrain(const Tensor<T>& v, Rng& rng) {
  Tensor<T> out(v.shape());
  for (size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i] + static_cast<T>(rng.Uniform() - 0.5);
  }
  return out;
}

template <typename T>
Tensor<T> QuantizeTrain(const Tensor<T>& v, uint64_t seed) {
  Rng rng(seed);
  return QuantizeTrain(v, rng);
}

// round(v - mu) + mu elementwise. When symbols is non-null it receives the
// coded integers round(v - mu).
template <typename T>
Tensor<T> QuantizeEval(const Tensor<T>& v, const Tensor<T>& mu,
                       std::vector<int32_t>* symbols = nullptr) {
  CheckShape(mu.shape(), v.shape(), "QuantizeEval mean");
  Tensor<T> out(v.shape());
  if (symbols) symbols->resize(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    const T q = RoundHalfAway(v[i] - mu[i]);
    out[i] = q + mu[i];
    if (symbols) (*symbols)[i] = static_cast<int32_t>(q);
  }
  return out;
}

// Dequantization used by the decoder; must match QuantizeEval exactly.
template <typename T>
inline T Dequantize(int32_t symbol, T mu) {
  return static_cast<T>(symbol) + mu;
}

}  // namespace nxc

#endif  // NXC_QUANTIZATION_H_
