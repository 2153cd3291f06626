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

#ifndef NXC_LAYERS_H_
#define NXC_LAYERS_H_

#include <cstdint>
#include <functional>
#include <string>

#include "nxc/random.h"
#include "nxc/tensor.h"

namespace nxc {

// kFast may use blocked SIMD GEMM; kCanonical evaluates every dot product in a
// fixed ascending order so encoder and decoder builds agree bit-exactly.
enum class ExecMode { kFast, kCanonical };

template <typename T>
struct Param {
  Param() = default;
  explicit Param(Shape s) : value(s), grad(s) {}
  Tensor<T> value;
  Tensor<T> grad;
  void ZeroGrad() { grad.Fill(T(0)); }
};

template <typename T>
using ParamVisitor = std::function<void(const std::string&, Param<T>&)>;

// C[m,n] (+)= op(A) * op(B); all matrices row-major. op(A) is m x k.
template <typename T>
void Gemm(ExecMode mode, bool trans_a, bool trans_b, int m, int n, int k,
          const T* a, const T* b, T* c, bool accumulate);

// Plain 2-d convolution (groups = 1) with square kernel and zero padding.
template <typename T>
class Conv2d {
 public:
  Conv2d() = default;
  Conv2d(int in_channels, int out_channels, int kernel, int stride, int pad);

  Tensor<T> Forward(const Tensor<T>& x, ExecMode mode = ExecMode::kFast) const;
  // Accumulates parameter gradients; returns dL/dx.
  Tensor<T> Backward(const Tensor<T>& x, const Tensor<T>& grad_out);
  void InitKaimingUniform(Rng& rng);
  void InitTruncNormal(Rng& rng, double stddev);
  void VisitParams(const std::string& prefix, const ParamVisitor<T>& visit);
  int64_t Flops(int in_h, int in_w) const;
  Shape OutputShape(const Shape& in) const;

  int in_channels() const { return in_; }
  int out_channels() const { return out_; }

  Param<T> weight;  // (out, in, k, k)
  Param<T> bias;    // (1, out, 1, 1)

 private:
  int in_ = 0, out_ = 0, kernel_ = 1, stride_ = 1, pad_ = 0;
};

// k x k depthwise convolution, stride 1, "same" zero padding.
template <typename T>
class DepthwiseConv2d {
 public:
  DepthwiseConv2d() = default;
  DepthwiseConv2d(int channels, int kernel);

  Tensor<T> Forward(const Tensor<T>& x) const;
  Tensor<T> Backward(const Tensor<T>& x, const Tensor<T>& grad_out);
  void InitTruncNormal(Rng& rng, double stddev);
  void VisitParams(const std::string& prefix, const ParamVisitor<T>& visit);
  int64_t Flops(int h, int w) const;
  int channels() const { return channels_; }

  Param<T> weight;  // (channels, 1, k, k)
  Param<T> bias;

 private:
  int channels_ = 0, kernel_ = 7;
};

// 2x2 stride-2 transposed convolution: exact spatial doubling.
template <typename T>
class ConvTranspose2x2 {
 public:
  ConvTranspose2x2() = default;
  ConvTranspose2x2(int in_channels, int out_channels);

  Tensor<T> Forward(const Tensor<T>& x, ExecMode mode = ExecMode::kFast) const;
  Tensor<T> Backward(const Tensor<T>& x, const Tensor<T>& grad_out);
  void InitTruncNormal(Rng& rng, double stddev);
  void VisitParams(const std::string& prefix, const ParamVisitor<T>& visit);
  int64_t Flops(int in_h, int in_w) const;

  Param<T> weight;  // (in, out, 2, 2)
  Param<T> bias;

 private:
  int in_ = 0, out_ = 0;
};

template <typename T>
struct LayerNormCache {
  Tensor<T> normalized;  // (x - mean) * rstd
  Tensor<T> rstd;        // (n, 1, h, w)
};

// Normalizes over channels independently at every spatial position.
template <typename T>
class LayerNorm2d {
 public:
  static constexpr double kEpsilon = 1e-6;

  LayerNorm2d() = default;
  explicit LayerNorm2d(int channels);

  Tensor<T> Forward(const Tensor<T>& x, LayerNormCache<T>* cache = nullptr) const;
  Tensor<T> Backward(const LayerNormCache<T>& cache, const Tensor<T>& grad_out);
  void VisitParams(const std::string& prefix, const ParamVisitor<T>& visit);

  Param<T> weight;
  Param<T> bias;

 private:
  int channels_ = 0;
};

// Exact (erf) GELU.
template <typename T>
Tensor<T> Gelu(const Tensor<T>& x);
template <typename T>
Tensor<T> GeluBackward(const Tensor<T>& x, const Tensor<T>& grad_out);

}  // namespace nxc

#endif  // NXC_LAYERS_H_
