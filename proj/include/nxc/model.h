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

#ifndef NXC_MODEL_H_
#define NXC_MODEL_H_

#include <cstdint>
#include <vector>

#include "nxc/config.h"
#include "nxc/entropy.h"
#include "nxc/quantization.h"
#include "nxc/transforms.h"

namespace nxc {

// Everything one forward pass produces. Slice tensors are (B, M/s, H/16, W/16).
template <typename T>
struct ForwardOutput {
  Tensor<T> y;
  Tensor<T> z;
  Tensor<T> z_hat;  // noisy (train) or median-centred rounded (eval)
  Tensor<T> hyper;  // (B, 2M, H/16, W/16)
  std::vector<EntropyParams<T>> params;
  std::vector<Tensor<T>> y_tilde;  // noisy or rounded slice, before LRP
  std::vector<Tensor<T>> y_hat;    // y_tilde + latent residual
  std::vector<Tensor<T>> lik_y;    // lower-bounded
  Tensor<T> lik_z;                 // lower-bounded
  std::vector<int32_t> z_symbols;                // eval only
  std::vector<std::vector<int32_t>> y_symbols;   // eval only, per slice
  Tensor<T> x_hat;  // not clamped
  double bpp_y = 0.0;
  double bpp_z = 0.0;
};

// Activations retained for the backward pass.
template <typename T>
struct ForwardTape {
  typename Encoder<T>::Cache analysis, hyper_analysis;
  typename Decoder<T>::Cache synthesis, hyper_synthesis;
  std::vector<typename ChannelContextModel<T>::SliceCache> slices;
};

// The complete codec network: analysis/synthesis transforms, hyperprior,
// factorized prior for z and the channel-wise context model for y.
template <typename T>
class Model {
 public:
  explicit Model(const ModelConfig& cfg);

  // Deterministic initialization from a seed.
  void Init(uint64_t seed);
  const ModelConfig& config() const { return cfg_; }

  // x: (B, 3, H, W) with H, W multiples of 64. In kTrainNoise mode the noise
  // is drawn from noise_seed; kEvalRound ignores it. exec selects the GEMM
  // path of the transforms; in kEvalRound mode hyper-synthesis and the
  // context model always run canonically, exactly as the decoder does.
  ForwardOutput<T> Forward(const Tensor<T>& x, QuantMode mode, uint64_t noise_seed,
                           ExecMode exec = ExecMode::kFast,
                           ForwardTape<T>* tape = nullptr) const;

  // Accumulates parameter gradients of L given dL/dx_hat and dL/dR, where R
  // is bpp_y + bpp_z of the same forward pass.
  void Backward(const ForwardOutput<T>& out, const ForwardTape<T>& tape,
                const Tensor<T>& grad_x_hat, double grad_rate);

  void VisitParams(const ParamVisitor<T>& visit);
  void ZeroGrad();
  int64_t NumParams();

  // FLOPs of convolution and dense layers for one H x W image.
  int64_t EncodeFlops(int h, int w) const;
  int64_t DecodeFlops(int h, int w) const;

  // When false, latent residual prediction is skipped (residual = 0).
  bool lrp_enabled = true;

  Encoder<T> analysis;
  Decoder<T> synthesis;
  Encoder<T> hyper_analysis;
  Decoder<T> hyper_synthesis;
  ChannelContextModel<T> context;
  FactorizedPrior<T> prior;

 private:
  ModelConfig cfg_;
};

}  // namespace nxc

#endif  // NXC_MODEL_H_
