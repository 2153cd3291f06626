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

#ifndef NXC_ENTROPY_H_
#define NXC_ENTROPY_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nxc/config.h"
#include "nxc/layers.h"

namespace nxc {

inline constexpr double kScaleMin = 0.11;
inline constexpr double kLikelihoodMin = 1e-9;
inline constexpr double kTailMass = 1.0 / 512.0;  // 2^-9

// Standard normal CDF.
template <typename T>
inline T NormalCdf(T x) {
  return T(0.5) * std::erfc(-x * static_cast<T>(0.70710678118654752440));
}

// Probability mass of the unit-width bin centred on v under N(mu, sigma^2):
// Phi((v - mu + 1/2) / sigma) - Phi((v - mu - 1/2) / sigma). Evaluated on
// |v - mu| so that the result is exactly symmetric.
template <typename T>
inline T GaussianBinMass(T v, T mu, T sigma) {
  const T a = std::abs(v - mu);
  return NormalCdf((T(0.5) - a) / sigma) - NormalCdf((T(-0.5) - a) / sigma);
}

// Per-element Gaussian-conditional likelihoods (not lower-bounded).
template <typename T>
Tensor<T> GaussianConditionalLikelihood(const Tensor<T>& v, const Tensor<T>& mu,
                                        const Tensor<T>& sigma);

// Gradients of a loss w.r.t. (v, mu, sigma) given dL/dp for the
// lower-bounded likelihood max(p, kLikelihoodMin).
template <typename T>
void GaussianConditionalBackward(const Tensor<T>& v, const Tensor<T>& mu,
                                 const Tensor<T>& sigma, const Tensor<T>& grad_p,
                                 Tensor<T>* grad_v, Tensor<T>* grad_mu,
                                 Tensor<T>* grad_sigma);

// max(p, kLikelihoodMin) elementwise.
template <typename T>
Tensor<T> LowerBoundLikelihood(const Tensor<T>& p);

// Differentiable rate in bits per pixel: sum(-log2 p) / num_pixels.
template <typename T>
double EstimateRateBpp(std::span<const Tensor<T>* const> likelihoods, int64_t num_pixels);

// Location/scale of the conditional Gaussian for one latent slice.
template <typename T>
struct EntropyParams {
  Tensor<T> mu;
  Tensor<T> sigma;  // >= kScaleMin everywhere
};

// Learned per-channel monotone cumulative model for the hyper-latent
// (4 small monotone layers of width 3 per channel).
template <typename T>
class FactorizedPrior {
 public:
  static constexpr int kLayers = 4;
  static constexpr std::array<int, kLayers + 1> kDims{1, 3, 3, 3, 1};

  struct Quantiles {
    T lower;   // CDF = tail_mass / 2
    T median;  // CDF = 1/2
    T upper;   // CDF = 1 - tail_mass / 2
  };

  FactorizedPrior() = default;
  explicit FactorizedPrior(int channels);

  void Init(Rng& rng);
  int channels() const { return channels_; }

  // Logit of the cumulative distribution of channel c at x.
  T Logits(int channel, T x) const;
  // CDF(v + 1/2) - CDF(v - 1/2), lower-bounded at kLikelihoodMin.
  T BinMass(int channel, T v) const;
  Tensor<T> Likelihood(const Tensor<T>& z) const;
  // Accumulates parameter gradients; returns dL/dz.
  Tensor<T> LikelihoodBackward(const Tensor<T>& z, const Tensor<T>& grad_p);

  // Solved by bisection on the monotone logits.
  Quantiles ChannelQuantiles(int channel, double tail_mass = kTailMass) const;
  std::vector<T> Medians() const;

  void VisitParams(const std::string& prefix, const ParamVisitor<T>& visit);

  std::array<Param<T>, kLayers> matrices;  // (C, out, in, 1), softplus-reparameterized
  std::array<Param<T>, kLayers> biases;    // (C, out, 1, 1)
  std::array<Param<T>, kLayers - 1> factors;  // (C, out, 1, 1), tanh-reparameterized

 private:
  T BinMassWithGrad(int channel, T v, T grad_p, T* grad_v);
  int channels_ = 0;
};

// conv(k0) -> GELU -> conv(k1) -> GELU -> conv(k2), "same" padding.
template <typename T>
class SliceNet {
 public:
  struct Cache {
    Tensor<T> input;
    Tensor<T> h0, a0, h1, a1;
  };

  SliceNet() = default;
  SliceNet(int in_channels, std::array<int, 2> widths, std::array<int, 3> kernels,
           int out_channels);

  Tensor<T> Forward(const Tensor<T>& x, ExecMode mode, Cache* cache = nullptr) const;
  Tensor<T> Backward(const Cache& cache, const Tensor<T>& grad_out);
  void Init(Rng& rng);
  void VisitParams(const std::string& prefix, const ParamVisitor<T>& visit);
  int64_t Flops(int h, int w) const;
  int in_channels() const { return convs[0].in_channels(); }

  std::array<Conv2d<T>, 3> convs;
};

// Channel-wise auto-regressive entropy parameter model with latent residual
// prediction. Slice i is conditioned on the hyper features and the quantized
// slices [0, SupportSlices(i)) before their latent residual is added, so
// toggling LRP never changes the coded symbols.
template <typename T>
class ChannelContextModel {
 public:
  struct SliceCache {
    Tensor<T> scale_raw;  // pre-softplus scale output
    typename SliceNet<T>::Cache mean, scale, lrp;
    Tensor<T> lrp_raw;  // pre-tanh LRP output
  };

  ChannelContextModel() = default;
  explicit ChannelContextModel(const ModelConfig& cfg);

  void Init(Rng& rng);

  // hyper: (B, 2M, h, w); first M channels feed the mean networks, the rest
  // the scale networks. decoded must hold exactly SupportSlices(i)
  // quantized slices; anything else is a contract error.
  EntropyParams<T> SliceParams(int slice, const Tensor<T>& hyper,
                               std::span<const Tensor<T>> decoded, ExecMode mode,
                               SliceCache* cache = nullptr) const;

  // 1/2 tanh(net(hyper_mean, decoded, y_tilde)); |r| < 1/2.
  Tensor<T> LatentResidual(int slice, const Tensor<T>& hyper,
                           std::span<const Tensor<T>> decoded, const Tensor<T>& y_tilde,
                           ExecMode mode, SliceCache* cache = nullptr) const;

  // Backward for one slice. Gradients w.r.t. the hyper features are added to
  // grad_hyper, w.r.t. the support slices to grad_decoded[j], and w.r.t. the
  // LRP input y_tilde to grad_y_tilde.
  void SliceBackward(int slice, const SliceCache& cache, const Tensor<T>& grad_mu,
                     const Tensor<T>& grad_sigma, const Tensor<T>& grad_lrp,
                     Tensor<T>* grad_hyper, std::span<Tensor<T>> grad_decoded,
                     Tensor<T>* grad_y_tilde);

  void VisitParams(const std::string& prefix, const ParamVisitor<T>& visit);
  int64_t Flops(int h, int w) const;

  int num_slices() const { return cfg_.num_slices; }
  int slice_depth() const { return cfg_.slice_depth(); }
  const ModelConfig& config() const { return cfg_; }

 private:
  Tensor<T> BuildInput(int slice, const Tensor<T>& hyper, bool scale_half,
                       std::span<const Tensor<T>> decoded, const Tensor<T>* extra) const;

  ModelConfig cfg_;
  std::vector<SliceNet<T>> mean_nets_, scale_nets_, lrp_nets_;
};

}  // namespace nxc

#endif  // NXC_ENTROPY_H_
