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

#ifndef NXC_TRANSFORMS_H_
#define NXC_TRANSFORMS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "nxc/layers.h"

namespace nxc {

// Residual block: x + Project(GELU(Expand(LayerNorm(DepthwiseConv(x))))).
template <typename T>
class ConvNeXtBlock {
 public:
  struct Cache {
    Tensor<T> input;
    LayerNormCache<T> norm;
    Tensor<T> norm_out;
    Tensor<T> expanded;   // pre-activation
    Tensor<T> activated;  // GELU output
  };

  ConvNeXtBlock() = default;
  ConvNeXtBlock(int channels, int kernel, int expansion);

  Tensor<T> Forward(const Tensor<T>& x, ExecMode mode = ExecMode::kFast,
                    Cache* cache = nullptr) const;
  Tensor<T> Backward(const Cache& cache, const Tensor<T>& grad_out);
  void Init(Rng& rng);
  void VisitParams(const std::string& prefix, const ParamVisitor<T>& visit);
  int64_t Flops(int h, int w) const;
  int channels() const { return channels_; }

  DepthwiseConv2d<T> dwconv;
  LayerNorm2d<T> norm;
  Conv2d<T> expand;   // C -> expansion * C, pointwise
  Conv2d<T> project;  // expansion * C -> C, pointwise

 private:
  int channels_ = 0;
};

// Patchify downsampling: 2x2 stride-2 convolution followed by LayerNorm.
template <typename T>
class DownsampleBlock {
 public:
  struct Cache {
    Tensor<T> input;
    LayerNormCache<T> norm;
  };

  DownsampleBlock() = default;
  DownsampleBlock(int in_channels, int out_channels);

  Tensor<T> Forward(const Tensor<T>& x, ExecMode mode = ExecMode::kFast,
                    Cache* cache = nullptr) const;
  Tensor<T> Backward(const Cache& cache, const Tensor<T>& grad_out);
  void Init(Rng& rng);
  void VisitParams(const std::string& prefix, const ParamVisitor<T>& visit);
  int64_t Flops(int in_h, int in_w) const { return conv.Flops(in_h, in_w); }

  Conv2d<T> conv;
  LayerNorm2d<T> norm;
};

// Mirror of DownsampleBlock: 2x2 stride-2 transposed convolution + LayerNorm.
template <typename T>
class UpsampleBlock {
 public:
  struct Cache {
    Tensor<T> input;
    LayerNormCache<T> norm;
  };

  UpsampleBlock() = default;
  UpsampleBlock(int in_channels, int out_channels);

  Tensor<T> Forward(const Tensor<T>& x, ExecMode mode = ExecMode::kFast,
                    Cache* cache = nullptr) const;
  Tensor<T> Backward(const Cache& cache, const Tensor<T>& grad_out);
  void Init(Rng& rng);
  void VisitParams(const std::string& prefix, const ParamVisitor<T>& visit);
  int64_t Flops(int in_h, int in_w) const { return conv.Flops(in_h, in_w); }

  ConvTranspose2x2<T> conv;
  LayerNorm2d<T> norm;
};

// Stack of (downsample, ConvNeXt blocks) stages. Used for the analysis
// transform (four stages) and the hyper-analysis transform (two stages).
template <typename T>
class Encoder {
 public:
  struct Cache {
    std::vector<typename DownsampleBlock<T>::Cache> down;
    std::vector<std::vector<typename ConvNeXtBlock<T>::Cache>> blocks;
  };

  Encoder() = default;
  Encoder(int in_channels, std::vector<int> widths, std::vector<int> depths, int kernel,
          int expansion);

  // Requires H and W divisible by 2^num_stages.
  Tensor<T> Forward(const Tensor<T>& x, ExecMode mode = ExecMode::kFast,
                    Cache* cache = nullptr) const;
  Tensor<T> Backward(const Cache& cache, const Tensor<T>& grad_out);
  void Init(Rng& rng);
  void VisitParams(const std::string& prefix, const ParamVisitor<T>& visit);
  int64_t Flops(int in_h, int in_w) const;

  int num_stages() const { return static_cast<int>(down_.size()); }
  int num_blocks(int stage) const { return static_cast<int>(blocks_[stage].size()); }
  int in_channels() const { return in_channels_; }
  int out_channels() const { return widths_.back(); }
  ConvNeXtBlock<T>& block(int stage, int index) { return blocks_[stage][index]; }
  DownsampleBlock<T>& down(int stage) { return down_[stage]; }

 private:
  int in_channels_ = 0;
  std::vector<int> widths_;
  std::vector<DownsampleBlock<T>> down_;
  std::vector<std::vector<ConvNeXtBlock<T>>> blocks_;
};

// Mirror of Encoder: stages run in reverse, each (ConvNeXt blocks, upsample),
// then a pointwise projection to out_channels. Used for the synthesis
// transform (to RGB) and hyper-synthesis (to 2M hyper features).
template <typename T>
class Decoder {
 public:
  struct Cache {
    std::vector<std::vector<typename ConvNeXtBlock<T>::Cache>> blocks;
    std::vector<typename UpsampleBlock<T>::Cache> up;
    Tensor<T> head_input;
  };

  Decoder() = default;
  Decoder(std::vector<int> widths, std::vector<int> depths, int out_channels, int kernel,
          int expansion);

  Tensor<T> Forward(const Tensor<T>& x, ExecMode mode = ExecMode::kFast,
                    Cache* cache = nullptr) const;
  Tensor<T> Backward(const Cache& cache, const Tensor<T>& grad_out);
  void Init(Rng& rng);
  void VisitParams(const std::string& prefix, const ParamVisitor<T>& visit);
  int64_t Flops(int in_h, int in_w) const;

  int num_stages() const { return static_cast<int>(up_.size()); }
  // Stage numbering follows the encoder it mirrors.
  int num_blocks(int stage) const { return static_cast<int>(blocks_[stage].size()); }
  int in_channels() const { return widths_.back(); }
  int out_channels() const { return head_.out_channels(); }
  Conv2d<T>& head() { return head_; }

 private:
  std::vector<int> widths_;
  std::vector<std::vector<ConvNeXtBlock<T>>> blocks_;
  std::vector<UpsampleBlock<T>> up_;
  Conv2d<T> head_;
};

}  // namespace nxc

#endif  // NXC_TRANSFORMS_H_
