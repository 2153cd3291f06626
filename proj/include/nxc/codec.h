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

#ifndef NXC_CODEC_H_
#define NXC_CODEC_H_

#include <cstdint>
#include <span>
#include <vector>

#include "nxc/bitstream.h"
#include "nxc/cdf.h"
#include "nxc/model.h"

namespace nxc {

struct EncodeResult {
  Bitstream bitstream;
  std::vector<int32_t> z_symbols;
  std::vector<std::vector<int32_t>> y_symbols;
  Tensor<float> y_hat;  // post-LRP latent, (1, M, H/16, W/16) of the padded image
  Tensor<float> x_hat;  // encoder-side reconstruction, cropped and clamped
  double estimated_bits = 0.0;  // model rate estimate under eval-mode likelihoods
};

struct DecodeResult {
  std::vector<int32_t> z_symbols;
  std::vector<std::vector<int32_t>> y_symbols;
  Tensor<float> y_hat;
  Tensor<float> x_hat;  // cropped to the original size and clamped to [0, 1]
};

// Image compressor bound to one model. The model must outlive the codec and
// must not be modified while the codec is in use.
class Codec {
 public:
  explicit Codec(const Model<float>& model, ExecMode transform_exec = ExecMode::kFast);

  // image: (1, 3, H, W), H and W >= 64, values in [0, 1].
  EncodeResult Compress(const Tensor<float>& image) const;
  DecodeResult Decompress(const Bitstream& b) const;
  DecodeResult Decompress(std::span<const uint8_t> bytes) const {
    return Decompress(ParseBitstream(bytes));
  }

  const CdfTable& gaussian_table() const { return gaussian_; }
  const CdfTable& factorized_table() const { return factorized_; }
  const std::vector<double>& scale_table() const { return scales_; }

 private:
  std::vector<const CdfRow*> ZRows(const Shape& z) const;
  std::vector<const CdfRow*> YRows(const Tensor<float>& sigma) const;

  const Model<float>& model_;
  ExecMode exec_;
  std::vector<double> scales_;
  CdfTable gaussian_;
  CdfTable factorized_;
  std::vector<float> medians_;
};

}  // namespace nxc

#endif  // NXC_CODEC_H_
