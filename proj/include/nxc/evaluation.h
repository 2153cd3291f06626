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

#ifndef NXC_EVALUATION_H_
#define NXC_EVALUATION_H_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "nxc/codec.h"
#include "nxc/metrics.h"

namespace nxc {

// Center crop to (floor(H/m)*m, floor(W/m)*m).
template <typename T>
Tensor<T> CropToMultiple(const Tensor<T>& image, int m = 256);

struct RdPoint {
  double bpp = 0.0;
  double psnr = 0.0;
};

struct RdCurve {
  std::string name;
  std::vector<RdPoint> points;  // strictly increasing bpp

  // Errors unless bpp is positive and strictly increasing and PSNR finite.
  void Validate() const;
};

// "# codec: NAME", then "bpp,psnr", then one row per point.
RdCurve ReadRdCurveCsv(const std::string& path);
void WriteRdCurveCsv(const std::string& path, const RdCurve& curve);

enum class BdMethod {
  kCubic,  // least-squares cubic of log10(bpp) over PSNR, integrated exactly
  kPchip,  // monotone piecewise cubic Hermite interpolation
};

// Average bitrate difference of test against anchor over their common PSNR
// range, in percent; negative means the test codec needs fewer bits.
double BdRate(const RdCurve& anchor, const RdCurve& test, BdMethod method = BdMethod::kCubic);

struct ImageResult {
  std::string name;
  int height = 0;
  int width = 0;
  double bpp = 0.0;  // bitstream bits / original pixels
  double psnr = 0.0;
  double estimated_bpp = 0.0;
};

// Compresses and decompresses each image (after CropToMultiple(256) when
// crop is set) and reports real bitstream rates.
std::vector<ImageResult> EvaluateImages(const Codec& codec, const std::vector<Tensor<float>>& images,
                                        const std::vector<std::string>& names, bool crop = true);
RdPoint MeanPoint(const std::vector<ImageResult>& results);

// One point per model, sorted by bpp.
RdCurve RdCurveEval(const std::string& name, const std::vector<const Model<float>*>& models,
                    const std::vector<Tensor<float>>& images);

struct ComplexityReport {
  int64_t parameters = 0;
  int64_t encode_flops = 0;  // one 256x256 image
  int64_t decode_flops = 0;
  double encode_ms = 0.0;  // mean wall clock over the corpus
  double decode_ms = 0.0;
  int images = 0;
  std::string device;

  double MflopsPerPixel() const { return (encode_flops + decode_flops) / (256.0 * 256.0) / 1e6; }
  nlohmann::json ToJson() const;
};

// Latency uses `warmup` untimed round trips first. An empty corpus reports
// parameters and FLOPs only.
ComplexityReport MeasureComplexity(Model<float>& model, const std::vector<Tensor<float>>& corpus,
                                   int warmup = 1);

std::string DeviceLabel();

// Static SVG plots.
void WriteRdPlotSvg(const std::string& path, const std::vector<RdCurve>& curves,
                    const std::string& title);
struct ScatterPoint {
  std::string label;
  double x = 0.0;
  double y = 0.0;
};
void WriteScatterSvg(const std::string& path, const std::vector<ScatterPoint>& points,
                     const std::string& x_label, const std::string& y_label,
                     const std::string& title);

}  // namespace nxc

#endif  // NXC_EVALUATION_H_
