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

#ifndef NXC_TRAINING_H_
#define NXC_TRAINING_H_

#include <cstdint>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nxc/config.h"
#include "nxc/model.h"

namespace nxc {

struct TrainConfig {
  double lambda = 0.02;
  int batch_size = 8;
  int crop_size = 256;
  int64_t total_steps = 3'500'000;
  double lr = 1e-4;
  double lr_final = 1e-5;
  int64_t lr_final_steps = 100'000;  // the last lr_final_steps steps use lr_final
  double beta1 = 0.9;
  double beta2 = 0.999;
  double adam_eps = 1e-8;
  double clip_norm = 1.0;  // <= 0 disables clipping
  uint64_t seed = 0;

  // Toy-scale schedule: 5k steps of one 256x256 crop.
  static TrainConfig Toy();
  void Validate() const;
  double LearningRate(int64_t step) const;  // step is 0-based

  nlohmann::json ToJson() const;
  // Starts from base and overrides the keys present; unknown keys are errors.
  static TrainConfig FromJson(const nlohmann::json& j, const TrainConfig& base);
};

struct RdLossResult {
  double loss = 0.0;
  double rate = 0.0;        // bpp_y + bpp_z
  double distortion = 0.0;  // MSE in 255-scaled units
};

// L = R + lambda * D with D = MSE(x, x_hat) * 255^2. If grad_x_hat is
// non-null it receives dL/dx_hat.
template <typename T>
RdLossResult RdLoss(const Tensor<T>& x, const Tensor<T>& x_hat, double bpp_y, double bpp_z,
                    double lambda, Tensor<T>* grad_x_hat = nullptr);

// Global L2 norm of all gradients, then rescale to max_norm if larger.
template <typename T>
double ClipGradNorm(Model<T>& model, double max_norm);

template <typename T>
class Adam {
 public:
  Adam(Model<T>& model, double beta1, double beta2, double eps);
  void Step(Model<T>& model, double lr);
  int64_t steps() const { return t_; }

 private:
  double beta1_, beta2_, eps_;
  int64_t t_ = 0;
  std::vector<std::vector<T>> m_, v_;
};

struct StepMetrics {
  int64_t step = 0;  // 1-based count of completed updates
  double loss = 0.0;
  double bpp = 0.0;
  double mse = 0.0;  // 255-scaled
  double psnr = 0.0;
  double grad_norm = 0.0;
  double lr = 0.0;
};

// One Adam update per call on R + lambda * D with uniform-noise
// quantization. Noise for step t is derived from (seed, t).
class Trainer {
 public:
  Trainer(Model<float>& model, const TrainConfig& cfg);
  // Throws Error(kNumeric) with a diagnostic snapshot on a non-finite loss or
  // gradient; the model is left untouched in that case.
  StepMetrics Step(const Tensor<float>& batch);
  int64_t step() const { return step_; }

 private:
  Model<float>& model_;
  TrainConfig cfg_;
  Adam<float> adam_;
  int64_t step_ = 0;
};

// Seeded random crops, uniform over valid positions.
class CropSampler {
 public:
  // Images smaller than the crop are dropped with a warning on stderr.
  CropSampler(std::vector<Tensor<float>> images, int crop_size, int batch_size, uint64_t seed);
  Tensor<float> Next();
  size_t num_images() const { return images_.size(); }

 private:
  std::vector<Tensor<float>> images_;
  int crop_, batch_;
  Rng rng_;
};

// All *.png files of a directory, sorted by name, as (1, 3, H, W) tensors.
std::vector<Tensor<float>> LoadPngDir(const std::string& dir);

// Procedural RGB images (gradients, shapes, stripes, texture, noise) used
// when no photographic corpus is available. Values are on the 8-bit grid.
std::vector<Tensor<float>> SyntheticImages(int count, int h, int w, uint64_t seed);

// Trailing mean of losses[max(0, end - window) .. end).
double SmoothedLoss(const std::vector<double>& losses, size_t end, size_t window);

// Append-only CSV: step,loss,bpp,mse,psnr
class MetricsCsv {
 public:
  explicit MetricsCsv(const std::string& path);
  void Append(const StepMetrics& m);

 private:
  std::ofstream out_;
};

std::vector<StepMetrics> ReadMetricsCsv(const std::string& path);

// Where training images come from: a PNG directory, or else a procedural set.
struct DataSource {
  std::string dir;
  int synthetic_count = 128;
  int synthetic_size = 320;
  uint64_t synthetic_seed = 2024;

  std::vector<Tensor<float>> Load() const;
  nlohmann::json ToJson() const;
  static DataSource FromJson(const nlohmann::json& j);
};

// A complete training job. The run directory receives metrics.csv,
// config.json and checkpoint.nxck.
struct TrainJob {
  ModelConfig model;
  TrainConfig train = TrainConfig::Toy();
  DataSource data;
  std::string out_dir;
  int64_t checkpoint_every = 1000;  // 0 = only at the end

  nlohmann::json ToJson() const;
  // {"model": {...}, "train": {...}, "data": {...}, "checkpoint_every": n}
  static TrainJob FromJson(const nlohmann::json& j);
};

// Runs the job to completion; on_step (optional) sees every step's metrics.
std::vector<StepMetrics> RunTraining(const TrainJob& job,
                                     const std::function<void(const StepMetrics&)>& on_step = {});

}  // namespace nxc

#endif  // NXC_TRAINING_H_
