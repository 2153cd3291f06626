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

#ifndef NXC_CONFIG_H_
#define NXC_CONFIG_H_

#include <array>
#include <string>

#include "json.hpp"

namespace nxc {

// Architecture hyperparameters. The "full" preset is the large model; "toy"
// is sized to train on a laptop CPU.
struct ModelConfig {
  std::string preset = "toy";
  std::array<int, 4> stage_widths{16, 32, 48, 64};
  std::array<int, 4> stage_depths{3, 3, 9, 3};
  std::array<int, 2> hyper_widths{48, 32};  // hyper_widths[1] == hyper_depth
  std::array<int, 2> hyper_depths{5, 1};
  int latent_depth = 64;  // M
  int hyper_depth = 32;   // N
  int kernel_size = 7;
  int expansion_ratio = 4;
  int num_slices = 4;
  int max_support_slices = -1;  // previous slices fed to slice networks; -1 = all
  std::array<int, 2> slice_widths{48, 32};
  std::array<int, 3> slice_kernels{5, 5, 3};
  int model_id = 0;  // stored in bitstreams; typically the lambda index

  static ModelConfig Toy();
  static ModelConfig Full();
  static ModelConfig FromPreset(const std::string& name);

  // Throws Error(kConfig) on any violated invariant.
  void Validate() const;

  int slice_depth() const { return latent_depth / num_slices; }
  int hyper_feature_channels() const { return 2 * latent_depth; }
  // Number of previous slices conditioning slice i.
  int SupportSlices(int slice) const {
    return max_support_slices < 0 ? slice
                                  : (slice < max_support_slices ? slice : max_support_slices);
  }
  // Spatial reduction of y relative to x and of z relative to y.
  static constexpr int kLatentStride = 16;
  static constexpr int kHyperStride = 64;

  nlohmann::json ToJson() const;
  static ModelConfig FromJson(const nlohmann::json& j);
};

}  // namespace nxc

#endif  // NXC_CONFIG_H_
