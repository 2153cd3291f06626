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

#ifndef NXC_CHECKPOINT_H_
#define NXC_CHECKPOINT_H_

#include <memory>
#include <string>

#include "json.hpp"
#include "nxc/model.h"

namespace nxc {

// Binary layout, integers little-endian:
//   "NXCK" | version u8 | json length u32 | json text | tensor count u32 |
//   { name length u16 | name | n u32 | c u32 | h u32 | w u32 | float32 data }*
// The JSON holds {"model": ModelConfig, "meta": free-form}.
inline constexpr uint8_t kCheckpointVersion = 1;

struct LoadedModel {
  std::unique_ptr<Model<float>> model;
  nlohmann::json meta;
};

void SaveCheckpoint(const std::string& path, Model<float>& model,
                    const nlohmann::json& meta = nlohmann::json::object());
// Every parameter of the configured model must be present with its exact
// shape; unknown tensors are an error.
LoadedModel LoadCheckpoint(const std::string& path);

}  // namespace nxc

#endif  // NXC_CHECKPOINT_H_
