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

#ifndef NXC_IMAGE_H_
#define NXC_IMAGE_H_

#include <string>

#include "nxc/tensor.h"

namespace nxc {

// Reads any PNG as 8-bit RGB into a (1, 3, H, W) tensor with values in [0, 1].
Tensor<float> ReadPng(const std::string& path);
// Writes image n of a 3-channel tensor, clamping to [0, 1] and rounding to 8 bits.
void WritePng(const std::string& path, const Tensor<float>& image, int n = 0);

// Edge-replicates the bottom/right border up to (h, w).
template <typename T>
Tensor<T> PadReplicate(const Tensor<T>& x, int h, int w);

// Spatial window [y0, y0 + h) x [x0, x0 + w) of every plane.
template <typename T>
Tensor<T> CropSpatial(const Tensor<T>& x, int y0, int x0, int h, int w);

// Batch element n as a (1, C, H, W) tensor.
template <typename T>
Tensor<T> TakeBatch(const Tensor<T>& x, int n);

template <typename T>
void ClampUnit(Tensor<T>& x) {
  for (size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], T(0), T(1));
}

// Rounds to the 8-bit grid, as a PNG round trip would.
template <typename T>
void QuantizeTo8Bit(Tensor<T>& x);

}  // namespace nxc

#endif  // NXC_IMAGE_H_
