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

#ifndef NXC_METRICS_H_
#define NXC_METRICS_H_

#include <cmath>
#include <limits>

#include "nxc/tensor.h"

namespace nxc {

// Mean squared error in 255-scaled pixel units over all elements.
template <typename T>
double Mse255(const Tensor<T>& x, const Tensor<T>& y) {
  CheckShape(y.shape(), x.shape(), "MSE operand");
  double acc = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double d = (static_cast<double>(x[i]) - static_cast<double>(y[i])) * 255.0;
    acc += d * d;
  }
  return x.size() ? acc / static_cast<double>(x.size()) : 0.0;
}

// +infinity when the MSE is exactly zero.
inline double PsnrFromMse255(double mse) {
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

// 10 log10(255^2 / MSE_255) over the whole tensor.
template <typename T>
double Psnr(const Tensor<T>& x, const Tensor<T>& y) {
  return PsnrFromMse255(Mse255(x, y));
}

}  // namespace nxc

#endif  // NXC_METRICS_H_
