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

#ifndef NXC_TENSOR_H_
#define NXC_TENSOR_H_

#include <algorithm>
#include <cstddef>
#include <new>
#include <span>
#include <string>
#include <vector>

#include "nxc/error.h"

namespace nxc {

// 64-byte aligned storage. Eigen peels unaligned heads before vectorizing, so
// without this the summation order (and the low bits) depend on heap addresses.
template <typename T>
struct AlignedAllocator {
  using value_type = T;
  static constexpr std::align_val_t kAlign{64};
  AlignedAllocator() = default;
  template <typename U>
  AlignedAllocator(const AlignedAllocator<U>&) {}
  T* allocate(size_t n) { return static_cast<T*>(::operator new(n * sizeof(T), kAlign)); }
  void deallocate(T* p, size_t) { ::operator delete(p, kAlign); }
  template <typename U>
  bool operator==(const AlignedAllocator<U>&) const { return true; }
};

template <typename T>
using AlignedVector = std::vector<T, AlignedAllocator<T>>;

// NCHW extents of a 4-d feature map.
struct Shape {
  int n = 0;
  int c = 0;
  int h = 0;
  int w = 0;

  size_t size() const {
    return static_cast<size_t>(n) * c * h * w;
  }
  size_t plane() const { return static_cast<size_t>(h) * w; }
  bool operator==(const Shape& o) const = default;
  std::string ToString() const;
};

// Dense row-major NCHW tensor with value semantics.
template <typename T>
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape, T fill = T(0))
      : shape_(shape), data_(shape.size(), fill) {}
  Tensor(int n, int c, int h, int w) : Tensor(Shape{n, c, h, w}) {}

  const Shape& shape() const { return shape_; }
  int n() const { return shape_.n; }
  int c() const { return shape_.c; }
  int h() const { return shape_.h; }
  int w() const { return shape_.w; }
  size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  std::span<T> span() { return data_; }
  std::span<const T> span() const { return data_; }
  AlignedVector<T>& vec() { return data_; }
  const AlignedVector<T>& vec() const { return data_; }

  T* plane(int n, int c) {
    return data_.data() + (static_cast<size_t>(n) * shape_.c + c) * shape_.plane();
  }
  const T* plane(int n, int c) const {
    return data_.data() + (static_cast<size_t>(n) * shape_.c + c) * shape_.plane();
  }
  // Contiguous [C, H*W] block for one batch element.
  T* image(int n) { return plane(n, 0); }
  const T* image(int n) const { return plane(n, 0); }

  T& at(int n, int c, int y, int x) {
    return plane(n, c)[static_cast<size_t>(y) * shape_.w + x];
  }
  T at(int n, int c, int y, int x) const {
    return plane(n, c)[static_cast<size_t>(y) * shape_.w + x];
  }
  T& operator[](size_t i) { return data_[i]; }
  T operator[](size_t i) const { return data_[i]; }

  void Fill(T v) { std::fill(data_.begin(), data_.end(), v); }

  template <typename U>
  Tensor<U> Cast() const {
    Tensor<U> out(shape_);
    for (size_t i = 0; i < data_.size(); ++i) out[i] = static_cast<U>(data_[i]);
    return out;
  }

  // Channels [begin, begin + count) as a new tensor.
  Tensor SliceChannels(int begin, int count) const;
  // this[:, begin:begin+src.c] += src
  void AddToChannels(int begin, const Tensor& src);
  void CopyToChannels(int begin, const Tensor& src);

  Tensor& operator+=(const Tensor& o);

 private:
  Shape shape_;
  AlignedVector<T> data_;
};

template <typename T>
Tensor<T> ConcatChannels(std::span<const Tensor<T>* const> parts);

template <typename T>
bool AllFinite(const Tensor<T>& t);

inline void CheckShape(const Shape& got, const Shape& want, const char* what) {
  if (!(got == want)) {
    Fail(ErrorKind::kShape, std::string(what) + ": expected " + want.ToString() +
                                ", got " + got.ToString());
  }
}

}  // namespace nxc

#endif  // NXC_TENSOR_H_
