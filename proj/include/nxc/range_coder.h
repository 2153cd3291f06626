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

#ifndef NXC_RANGE_CODER_H_
#define NXC_RANGE_CODER_H_

#include <cstdint>
#include <span>
#include <vector>

namespace nxc {

// Carry-propagating range coder with a 64-bit low register and a 32-bit
// range. Frequencies are given against a power-of-two total (at most 2^16).
class RangeEncoder {
 public:
  // Codes the interval [start, start + freq) out of 2^total_bits.
  void Encode(uint32_t start, uint32_t freq, int total_bits);
  // Codes the low nbits (<= 16) of value with a flat distribution.
  void EncodeBits(uint32_t value, int nbits);
  // Flushes and returns the stream. The encoder must not be reused.
  std::vector<uint8_t> Finish();

 private:
  void ShiftLow();

  uint64_t low_ = 0;
  uint32_t range_ = 0xFFFFFFFFu;
  uint8_t cache_ = 0;
  uint64_t cache_size_ = 1;
  bool first_ = true;  // the very first emitted byte is always 0 and is dropped
  std::vector<uint8_t> out_;
};

class RangeDecoder {
 public:
  // Throws kTruncated if data is shorter than the 4-byte preamble.
  explicit RangeDecoder(std::span<const uint8_t> data);

  // Returns the frequency slot in [0, 2^total_bits) for the next symbol; the
  // caller must then call Consume with the interval that contains it.
  uint32_t Peek(int total_bits);
  void Consume(uint32_t start, uint32_t freq);
  uint32_t DecodeBits(int nbits);

  // Errors unless every byte was consumed.
  void Finish() const;
  size_t position() const { return pos_; }

 private:
  uint8_t NextByte();
  void Normalize();

  std::span<const uint8_t> data_;
  size_t pos_ = 0;
  uint32_t range_ = 0xFFFFFFFFu;
  uint32_t code_ = 0;
  uint32_t step_ = 0;  // range_ >> total_bits of the pending Peek
};

}  // namespace nxc

#endif  // NXC_RANGE_CODER_H_
