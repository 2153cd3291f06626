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

#ifndef NXC_BITSTREAM_H_
#define NXC_BITSTREAM_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace nxc {

inline constexpr char kBitstreamMagic[4] = {'N', 'X', 'C', 'M'};
inline constexpr uint8_t kBitstreamVersion = 1;
// Larger headers are rejected before any allocation.
inline constexpr uint32_t kMaxDimension = 1u << 16;

// Container for one coded image. All integers are big-endian:
//   "NXCM" | version u8 | orig H u32 | orig W u32 | padded H u32 | padded W u32
//   | model id u16 | z length u32 | z bytes | { slice length u32 | bytes }*
struct Bitstream {
  uint8_t version = kBitstreamVersion;
  uint32_t original_h = 0;
  uint32_t original_w = 0;
  uint32_t padded_h = 0;
  uint32_t padded_w = 0;
  uint16_t model_id = 0;
  std::vector<uint8_t> z;
  std::vector<std::vector<uint8_t>> slices;

  bool operator==(const Bitstream&) const = default;

  static constexpr size_t kHeaderBytes = 4 + 1 + 4 * 4 + 2;
  size_t TotalBytes() const;
};

std::vector<uint8_t> SerializeBitstream(const Bitstream& b);
// Validates magic, version, dimensions and every length prefix; errors name
// the failing field or substream.
Bitstream ParseBitstream(std::span<const uint8_t> data);

std::vector<uint8_t> ReadFileBytes(const std::string& path);
void WriteFileBytes(const std::string& path, std::span<const uint8_t> bytes);

}  // namespace nxc

#endif  // NXC_BITSTREAM_H_
