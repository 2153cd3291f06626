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

#ifndef NXC_CDF_H_
#define NXC_CDF_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "nxc/entropy.h"
#include "nxc/range_coder.h"

namespace nxc {

inline constexpr int kCdfPrecision = 16;
inline constexpr uint32_t kCdfTotal = 1u << kCdfPrecision;
inline constexpr int kScaleTableSize = 64;
inline constexpr double kScaleTableMax = 256.0;

// Integer cumulative frequencies for symbols offset .. offset + n - 1, where
// n = cdf.size() - 2; the final bin is the escape for everything else.
struct CdfRow {
  int32_t offset = 0;
  std::vector<uint32_t> cdf;  // cdf.front() == 0, cdf.back() == kCdfTotal

  int num_bins() const { return static_cast<int>(cdf.size()) - 1; }
  int32_t min_symbol() const { return offset; }
  int32_t max_symbol() const { return offset + num_bins() - 2; }
  uint32_t freq(int bin) const { return cdf[bin + 1] - cdf[bin]; }

  bool operator==(const CdfRow&) const = default;
};

using CdfTable = std::vector<CdfRow>;

// Quantizes a pmf (last entry = escape mass) to frequencies summing to
// kCdfTotal with every bin >= 1.
CdfRow QuantizePmf(std::span<const double> pmf, int32_t offset);

// 64 log-spaced scales from kScaleMin to 256.
std::vector<double> ScaleTable();
// Index of the smallest table entry >= sigma (the last entry if none).
int ScaleIndex(std::span<const double> table, double sigma);

// One zero-mean Gaussian row per scale-table entry, support
// +-ceil(sigma * z) where z leaves kTailMass outside.
CdfTable BuildGaussianTables(std::span<const double> scales);

// One row per channel, centred on the prior median.
template <typename T>
CdfTable BuildFactorizedTables(const FactorizedPrior<T>& prior, double tail_mass = kTailMass);

// Symbols inside the row support are coded directly; others go through the
// escape bin followed by a 6-bit length and the zigzag-coded value.
void EncodeSymbol(RangeEncoder& enc, const CdfRow& row, int32_t symbol);
int32_t DecodeSymbol(RangeDecoder& dec, const CdfRow& row);

std::vector<uint8_t> RangeEncode(std::span<const int32_t> symbols,
                                 std::span<const CdfRow* const> rows);
// Decodes rows.size() symbols and requires the stream to be fully consumed.
std::vector<int32_t> RangeDecode(std::span<const uint8_t> bytes,
                                 std::span<const CdfRow* const> rows);

// Code length in bits implied by the integer tables (escape payload included).
double TableCostBits(std::span<const int32_t> symbols, std::span<const CdfRow* const> rows);

// Plain-text export:
//   nxc-cdf 1
//   rows <R> precision 16
//   <offset> <n> <c_0> ... <c_n>      (one line per row, n = num_bins)
void WriteCdfTable(std::ostream& os, const CdfTable& table);
CdfTable ReadCdfTable(std::istream& is);

}  // namespace nxc

#endif  // NXC_CDF_H_
