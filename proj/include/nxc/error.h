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

#ifndef NXC_ERROR_H_
#define NXC_ERROR_H_

#include <stdexcept>
#include <string>

namespace nxc {

// Coarse classification used by the CLI to pick exit codes.
enum class ErrorKind {
  kConfig,     // invalid configuration or arguments
  kShape,      // tensor shape contract violated
  kFormat,     // malformed bitstream, checkpoint or CSV
  kTruncated,  // input ended early
  kIo,         // filesystem failure
  kNumeric,    // non-finite values
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void Fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void Check(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) Fail(kind, what);
}

}  // namespace nxc

#endif  // NXC_ERROR_H_
