// Copyright 2026 The hetcec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HETCEC_ERROR_HPP_
#define HETCEC_ERROR_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hetcec {

enum class ErrorKind {
  // Malformed input: bad dimensions, unknown ids, parse failures.
  kInvalidArgument,
  // Well-formed input that admits no valid schedule (e.g. fewer than L
  // machines available, row count not divisible by a block size).
  kInfeasible,
  // A broken internal invariant. Always a bug.
  kInternal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<int> step = std::nullopt)
      : std::runtime_error(message), kind_(kind), step_(step) {}

  ErrorKind kind() const { return kind_; }

  // Time step the failure is attributed to, when raised by the simulator.
  std::optional<int> step() const { return step_; }

 private:
  ErrorKind kind_;
  std::optional<int> step_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

#define HETCEC_CHECK(cond, msg)                                         \
  do {                                                                  \
    if (!(cond)) {                                                      \
      ::hetcec::fail(::hetcec::ErrorKind::kInternal,                    \
                     std::string("invariant violated: ") + #cond + ": " + \
                         (msg));                                        \
    }                                                                   \
  } while (false)

}  // namespace hetcec

#endif  // HETCEC_ERROR_HPP_
