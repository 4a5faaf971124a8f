// Copyright 2026 The Admission Auctions Authors.
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

#ifndef ADMISSION_ERROR_HPP_
#define ADMISSION_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace admission {

// Rejected input or violated precondition. `reason()` is a short
// machine-readable code such as "bid_exceeds_capacity".
class InputError : public std::invalid_argument {
 public:
  InputError(std::string reason, const std::string& message)
      : std::invalid_argument(message), reason_(std::move(reason)) {}

  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
};

}  // namespace admission

#endif  // ADMISSION_ERROR_HPP_
