// Copyright 2026 The rhseed Authors
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

#ifndef RHSEED_CORE_CHECK_HPP_
#define RHSEED_CORE_CHECK_HPP_

#include <stdexcept>
#include <string>

namespace rhseed {

// Raised when a caller breaks a documented precondition (for example
// advancing a terminal state). Not meant to be caught and recovered from
// inside the library; the C API turns it into RHSEED_ERR_CONTRACT.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rhseed

#define RHSEED_CHECK(cond, msg)                                              \
  do {                                                                       \
    if (!(cond)) {                                                           \
      throw ::rhseed::ContractViolation(std::string(__FILE__) + ":" +        \
                                        std::to_string(__LINE__) + ": " +    \
                                        "check failed: " #cond ": " + (msg)); \
    }                                                                        \
  } while (false)

#endif  // RHSEED_CORE_CHECK_HPP_
