// Copyright 2026 The diamsieve Authors
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

#ifndef DIAMSIEVE_ERRORS_H_
#define DIAMSIEVE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace diamsieve {

// Bad argument shape: malformed partition, mismatched graph/shape, k > n.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input outside a formula's or model's domain (p not in (0,1), n too small).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input is well-formed but violates an operation's stated precondition,
// e.g. evaluating the explicit asymptotic constants outside their window.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Enumeration or memory budget exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace diamsieve

#endif  // DIAMSIEVE_ERRORS_H_
