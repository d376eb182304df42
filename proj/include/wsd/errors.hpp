// Copyright 2026 The wsdbounds Authors
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
#pragma once

#include <stdexcept>
#include <string>

namespace wsd {

/// Malformed input: bad lengths, unparsable text, dependent rows.
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of a formula.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A hypothesis of the theorem being checked does not hold for the input.
class PreconditionError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Work would exceed an enumeration or memory cap.
class CapacityError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Quantity undefined for a degenerate object (e.g. distance of the zero code).
class DegenerateError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

} // namespace wsd
