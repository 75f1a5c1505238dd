// Copyright 2026 The ptnc Authors
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

namespace ptnc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand has the wrong matrix dimension (e.g. a 4x4 where a 2x2 is needed).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Operand lies outside the mathematical domain of the operation:
/// non-Hermitian input to a Hermitian routine, invalid density matrix,
/// out-of-range channel parameter, and so on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent experiment configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace ptnc
