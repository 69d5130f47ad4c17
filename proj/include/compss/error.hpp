// Copyright 2026 The compss Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace compss {

/// Base of every error thrown by the library. The CLI maps the concrete
/// subclass onto a process exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid configuration (unknown key, bad type, violated
/// constraint, unknown preset).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A numeric argument outside its admissible range (depth, resolution, scale).
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// The requested computation would exceed a configured size cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Input outside the mathematical domain of an operation (point on E,
/// degenerate polygon, empty set, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A floating-point consistency check failed.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace compss
