// Copyright 2026 The ccawalk Authors
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

namespace ccawalk {

/// Raised when an input violates a documented invariant (bad cavity count,
/// out-of-range site, theta outside [0, pi/2], non-monotone time grid, ...).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string &what) : std::invalid_argument(what) {}
};

/// Raised when a dense oracle computation would exceed its size guard.
class SizeGuardError : public std::length_error {
 public:
  explicit SizeGuardError(const std::string &what) : std::length_error(what) {}
};

}  // namespace ccawalk
