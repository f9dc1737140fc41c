// Copyright 2026 The bornlab Authors
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

#ifndef BORNLAB_ERRORS_HPP
#define BORNLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bornlab {

/// Input violates a documented precondition (norm, hermiticity, range...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A caller passed an object that does not satisfy the operation's contract,
/// e.g. a non-derived functional to a routine that assumes c = 0.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Two independent computation routes disagreed.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace tol {

inline constexpr double kHerm = 1e-9;
inline constexpr double kUnit = 1e-9;
inline constexpr double kEq = 1e-9;
inline constexpr double kOrth = 1e-12;

}  // namespace tol

}  // namespace bornlab

#endif  // BORNLAB_ERRORS_HPP
