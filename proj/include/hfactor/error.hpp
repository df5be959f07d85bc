// Copyright 2026 The hfactor Authors
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

#ifndef HFACTOR_ERROR_HPP_
#define HFACTOR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace hfactor {

// Malformed graphs, prescriptions, vertex sets or input files.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// The instance is larger than the configured search or scan budget allows.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace hfactor

#endif  // HFACTOR_ERROR_HPP_
