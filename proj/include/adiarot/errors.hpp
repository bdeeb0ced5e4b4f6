// Copyright 2026 The adiarot Authors
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

#ifndef ADIAROT_ERRORS_HPP
#define ADIAROT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace adiarot {

/// Bad input: out-of-range parameters, malformed operators, unknown sites.
/// The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// The numerics went wrong: vanishing gap, norm blowup, non-convergence.
/// The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace adiarot

#endif
