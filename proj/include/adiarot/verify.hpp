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


#ifndef ADIAROT_VERIFY_HPP
#define ADIAROT_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace adiarot {

struct PropertyResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string detail;

    bool passed() const { return failures == 0; }
};

/// Seeded property suites over the built-in models and random driven
/// instances: block spectrum, zero ground energy, analytic derivative,
/// stage continuity, gap monotonicity and coupling bounds.
std::vector<PropertyResult> run_property_suites(std::uint64_t seed);

/// Prints one line per suite. Returns 0 when every suite passes, 3 otherwise.
int verify_command(std::uint64_t seed, std::string *report = nullptr);

}  // namespace adiarot

#endif
