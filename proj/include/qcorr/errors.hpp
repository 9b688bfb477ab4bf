// Copyright 2026 The qcorr Authors
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

namespace qcorr {

/// A scalar parameter (damping strength, input weight, ...) is outside its domain.
class OutOfRange : public std::out_of_range {
   public:
    using std::out_of_range::out_of_range;
};

/// Input to a Hermitian routine is not Hermitian within tolerance.
class NotHermitian : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Matrix fails density-matrix validation (trace, Hermiticity, positivity).
class InvalidDensityMatrix : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Matrix does not have X-state structure.
class NotXState : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Neither optimal-measurement condition applies to an X state; use discord_bruteforce.
class TheoremNotApplicable : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

}  // namespace qcorr
