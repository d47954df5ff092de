// SPDX-License-Identifier: Apache-2.0
//
// harqmimo: antenna dimensioning and outage analysis for MIMO-HARQ links
// Copyright (C) 2026 The harqmimo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace harqmimo {

/// Argument outside the mathematical domain of a function (Q^-1 at p >= 1,
/// Lambert W below -1/e, the K = 1 row of the Case 4 closed form, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// No finite antenna count (or no admissible power) meets the request.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An integer search ran past its upper bound without meeting the target.
class SearchBoundError : public std::runtime_error {
public:
    SearchBoundError(const std::string& what, long long bound)
        : std::runtime_error(what), bound_(bound) {}
    long long bound() const noexcept { return bound_; }

private:
    long long bound_;
};

/// A bracketed root search found no sign change.
class NoRootError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Power schedule length does not match the number of HARQ rounds.
class ScheduleMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Channel geometry the sampler has no model for (correlated matrices).
class UnsupportedGeometryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace harqmimo
