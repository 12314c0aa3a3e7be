// SPDX-License-Identifier: Apache-2.0
//
// corrbound - eigenvalue bounds for exponential-model spatial correlation matrices
// Copyright (C) 2026 The corrbound Authors
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

#ifndef CORRBOUND_ERROR_HPP
#define CORRBOUND_ERROR_HPP

#include <stdexcept>
#include <string>

namespace corrbound {

enum class ErrorKind {
    domain,         // parameter outside the admissible set
    size,           // dimension degenerate or above a cap
    numerical,      // iteration cap hit, breakdown
    not_psd,        // eigenvalue below the negative clamp tolerance
    root_isolation, // grid scan found the wrong number of sign changes
    range,          // result would overflow or is meaningless near a = 1
    io              // file could not be written
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised by iterative solvers; carries the residual observed when the
/// iteration stopped.
class NumericalError : public Error {
public:
    NumericalError(const std::string& what, double residual);
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

[[noreturn]] void throw_domain(const std::string& parameter, const std::string& detail);

} // namespace corrbound

#endif
