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

#include "corrbound/error.hpp"

namespace corrbound {

const char* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::domain: return "domain error";
    case ErrorKind::size: return "size error";
    case ErrorKind::numerical: return "numerical error";
    case ErrorKind::not_psd: return "not positive semidefinite";
    case ErrorKind::root_isolation: return "root isolation error";
    case ErrorKind::range: return "range error";
    case ErrorKind::io: return "I/O error";
    }
    return "error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
{
}

NumericalError::NumericalError(const std::string& what, double residual)
    : Error(ErrorKind::numerical, what + " (residual " + std::to_string(residual) + ")"),
      residual_(residual)
{
}

void throw_domain(const std::string& parameter, const std::string& detail)
{
    throw Error(ErrorKind::domain, parameter + ": " + detail);
}

} // namespace corrbound
