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

#include "corrbound/format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace corrbound {

std::string format_significant(double value, int digits)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    if (value == 0.0)
        return "0";

    // %.*e performs the significant-digit rounding; the exponent then fixes
    // how many fractional digits the decimal rendering needs.
    char sci[64];
    std::snprintf(sci, sizeof sci, "%.*e", digits - 1, value);
    const int exponent = std::atoi(std::strchr(sci, 'e') + 1);
    const int decimals = std::max(0, digits - 1 - exponent);

    char buf[512];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, std::strtod(sci, nullptr));
    std::string out(buf);
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0')
            out.pop_back();
        if (out.back() == '.')
            out.pop_back();
    }
    if (out == "-0")
        out = "0";
    return out;
}

} // namespace corrbound
