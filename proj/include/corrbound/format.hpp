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

#ifndef CORRBOUND_FORMAT_HPP
#define CORRBOUND_FORMAT_HPP

#include <string>

namespace corrbound {

inline constexpr int kOutputDigits = 12;

// Plain decimal notation (never scientific) rounded to `digits` significant
// digits, trailing zeros removed. NaN prints as "nan", infinities as "inf"/"-inf".
std::string format_significant(double value, int digits = kOutputDigits);

} // namespace corrbound

#endif
