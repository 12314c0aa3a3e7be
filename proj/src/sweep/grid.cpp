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
#include "corrbound/sweep.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

namespace corrbound {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

std::size_t to_size(std::string_view token, std::string_view whole)
{
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
        throw_domain("grid", "cannot parse integer '" + std::string(token) + "' in '" + std::string(whole) + "'");
    return value;
}

double to_real(std::string_view token, std::string_view whole)
{
    const std::string copy(token);
    char* end = nullptr;
    const double value = std::strtod(copy.c_str(), &end);
    if (copy.empty() || end != copy.c_str() + copy.size() || !std::isfinite(value))
        throw_domain("grid", "cannot parse number '" + copy + "' in '" + std::string(whole) + "'");
    return value;
}

double round12(double x)
{
    return std::round(x * 1e12) / 1e12;
}

} // namespace

std::string_view to_string(SweepMode mode) noexcept
{
    switch (mode) {
    case SweepMode::ula_max: return "ula-max";
    case SweepMode::ula_min: return "ula-min";
    case SweepMode::upa_max: return "upa-max";
    case SweepMode::verify: return "verify";
    }
    return "unknown";
}

SweepMode parse_sweep_mode(std::string_view text)
{
    for (SweepMode m : {SweepMode::ula_max, SweepMode::ula_min, SweepMode::upa_max, SweepMode::verify})
        if (text == to_string(m))
            return m;
    throw_domain("mode", "unknown sweep mode '" + std::string(text) + "'");
}

std::vector<std::size_t> parse_int_grid(std::string_view text)
{
    text = trim(text);
    std::vector<std::size_t> out;
    if (text.find(':') != std::string_view::npos) {
        const auto parts = split(text, ':');
        if (parts.size() < 2 || parts.size() > 3)
            throw_domain("grid", "range must be lo:hi or lo:hi:step, got '" + std::string(text) + "'");
        const std::size_t lo = to_size(parts[0], text);
        const std::size_t hi = to_size(parts[1], text);
        const std::size_t step = parts.size() == 3 ? to_size(parts[2], text) : 1;
        if (step == 0 || hi < lo)
            throw_domain("grid", "empty or invalid range '" + std::string(text) + "'");
        for (std::size_t v = lo; v <= hi; v += step)
            out.push_back(v);
        return out;
    }
    for (auto token : split(text, ','))
        out.push_back(to_size(token, text));
    return out;
}

std::vector<double> parse_real_grid(std::string_view text)
{
    text = trim(text);
    std::vector<double> out;
    if (text.find(':') != std::string_view::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3)
            throw_domain("grid", "real range must be lo:hi:step, got '" + std::string(text) + "'");
        const double lo = to_real(parts[0], text);
        const double hi = to_real(parts[1], text);
        const double step = to_real(parts[2], text);
        if (!(step > 0.0) || hi < lo)
            throw_domain("grid", "empty or invalid range '" + std::string(text) + "'");
        const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(round12(lo + static_cast<double>(i) * step));
        return out;
    }
    for (auto token : split(text, ','))
        out.push_back(to_real(token, text));
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_shape_list(std::string_view text)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto token : split(trim(text), ',')) {
        const auto x = token.find_first_of("xX");
        if (x == std::string_view::npos)
            throw_domain("shapes", "expected NHxNV, got '" + std::string(token) + "'");
        out.emplace_back(to_size(trim(token.substr(0, x)), text), to_size(trim(token.substr(x + 1)), text));
    }
    return out;
}

std::size_t default_parallelism()
{
    if (const char* env = std::getenv("CORRBOUND_THREADS")) {
        std::size_t value = 0;
        const std::string_view s(env);
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec == std::errc() && ptr == s.data() + s.size() && value > 0)
            return value;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace corrbound
