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

#include "cli.hpp"

#include "corrbound/bounds.hpp"
#include "corrbound/eigensolve.hpp"
#include "corrbound/error.hpp"
#include "corrbound/format.hpp"
#include "corrbound/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace corrbound::cli {

namespace {

using nlohmann::json;

// Flag validation failure; reported as a usage error before any work starts.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string normalize_key(std::string key)
{
    std::replace(key.begin(), key.end(), '_', '-');
    return key;
}

void require_magnitude(const std::string& flag, double a)
{
    if (!std::isfinite(a) || a < 0.0 || a >= 1.0)
        throw UsageError(flag + " must lie in [0, 1), got " + format_significant(a));
}

void require_min(const std::string& flag, std::size_t n, std::size_t min)
{
    if (n < min)
        throw UsageError(flag + " must be at least " + std::to_string(min) + ", got " + std::to_string(n));
}

std::string kv(const std::string& key, double v)
{
    return key + "=" + format_significant(v) + "\n";
}

// ---------------------------------------------------------------------------

struct SpectrumArgs {
    std::size_t n = 0;
    double a = 0.0;
    double theta = 0.0;
    std::string method = "oracle";
    bool json = false;
};

int run_spectrum(const SpectrumArgs& args, std::ostream& out)
{
    require_magnitude("--a", args.a);
    if (args.method == "transcendental") {
        require_min("--n", args.n, 2);
    } else {
        require_min("--n", args.n, 1);
    }
    if (!std::isfinite(args.theta))
        throw UsageError("--theta must be finite");

    Spectrum spectrum;
    std::optional<PhaseRoots> roots;
    if (args.method == "transcendental") {
        // Eigenvalues do not depend on the phase of r.
        auto result = transcendental_eigenvalues(args.n, args.a);
        spectrum = std::move(result.spectrum);
        roots = std::move(result.roots);
    } else {
        spectrum = hermitian_eigenvalues(build_exponential(args.n, CorrelationCoefficient::make(args.a, args.theta)));
    }

    if (args.json) {
        json j{{"n", args.n}, {"a", args.a}, {"theta", args.theta}, {"method", args.method},
               {"eigenvalues", spectrum.values}};
        if (roots)
            j["phis"] = roots->phis;
        out << j.dump() << "\n";
        return kOk;
    }
    for (std::size_t i = 0; i < spectrum.size(); ++i)
        out << (i ? " " : "") << format_significant(spectrum.values[i]);
    out << "\n";
    return kOk;
}

// ---------------------------------------------------------------------------

struct BoundsArgs {
    std::size_t n = 0;
    double a = 0.0;
    bool json = false;
    bool no_truth = false;
};

int run_bounds(const BoundsArgs& args, std::ostream& out)
{
    require_min("--n", args.n, 2);
    require_magnitude("--a", args.a);
    const BoundReport r = bound_report(args.n, args.a, !args.no_truth);

    if (args.json) {
        json j{{"n", r.n},
               {"a", r.a},
               {"upper_prev", r.max_upper_prev},
               {"upper_new", r.max_upper_new},
               {"lower_new", r.max_lower_new},
               {"min_lower_prev", r.min_lower_prev},
               {"min_upper_new", r.min_upper_new},
               {"gap", r.gap},
               {"cond_lower", r.condition.lower},
               {"cond_upper", r.condition.upper}};
        if (r.lambda_max_true)
            j["lambda_max"] = *r.lambda_max_true;
        if (r.lambda_min_true)
            j["lambda_min"] = *r.lambda_min_true;
        out << j.dump() << "\n";
        return kOk;
    }
    out << "n=" << r.n << "\n"
        << kv("a", r.a) << kv("upper_prev", r.max_upper_prev) << kv("upper_new", r.max_upper_new)
        << kv("lower_new", r.max_lower_new) << kv("min_lower_prev", r.min_lower_prev)
        << kv("min_upper_new", r.min_upper_new) << kv("gap", r.gap) << kv("cond_lower", r.condition.lower)
        << kv("cond_upper", r.condition.upper);
    if (r.lambda_max_true)
        out << kv("lambda_max", *r.lambda_max_true) << kv("lambda_min", *r.lambda_min_true);
    return kOk;
}

// ---------------------------------------------------------------------------

struct UpaArgs {
    std::size_t nh = 0;
    std::size_t nv = 0;
    double ah = 0.0;
    double av = 0.0;
    bool json = false;
    bool no_truth = false;
};

int run_upa(const UpaArgs& args, std::ostream& out)
{
    require_min("--nh", args.nh, 2);
    require_min("--nv", args.nv, 2);
    require_magnitude("--ah", args.ah);
    require_magnitude("--av", args.av);
    const UpaBoundReport r = upa_bounds(UpaSpec{args.nh, args.ah, args.nv, args.av}, !args.no_truth);

    if (args.json) {
        json j{{"n_h", args.nh},
               {"n_v", args.nv},
               {"a_h", args.ah},
               {"a_v", args.av},
               {"upper_prev", r.max_upper_prev},
               {"upper_new", r.max_upper_new},
               {"lower_new", r.max_lower_new},
               {"min_lower_prev", r.min_lower_prev},
               {"min_upper_new", r.min_upper_new},
               {"gap", r.gap}};
        if (r.lambda_max_true)
            j["lambda_max"] = *r.lambda_max_true;
        if (r.lambda_min_true)
            j["lambda_min"] = *r.lambda_min_true;
        out << j.dump() << "\n";
        return kOk;
    }
    out << "n_h=" << args.nh << "\nn_v=" << args.nv << "\n"
        << kv("a_h", args.ah) << kv("a_v", args.av) << kv("upper_prev", r.max_upper_prev)
        << kv("upper_new", r.max_upper_new) << kv("lower_new", r.max_lower_new)
        << kv("min_lower_prev", r.min_lower_prev) << kv("min_upper_new", r.min_upper_new) << kv("gap", r.gap);
    if (r.lambda_max_true)
        out << kv("lambda_max", *r.lambda_max_true) << kv("lambda_min", *r.lambda_min_true);
    return kOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::size_t n_max = 0;
    std::string a_grid = "0.05:0.95:0.05";
    double tol = 1e-9;
    std::size_t threads = 0;
    bool json = false;
};

int run_verify(const VerifyArgs& args, std::ostream& out)
{
    require_min("--n-max", args.n_max, 2);
    std::vector<double> grid;
    try {
        grid = parse_real_grid(args.a_grid);
    } catch (const Error& e) {
        throw UsageError(std::string("--a-grid: ") + e.what());
    }
    for (double a : grid)
        require_magnitude("--a-grid", a);
    if (!(args.tol >= 0.0))
        throw UsageError("--tol must be non-negative");

    const std::size_t threads = args.threads ? args.threads : default_parallelism();
    const VerificationSummary s = verify_campaign(args.n_max, grid, args.tol, threads);

    if (args.json) {
        json j{{"points_checked", s.points_checked},
               {"violations", s.violations},
               {"max_slack_upper_new", s.max_slack_upper_new},
               {"max_slack_upper_prev", s.max_slack_upper_prev},
               {"max_slack_lower_new", s.max_slack_lower_new},
               {"max_slack_min_lower", s.max_slack_min_lower},
               {"max_slack_min_upper", s.max_slack_min_upper},
               {"max_method_deviation", s.max_method_deviation}};
        out << j.dump() << "\n";
    } else {
        out << "checked " << s.points_checked << " points, " << s.violations.size() << " violations\n"
            << kv("max_slack_upper_new", s.max_slack_upper_new) << kv("max_slack_upper_prev", s.max_slack_upper_prev)
            << kv("max_slack_lower_new", s.max_slack_lower_new) << kv("max_slack_min_lower", s.max_slack_min_lower)
            << kv("max_slack_min_upper", s.max_slack_min_upper)
            << kv("max_method_deviation", s.max_method_deviation);
        for (const auto& v : s.violations)
            out << "violation: " << v << "\n";
    }
    return s.ok() ? kOk : kFailure;
}

// ---------------------------------------------------------------------------

// Sweep flags are captured as text so config-file values and flags merge
// through one conversion path.
struct SweepArgs {
    std::string config_path;
    std::map<std::string, std::string> text; // key -> value, keyed by flag name
    std::map<std::string, CLI::Option*> options;
    bool json = false;
};

const std::vector<std::string> kSweepKeys = {"mode", "n-values", "a-values", "shapes", "a-h", "a-v",
                                             "csv",  "svg",      "threads",  "tol",    "timing"};

double to_double(const std::string& flag, const std::string& v)
{
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size())
            throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw UsageError("--" + flag + ": cannot parse '" + v + "' as a number");
    }
}

bool to_bool(const std::string& flag, const std::string& v)
{
    if (v == "true" || v == "1" || v == "yes" || v == "on")
        return true;
    if (v == "false" || v == "0" || v == "no" || v == "off")
        return false;
    throw UsageError("--" + flag + ": expected true/false, got '" + v + "'");
}

SweepConfig build_sweep_config(SweepArgs& args)
{
    if (!args.config_path.empty()) {
        std::ifstream in(args.config_path);
        if (!in)
            throw UsageError("--config: cannot read '" + args.config_path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        std::map<std::string, std::string> file;
        try {
            file = parse_config_text(buf.str());
        } catch (const Error& e) {
            throw UsageError(std::string("--config: ") + e.what());
        }
        for (const auto& [key, value] : file) {
            if (std::find(kSweepKeys.begin(), kSweepKeys.end(), key) == kSweepKeys.end())
                throw UsageError("--config: unknown key '" + key + "'");
            if (args.options.at(key)->count() == 0) // flags win
                args.text[key] = value;
        }
    }

    const auto has = [&](const std::string& k) { return args.text.count(k) && !args.text.at(k).empty(); };
    if (!has("mode"))
        throw UsageError("--mode is required (flag or config key)");

    SweepConfig c;
    try {
        c = SweepConfig::defaults(parse_sweep_mode(args.text.at("mode")));
    } catch (const Error&) {
        throw UsageError("--mode: expected ula-max, ula-min, upa-max or verify, got '" + args.text.at("mode") + "'");
    }
    const auto grid = [&](const std::string& key, auto parser) {
        try {
            return parser(args.text.at(key));
        } catch (const Error& e) {
            throw UsageError("--" + key + ": " + e.what());
        }
    };
    if (has("n-values"))
        c.n_values = grid("n-values", parse_int_grid);
    if (has("a-values"))
        c.a_values = grid("a-values", parse_real_grid);
    if (has("shapes"))
        c.upa_shapes = grid("shapes", parse_shape_list);
    if (has("a-h"))
        c.a_h = to_double("a-h", args.text.at("a-h"));
    if (has("a-v"))
        c.a_v = to_double("a-v", args.text.at("a-v"));
    if (has("csv"))
        c.csv_path = args.text.at("csv");
    if (has("svg"))
        c.svg_path = args.text.at("svg");
    if (has("tol"))
        c.tolerance = to_double("tol", args.text.at("tol"));
    if (has("timing"))
        c.record_timing = to_bool("timing", args.text.at("timing"));
    c.threads = default_parallelism();
    if (has("threads")) {
        const double t = to_double("threads", args.text.at("threads"));
        if (!(t >= 1.0) || t != std::floor(t))
            throw UsageError("--threads must be a positive integer");
        c.threads = static_cast<std::size_t>(t);
    }
    try {
        c.validate();
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    return c;
}

int run_sweep_command(SweepArgs& args, std::ostream& out)
{
    const SweepConfig config = build_sweep_config(args);
    const std::vector<SweepRow> rows = run_sweep(config);
    const std::size_t violations =
        static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.violation.empty(); }));

    if (config.csv_path.empty() && config.svg_path.empty()) {
        out << render_csv(rows, config.mode);
    } else {
        if (!config.csv_path.empty())
            emit_csv(rows, config.mode, config.csv_path);
        if (!config.svg_path.empty())
            emit_svg(rows, config.mode, config.svg_path);
        if (args.json) {
            json j{{"mode", std::string(to_string(config.mode))},
                   {"rows", rows.size()},
                   {"violations", violations},
                   {"csv", config.csv_path.string()},
                   {"svg", config.svg_path.string()}};
            out << j.dump() << "\n";
        } else {
            out << "mode=" << to_string(config.mode) << "\nrows=" << rows.size() << "\nviolations=" << violations
                << "\n";
            if (!config.csv_path.empty())
                out << "csv=" << config.csv_path.string() << "\n";
            if (!config.svg_path.empty())
                out << "svg=" << config.svg_path.string() << "\n";
        }
    }
    if (config.mode == SweepMode::verify && violations > 0)
        return kFailure;
    return kOk;
}

} // namespace

std::map<std::string, std::string> parse_config_text(const std::string& text)
{
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    const auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            return std::string();
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw_domain("config", "line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = normalize_key(trim(line.substr(0, eq)));
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        if (key.empty())
            throw_domain("config", "line " + std::to_string(lineno) + ": empty key");
        if (!out.emplace(key, value).second)
            throw_domain("config", "line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exponential-model correlation matrices: spectra, eigenvalue bounds, sweeps", "corrbound"};
    app.require_subcommand(1);

    SpectrumArgs spectrum;
    auto* spec_cmd = app.add_subcommand("spectrum", "Print all eigenvalues, largest first");
    spec_cmd->add_option("--n", spectrum.n, "Matrix dimension")->required();
    spec_cmd->add_option("--a", spectrum.a, "Correlation magnitude in [0, 1)")->required();
    spec_cmd->add_option("--theta", spectrum.theta, "Correlation phase in radians (oracle only)");
    spec_cmd->add_option("--method", spectrum.method, "oracle | transcendental")
        ->check(CLI::IsMember({"oracle", "transcendental"}));
    spec_cmd->add_flag("--json", spectrum.json, "Machine-readable output");

    BoundsArgs bounds;
    auto* bounds_cmd = app.add_subcommand("bounds", "Print every closed-form bound for (n, a)");
    bounds_cmd->add_option("--n", bounds.n, "Matrix dimension (>= 2)")->required();
    bounds_cmd->add_option("--a", bounds.a, "Correlation magnitude in [0, 1)")->required();
    bounds_cmd->add_flag("--no-truth", bounds.no_truth, "Skip the dense eigensolve");
    bounds_cmd->add_flag("--json", bounds.json, "Machine-readable output");

    UpaArgs upa;
    auto* upa_cmd = app.add_subcommand("upa", "Composed bounds for a planar array R_h (x) R_v");
    upa_cmd->add_option("--nh", upa.nh, "Horizontal antennas (>= 2)")->required();
    upa_cmd->add_option("--nv", upa.nv, "Vertical antennas (>= 2)")->required();
    upa_cmd->add_option("--ah", upa.ah, "Horizontal magnitude")->required();
    upa_cmd->add_option("--av", upa.av, "Vertical magnitude")->required();
    upa_cmd->add_flag("--no-truth", upa.no_truth, "Skip the dense eigensolve");
    upa_cmd->add_flag("--json", upa.json, "Machine-readable output");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check every bound against the oracle on a grid");
    verify_cmd->add_option("--n-max", verify.n_max, "Largest n (checks 2..n-max)")->required();
    verify_cmd->add_option("--a-grid", verify.a_grid, "lo:hi:step or comma list")->capture_default_str();
    verify_cmd->add_option("--tol", verify.tol, "Violation tolerance")->capture_default_str();
    verify_cmd->add_option("--threads", verify.threads, "Workers (default: CORRBOUND_THREADS or all cores)");
    verify_cmd->add_flag("--json", verify.json, "Machine-readable output");

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a parameter sweep and write CSV/SVG");
    sweep_cmd->add_option("--config", sweep.config_path, "Flat key = value file; flags override it");
    for (const auto& key : kSweepKeys) {
        if (key == "timing") {
            sweep.options[key] = sweep_cmd->add_option("--timing", sweep.text[key], "Record oracle wall time (true/false)");
            continue;
        }
        sweep.options[key] = sweep_cmd->add_option("--" + key, sweep.text[key]);
    }
    sweep.options["mode"]->description("ula-max | ula-min | upa-max | verify");
    sweep.options["n-values"]->description("n grid, e.g. 2:64");
    sweep.options["a-values"]->description("a grid, e.g. 0.3,0.6,0.9");
    sweep.options["shapes"]->description("UPA shapes, e.g. 2x2,4x8");
    sweep.options["a-h"]->description("UPA horizontal magnitude (default 0.6)");
    sweep.options["a-v"]->description("UPA vertical magnitude (default 0.9)");
    sweep.options["csv"]->description("CSV output path (stdout if neither csv nor svg given)");
    sweep.options["svg"]->description("SVG output path");
    sweep.options["threads"]->description("Workers (default: CORRBOUND_THREADS or all cores)");
    sweep.options["tol"]->description("Violation tolerance (default 1e-9)");
    sweep_cmd->add_flag("--json", sweep.json, "Machine-readable summary");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kOk;
        }
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (spec_cmd->parsed())
            return run_spectrum(spectrum, out);
        if (bounds_cmd->parsed())
            return run_bounds(bounds, out);
        if (upa_cmd->parsed())
            return run_upa(upa, out);
        if (verify_cmd->parsed())
            return run_verify(verify, out);
        if (sweep_cmd->parsed())
            return run_sweep_command(sweep, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}

} // namespace corrbound::cli
