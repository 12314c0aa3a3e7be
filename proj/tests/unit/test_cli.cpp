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
#include "corrbound/error.hpp"

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace corrbound;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch()
{
    auto dir = fs::temp_directory_path() / "corrbound_cli_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("spectrum prints eigenvalues largest first", "[cli]")
{
    auto r = invoke({"spectrum", "--n", "2", "--a", "0.5"});
    CHECK(r.code == 0);
    CHECK(r.out == "1.5 0.5\n");

    r = invoke({"spectrum", "--n", "3", "--a", "0.5", "--method", "transcendental"});
    CHECK(r.code == 0);
    CHECK(r.out == "1.84307033082 0.75 0.406929669183\n");

    r = invoke({"spectrum", "--n", "2", "--a", "0.5", "--theta", "1", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"eigenvalues\":[") != std::string::npos);
}

TEST_CASE("bounds prints key=value lines", "[cli]")
{
    const auto r = invoke({"bounds", "--n", "4", "--a", "0.5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("upper_new=2.625\n") != std::string::npos);
    CHECK(r.out.find("lower_new=2.0625\n") != std::string::npos);
    CHECK(r.out.find("min_upper_new=0.4375\n") != std::string::npos);
    CHECK(r.out.find("gap=0.5625\n") != std::string::npos);
    CHECK(r.out.find("cond_upper=7.875\n") != std::string::npos);
    CHECK(r.out.find("lambda_max=") != std::string::npos);

    const auto nt = invoke({"bounds", "--n", "4", "--a", "0.5", "--no-truth"});
    CHECK(nt.out.find("lambda_max=") == std::string::npos);
}

TEST_CASE("usage errors exit 1 and name the flag", "[cli]")
{
    auto r = invoke({"bounds", "--n", "4", "--a", "1.2"});
    CHECK(r.code == 1);
    CHECK(r.err.find("--a") != std::string::npos);

    r = invoke({"bounds", "--n", "1", "--a", "0.3"});
    CHECK(r.code == 1);
    CHECK(r.err.find("--n") != std::string::npos);

    r = invoke({"spectrum", "--n", "3", "--a", "0.5", "--method", "qr"});
    CHECK(r.code == 1);

    r = invoke({});
    CHECK(r.code == 1);

    r = invoke({"frobnicate"});
    CHECK(r.code == 1);

    r = invoke({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sweep") != std::string::npos);
}

TEST_CASE("bounds near a = 1 is a range failure", "[cli]")
{
    const auto r = invoke({"bounds", "--n", "4", "--a", "0.9999999999", "--no-truth"});
    CHECK(r.code == 2);
    CHECK(r.err.find("range") != std::string::npos);
}

TEST_CASE("upa and verify", "[cli]")
{
    auto r = invoke({"upa", "--nh", "2", "--nv", "2", "--ah", "0.5", "--av", "0.5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("upper_new=2.25\n") != std::string::npos);
    CHECK(r.out.find("lambda_max=2.25\n") != std::string::npos);

    r = invoke({"verify", "--n-max", "12", "--a-grid", "0.2,0.7", "--threads", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("checked 22 points, 0 violations\n", 0) == 0);

    r = invoke({"verify", "--n-max", "12", "--a-grid", "0.2,1.7"});
    CHECK(r.code == 1);
}

TEST_CASE("sweep writes files, flags override config", "[cli][sweep]")
{
    const auto dir = scratch();
    {
        std::ofstream cfg(dir / "run.cfg");
        cfg << "# small figure\nmode = ula-min\nn_values = 2:6\na-values = 0.3,0.6\ncsv = "
            << (dir / "from_config.csv").string() << "\n";
    }
    auto r = invoke({"sweep", "--config", (dir / "run.cfg").string(), "--csv", (dir / "flag.csv").string(), "--svg",
                     (dir / "flag.svg").string()});
    CHECK(r.code == 0);
    CHECK(fs::exists(dir / "flag.csv"));
    CHECK(fs::exists(dir / "flag.svg"));
    CHECK_FALSE(fs::exists(dir / "from_config.csv"));
    CHECK(r.out.find("rows=10\n") != std::string::npos);

    std::ifstream in(dir / "flag.csv");
    std::string header;
    std::getline(in, header);
    CHECK(header.rfind("n,a,lambda_max", 0) == 0);

    // No output paths: CSV on stdout.
    r = invoke({"sweep", "--mode", "upa-max", "--shapes", "2x2,2x4"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n_h,n_v,a_h,a_v", 0) == 0);
    fs::remove_all(dir);
}

TEST_CASE("sweep usage errors never write output", "[cli][sweep]")
{
    const auto dir = scratch();
    auto r = invoke({"sweep", "--mode", "ula-max", "--a-values", "0.3,1.5", "--csv", (dir / "x.csv").string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("a-values") != std::string::npos);
    CHECK_FALSE(fs::exists(dir / "x.csv"));

    r = invoke({"sweep", "--csv", (dir / "x.csv").string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("--mode") != std::string::npos);

    {
        std::ofstream cfg(dir / "bad.cfg");
        cfg << "mode = ula-max\ncolour = blue\n";
    }
    r = invoke({"sweep", "--config", (dir / "bad.cfg").string(), "--csv", (dir / "x.csv").string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("colour") != std::string::npos);

    r = invoke({"sweep", "--config", (dir / "nope.cfg").string()});
    CHECK(r.code == 1);

    r = invoke({"sweep", "--mode", "ula-max", "--threads", "0"});
    CHECK(r.code == 1);
    CHECK_FALSE(fs::exists(dir / "x.csv"));
    fs::remove_all(dir);
}

TEST_CASE("config text parser", "[cli][config]")
{
    const auto m = cli::parse_config_text("# c\n\n mode = verify  # trailing\nn_values=2:8\nsvg = \"out file.svg\"\n");
    CHECK(m.size() == 3);
    CHECK(m.at("mode") == "verify");
    CHECK(m.at("n-values") == "2:8");
    CHECK(m.at("svg") == "out file.svg");
    CHECK_THROWS_AS(cli::parse_config_text("mode verify\n"), Error);
    CHECK_THROWS_AS(cli::parse_config_text("mode = a\nmode = b\n"), Error);
    CHECK_THROWS_AS(cli::parse_config_text("n_values = 1\nn-values = 2\n"), Error);
    CHECK_THROWS_AS(cli::parse_config_text(" = 3\n"), Error);
}
