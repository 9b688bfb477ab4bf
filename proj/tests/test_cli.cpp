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

#include <clocale>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "qcorr");
    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = qcorr::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string &csv) {
    std::vector<std::string> lines;
    std::istringstream in(csv);
    for (std::string line; std::getline(in, line);)
        if (!line.empty() && line[0] != '#') lines.push_back(line);
    return lines;
}

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> cells;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) cells.push_back(cell);
    return cells;
}

std::string column(const std::string &csv, const std::string &name, std::size_t row = 0) {
    const auto lines = data_lines(csv);
    const auto header = split(lines.at(0));
    const auto cells = split(lines.at(row + 1));
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return cells.at(i);
    return "<missing>";
}

}  // namespace

TEST_CASE("point examples") {
    auto r = run_cli({"point", "--d", "0", "--u", "0.5"});
    CHECK(r.code == 0);
    CHECK(column(r.out, "c_wootters") == "1");
    CHECK(column(r.out, "f_horodecki") == "1");
    CHECK(column(r.out, "d_xstate") == "1");
    CHECK(column(r.out, "n") == "1");

    r = run_cli({"point", "--d", "0.5", "--u", "0.5"});
    CHECK(column(r.out, "c_closed") == "0.25");
    CHECK(column(r.out, "f_closed") == "0.625");
    CHECK(column(r.out, "fstar_upper") == "0.625");
    CHECK(std::stod(column(r.out, "c_abs_diff")) < 1e-12);

    r = run_cli({"point", "--d", "0.6", "--u", "0.1"});
    CHECK(column(r.out, "esd") == "true");
    CHECK(column(r.out, "c_closed") == "0");
}

TEST_CASE("csv layout") {
    const auto r = run_cli({"point", "--d", "0.3", "--u", "0.7", "--phi", "1.5"});
    std::istringstream in(r.out);
    std::string l1, l2, l3;
    std::getline(in, l1);
    std::getline(in, l2);
    std::getline(in, l3);
    CHECK(l1 == "# command: point");
    CHECK(l2.rfind("# parameters: d=0.3 u=0.7 phi=1.5", 0) == 0);
    CHECK(l3 == std::string("# version: ") + qcorr::cli::kVersion);
    const auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(split(lines[0]).size() == split(lines[1]).size());
    // 10 significant digits.
    CHECK(column(r.out, "c_initial") == "0.916515139");
    CHECK(column(r.out, "f_closed") == "0.7577802986");
}

TEST_CASE("json mirrors the report fields") {
    const auto r = run_cli({"point", "--d", "0.5", "--u", "0.5", "--format", "json", "--no-refine"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "point");
    const std::vector<std::string> keys = {"d",         "u",           "phi",         "c_initial", "c_closed", "c_wootters",
                                           "n",         "f_closed",    "f_horodecki", "f_brute",   "fstar_upper",
                                           "fstar_tight", "d_xstate",  "d_brute",     "esd",       "theorem_branch"};
    CHECK(doc["report"].size() == keys.size());
    for (const auto &k : keys) CHECK(doc["report"].contains(k));
    CHECK(doc["report"]["c_closed"].get<double>() == doctest::Approx(0.25));
    CHECK(doc["report"]["theorem_branch"] == "sigma_x");
    CHECK(doc["discrepancy"]["c_abs_diff"].get<double>() < 1e-12);
}

TEST_CASE("exit codes") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"bogus"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);

    auto r = run_cli({"point", "--d", "1.5", "--u", "0.5"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--d") != std::string::npos);

    r = run_cli({"point", "--d", "0.5"});
    CHECK(r.code == 2);
    CHECK(r.err.find("u:") != std::string::npos);

    r = run_cli({"point", "--d", "0.5", "--u", "0.5", "--phi", "6.3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--phi") != std::string::npos);

    r = run_cli({"figure2", "--u-step", "0.3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("u-step") != std::string::npos);

    r = run_cli({"optimize", "--d", "0"});
    CHECK(r.code == 2);
    CHECK(r.err.find("d:") != std::string::npos);

    r = run_cli({"sweep", "--d-list", "0.5,1.2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("d-list") != std::string::npos);

    CHECK(run_cli({"point", "--d", "0.5", "--u", "0.5", "--format", "xml"}).code == 2);
    CHECK(run_cli({"optimize", "--measure", "entropy"}).code == 2);
    CHECK(run_cli({"point", "--d", "0.5", "--u", "0.5", "--tol", "-1"}).code == 2);

    r = run_cli({"figure1", "--out", "/nonexistent-dir/figure1.csv"});
    CHECK(r.code == 3);
    CHECK(r.err.find("/nonexistent-dir/figure1.csv") != std::string::npos);
}

TEST_CASE("--out writes the same bytes as stdout") {
    const auto path = (std::filesystem::temp_directory_path() / "qcorr_test_figure1.csv").string();
    const auto to_file = run_cli({"figure1", "--d-list", "0.5", "--out", path});
    REQUIRE(to_file.code == 0);
    CHECK(to_file.out.empty());
    std::ifstream in(path, std::ios::binary);
    const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(bytes == run_cli({"figure1", "--d-list", "0.5"}).out);
    std::filesystem::remove(path);
}

TEST_CASE("figure1 examples") {
    const auto r = run_cli({"figure1"});
    REQUIRE(r.code == 0);
    const auto lines = data_lines(r.out);
    CHECK(lines[0] == "d,c_initial,c_residual_u_high");
    CHECK(lines.size() == 1 + 4 * 201);
    for (const auto &line : lines) {
        const auto cells = split(line);
        if (cells[0] == "0.5" && cells[1] == "0.895") CHECK(std::stod(cells[2]) == doctest::Approx(0.3090).epsilon(1e-3));
        if (cells[1] == "0") CHECK(cells[2] == "0");
        if (cells[0] == "0.5" && cells[1] == "1") CHECK(std::stod(cells[2]) == doctest::Approx(0.25).epsilon(1e-12));
    }
}

TEST_CASE("figure2 examples") {
    const auto r = run_cli({"figure2", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    const auto &rows = doc["rows"];
    CHECK(rows.size() == 4 * 201);
    CHECK(rows[0]["d"].get<double>() == 0.8);
    for (const auto &row : rows)
        if (row["u"] == 0.0 || row["u"] == 1.0) {
            CHECK(row["concurrence"].get<double>() == 0.0);
            CHECK(std::abs(row["discord"].get<double>()) < 1e-12);
        }
}

TEST_CASE("optimize output") {
    const auto r = run_cli({"optimize", "--d", "0.5", "--measure", "concurrence"});
    REQUIRE(r.code == 0);
    CHECK(std::stod(column(r.out, "u_star")) == doctest::Approx(0.7236068).epsilon(1e-7));
    CHECK(std::stod(column(r.out, "window_hi")) == doctest::Approx(0.9).epsilon(1e-7));

    const auto d = run_cli({"optimize", "--d", "0.5", "--measure", "discord"});
    CHECK(column(d.out, "u_m_analytic").empty());
}

TEST_CASE("sweep output") {
    const auto r = run_cli({"sweep", "--d-list", "0.2,0.7", "--u-step", "0.25", "--no-refine", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["reports"].size() == 10);
    CHECK(doc["summaries"].size() == 2);
    CHECK(doc["summaries"][0]["concurrence_window"]["hi"].get<double>() ==
          doctest::Approx(0.5 + 0.2 / 1.04).epsilon(1e-7));
}

TEST_CASE("verify passes, honours --tol and detects the sign fault") {
    auto r = run_cli({"verify"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify: PASS") != std::string::npos);
    CHECK(r.out.find("concurrence") != std::string::npos);

    r = run_cli({"verify", "--fault", "det-sign"});
    CHECK(r.code == 1);
    CHECK(r.out.find("fef              max_discrepancy=5.000e-01 tol=1.0e-10 FAIL") != std::string::npos);
    CHECK(r.out.find("concurrence      max_discrepancy") != std::string::npos);

    r = run_cli({"verify", "--tol", "1e-15"});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL at (d=") != std::string::npos);

    r = run_cli({"verify", "--format", "json", "--no-refine"});
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["passed"] == true);
    CHECK(doc["suites"].size() == 11);
}

TEST_CASE("outputs do not depend on the C locale") {
    const auto before = run_cli({"figure1", "--d-list", "0.35"}).out;
    if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8") != nullptr) {
        CHECK(run_cli({"figure1", "--d-list", "0.35"}).out == before);
        std::setlocale(LC_NUMERIC, "C");
    }
    CHECK(before.find("0.35,0.5,") != std::string::npos);
}
