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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qcorr/analysis.hpp"

namespace qcorr::cli {

inline constexpr const char *kVersion = "0.1.0";

enum class Command { point, sweep, optimize, figure1, figure2, verify };
enum class Format { csv, json };
enum class Fault { none, det_sign };

struct RunConfig {
    Command command = Command::point;
    std::optional<double> d, u;
    double phi = 0.0;
    std::vector<double> d_list;
    std::optional<double> u_step;
    std::optional<Measure> measure;
    std::string output_path;
    Format format = Format::csv;
    double tol = 1e-8;
    bool tol_given = false;
    bool grid_refine = true;
    Fault fault = Fault::none;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verify_failed = 1;
inline constexpr int bad_arguments = 2;
inline constexpr int io_error = 3;
}  // namespace exit_code

/// Parses argv (argv[0] is the program name), runs the command and writes the
/// result to `out` or to --out. Diagnostics go to `err`. Returns the exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Each command renders its full output into a string; nothing is written
/// until the computation has finished.
std::string render_point(const RunConfig &cfg);
std::string render_sweep(const RunConfig &cfg);
std::string render_optimize(const RunConfig &cfg);
std::string render_figure1(const RunConfig &cfg);
std::string render_figure2(const RunConfig &cfg);

struct SuiteResult {
    std::string name;
    double max_discrepancy = 0.0;
    double tolerance = 0.0;
    bool passed = true;
    /// Worst (d, u, phi) seen; meaningful when the suite walks the family.
    double d = 0.0, u = 0.0, phi = 0.0;
};

std::vector<SuiteResult> run_verify_suites(const RunConfig &cfg);
std::string render_verify(const std::vector<SuiteResult> &suites);

}  // namespace qcorr::cli
