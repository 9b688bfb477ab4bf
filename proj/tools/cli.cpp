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

#include "cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <ostream>
#include <sstream>

#include "qcorr/errors.hpp"

namespace qcorr::cli {

namespace {

using json = nlohmann::ordered_json;

const std::vector<double> kFigureStrengths = {0.2, 0.4, 0.6, 0.8};
const std::vector<double> kPanelStrengths = {0.8, 0.6, 0.4, 0.2};
constexpr double kFigureStep = 0.005;
constexpr double kSweepStep = 0.05;

/// 10 significant digits, independent of the global locale.
std::string num(double x) {
    if (x == 0.0) x = 0.0;  // drop the sign of -0
    return fmt::format("{:.10g}", x);
}

std::string boolean(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<double> &xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + num(xs[i]);
    return s;
}

std::string_view command_name(Command c) {
    switch (c) {
        case Command::point: return "point";
        case Command::sweep: return "sweep";
        case Command::optimize: return "optimize";
        case Command::figure1: return "figure1";
        case Command::figure2: return "figure2";
        case Command::verify: return "verify";
    }
    return "?";
}

/// Parameters recorded in the output header, in a fixed order.
std::vector<std::pair<std::string, std::string>> parameters(const RunConfig &cfg) {
    std::vector<std::pair<std::string, std::string>> p;
    if (cfg.d) p.emplace_back("d", num(*cfg.d));
    if (cfg.u) p.emplace_back("u", num(*cfg.u));
    p.emplace_back("phi", num(cfg.phi));
    if (!cfg.d_list.empty()) p.emplace_back("d_list", join(cfg.d_list));
    if (cfg.u_step) p.emplace_back("u_step", num(*cfg.u_step));
    if (cfg.measure) p.emplace_back("measure", std::string(to_string(*cfg.measure)));
    p.emplace_back("tol", num(cfg.tol));
    p.emplace_back("refine", boolean(cfg.grid_refine));
    return p;
}

std::string csv_preamble(const RunConfig &cfg, std::string_view header) {
    std::string s = fmt::format("# command: {}\n# parameters:", command_name(cfg.command));
    for (const auto &[k, v] : parameters(cfg)) s += fmt::format(" {}={}", k, v);
    s += fmt::format("\n# version: {}\n{}\n", kVersion, header);
    return s;
}

json json_preamble(const RunConfig &cfg) {
    json params = json::object();
    for (const auto &[k, v] : parameters(cfg)) params[k] = v;
    return json{{"command", command_name(cfg.command)}, {"parameters", params}, {"version", kVersion}};
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

// CorrelationReport field order; JSON keys are these names verbatim.
constexpr const char *kReportHeader =
    "d,u,phi,c_initial,c_closed,c_wootters,n,f_closed,f_horodecki,f_brute,fstar_upper,fstar_tight,"
    "d_xstate,d_brute,esd,theorem_branch,c_abs_diff,f_abs_diff,f_brute_abs_diff,fstar_abs_diff,d_abs_diff";

struct Discrepancies {
    double c, f, f_brute, fstar, discord;
};

Discrepancies discrepancies(const CorrelationReport &r) {
    return {std::abs(r.c_closed - r.c_wootters), std::abs(r.f_closed - r.f_horodecki),
            std::abs(r.f_horodecki - r.f_brute), std::abs(r.fstar_upper - std::max(r.f_horodecki, 0.5)),
            std::abs(r.d_xstate - r.d_brute)};
}

std::string csv_row(const CorrelationReport &r) {
    const auto e = discrepancies(r);
    return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", num(r.d), num(r.u), num(r.phi),
                       num(r.c_initial), num(r.c_closed), num(r.c_wootters), num(r.n), num(r.f_closed),
                       num(r.f_horodecki), num(r.f_brute), num(r.fstar_upper), boolean(r.fstar_tight), num(r.d_xstate),
                       num(r.d_brute), boolean(r.esd), to_string(r.theorem_branch), num(e.c), num(e.f), num(e.f_brute),
                       num(e.fstar), num(e.discord));
}

json report_json(const CorrelationReport &r) {
    return json{{"d", r.d},
                {"u", r.u},
                {"phi", r.phi},
                {"c_initial", r.c_initial},
                {"c_closed", r.c_closed},
                {"c_wootters", r.c_wootters},
                {"n", r.n},
                {"f_closed", r.f_closed},
                {"f_horodecki", r.f_horodecki},
                {"f_brute", r.f_brute},
                {"fstar_upper", r.fstar_upper},
                {"fstar_tight", r.fstar_tight},
                {"d_xstate", r.d_xstate},
                {"d_brute", r.d_brute},
                {"esd", r.esd},
                {"theorem_branch", to_string(r.theorem_branch)}};
}

json discrepancy_json(const CorrelationReport &r) {
    const auto e = discrepancies(r);
    return json{{"c_abs_diff", e.c},
                {"f_abs_diff", e.f},
                {"f_brute_abs_diff", e.f_brute},
                {"fstar_abs_diff", e.fstar},
                {"d_abs_diff", e.discord}};
}

json optional_json(const std::optional<double> &x) { return x ? json(*x) : json(nullptr); }

json extremum_json(const std::optional<ExtremumRecord> &r) {
    if (!r) return nullptr;
    return json{{"measure", to_string(r->measure)},
                {"d", r->d},
                {"u_star", r->u_star},
                {"value", r->value},
                {"u_m_analytic", optional_json(r->u_m_analytic)}};
}

json window_json(const std::optional<Window> &w) {
    if (!w) return nullptr;
    return json{{"lo", w->lo}, {"hi", w->hi}};
}

std::vector<double> strengths(const RunConfig &cfg, const std::vector<double> &fallback) {
    if (!cfg.d_list.empty()) return cfg.d_list;
    if (cfg.d) return {*cfg.d};
    return fallback;
}

std::vector<Measure> measures(const RunConfig &cfg) {
    if (cfg.measure) return {*cfg.measure};
    return {Measure::concurrence, Measure::fef, Measure::discord};
}

struct BadArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const RunConfig &cfg, const std::string &text, std::ostream &out) {
    if (cfg.output_path.empty()) {
        out << text << std::flush;
        return;
    }
    std::ofstream file(cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open output file " + cfg.output_path);
    file << text;
    file.close();
    if (!file) throw IoError("failed writing output file " + cfg.output_path);
}

void require(bool ok, const std::string &message) {
    if (!ok) throw BadArgument(message);
}

void validate(const RunConfig &cfg) {
    if (cfg.command == Command::point) {
        require(cfg.d.has_value(), "d: required for point");
        require(cfg.u.has_value(), "u: required for point");
    }
    if (cfg.command == Command::optimize) {
        for (double d : strengths(cfg, kFigureStrengths))
            require(d > 0.0 && d < 1.0, "d: optimize needs 0 < d < 1, got " + num(d));
    }
    for (double d : cfg.d_list) require(d >= 0.0 && d <= 1.0, "d-list: value " + num(d) + " outside [0, 1]");
    if (cfg.u_step) {
        try {
            unit_grid(*cfg.u_step);
        } catch (const OutOfRange &e) {
            throw BadArgument(std::string("u-step: ") + e.what());
        }
    }
    require(cfg.tol > 0.0, "tol: must be positive");
}

}  // namespace

std::string render_point(const RunConfig &cfg) {
    const auto r = correlation_report(*cfg.d, *cfg.u, cfg.phi, {.refine = cfg.grid_refine});
    if (cfg.format == Format::json) {
        json doc = json_preamble(cfg);
        doc["report"] = report_json(r);
        doc["discrepancy"] = discrepancy_json(r);
        return dump(doc);
    }
    return csv_preamble(cfg, kReportHeader) + csv_row(r);
}

std::string render_sweep(const RunConfig &cfg) {
    const auto ds = strengths(cfg, kFigureStrengths);
    const auto table = sweep(ds, unit_grid(cfg.u_step.value_or(kSweepStep)), cfg.phi, {.refine = cfg.grid_refine});
    if (cfg.format == Format::json) {
        json doc = json_preamble(cfg);
        json reports = json::array(), diffs = json::array(), summaries = json::array();
        for (const auto &r : table.reports) {
            reports.push_back(report_json(r));
            diffs.push_back(discrepancy_json(r));
        }
        for (const auto &s : table.summaries)
            summaries.push_back(json{{"d", s.d},
                                     {"u_esd_boundary", s.u_esd_boundary},
                                     {"concurrence_peak", extremum_json(s.concurrence_peak)},
                                     {"fef_peak", extremum_json(s.fef_peak)},
                                     {"discord_peak", extremum_json(s.discord_peak)},
                                     {"concurrence_window", window_json(s.concurrence_window)},
                                     {"discord_window", window_json(s.discord_window)}});
        doc["reports"] = reports;
        doc["discrepancies"] = diffs;
        doc["summaries"] = summaries;
        return dump(doc);
    }
    std::string s = csv_preamble(cfg, kReportHeader);
    for (const auto &r : table.reports) s += csv_row(r);
    return s;
}

std::string render_optimize(const RunConfig &cfg) {
    json rows = json::array();
    std::string s = csv_preamble(cfg, "measure,d,u_star,value,u_m_analytic,window_lo,window_hi");
    for (double d : strengths(cfg, kFigureStrengths))
        for (Measure m : measures(cfg)) {
            const auto rec = optimize_measure(d, m, cfg.tol);
            const auto w = advantage_window_numeric(d, m, cfg.tol);
            s += fmt::format("{},{},{},{},{},{},{}\n", to_string(m), num(d), num(rec.u_star), num(rec.value),
                             rec.u_m_analytic ? num(*rec.u_m_analytic) : "", num(w.lo), num(w.hi));
            rows.push_back(json{{"measure", to_string(m)},
                                {"d", d},
                                {"u_star", rec.u_star},
                                {"value", rec.value},
                                {"u_m_analytic", optional_json(rec.u_m_analytic)},
                                {"window", window_json(w)}});
        }
    if (cfg.format == Format::json) {
        json doc = json_preamble(cfg);
        doc["extrema"] = rows;
        return dump(doc);
    }
    return s;
}

std::string render_figure1(const RunConfig &cfg) {
    json rows = json::array();
    std::string s = csv_preamble(cfg, "d,c_initial,c_residual_u_high");
    const auto grid = unit_grid(cfg.u_step.value_or(kFigureStep));
    for (double d : strengths(cfg, kFigureStrengths))
        for (double c0 : grid) {
            const double c = reparametrized_concurrence(d, c0, WeightBranch::u_high);
            s += fmt::format("{},{},{}\n", num(d), num(c0), num(c));
            rows.push_back(json{{"d", d}, {"c_initial", c0}, {"c_residual_u_high", c}});
        }
    if (cfg.format == Format::json) {
        json doc = json_preamble(cfg);
        doc["rows"] = rows;
        return dump(doc);
    }
    return s;
}

std::string render_figure2(const RunConfig &cfg) {
    json rows = json::array();
    std::string s = csv_preamble(cfg, "d,u,concurrence,discord");
    const auto grid = unit_grid(cfg.u_step.value_or(kFigureStep));
    for (double d : strengths(cfg, kPanelStrengths))
        for (double u : grid) {
            const double c = measure_value(d, u, Measure::concurrence);
            const double q = measure_value(d, u, Measure::discord);
            s += fmt::format("{},{},{},{}\n", num(d), num(u), num(c), num(q));
            rows.push_back(json{{"d", d}, {"u", u}, {"concurrence", c}, {"discord", q}});
        }
    if (cfg.format == Format::json) {
        json doc = json_preamble(cfg);
        doc["rows"] = rows;
        return dump(doc);
    }
    return s;
}

std::string render_verify(const std::vector<SuiteResult> &suites) {
    std::string s;
    std::size_t passed = 0;
    for (const auto &r : suites) {
        s += fmt::format("{:<16} max_discrepancy={:.3e} tol={:.1e} {}", r.name, r.max_discrepancy, r.tolerance,
                         r.passed ? "PASS" : "FAIL");
        if (!r.passed) s += fmt::format(" at (d={}, u={}, phi={})", num(r.d), num(r.u), num(r.phi));
        s += "\n";
        passed += r.passed;
    }
    s += fmt::format("verify: {} ({}/{} suites passed)\n", passed == suites.size() ? "PASS" : "FAIL", passed,
                     suites.size());
    return s;
}

namespace {

std::string render_verify_json(const RunConfig &cfg, const std::vector<SuiteResult> &suites) {
    json doc = json_preamble(cfg);
    json arr = json::array();
    bool all = true;
    for (const auto &r : suites) {
        json j{{"name", r.name}, {"max_discrepancy", r.max_discrepancy}, {"tolerance", r.tolerance}, {"passed", r.passed}};
        if (!r.passed) j["worst"] = json{{"d", r.d}, {"u", r.u}, {"phi", r.phi}};
        arr.push_back(j);
        all = all && r.passed;
    }
    doc["suites"] = arr;
    doc["passed"] = all;
    return dump(doc);
}

void add_common(CLI::App *sub, RunConfig &cfg, std::string &format, std::string &measure,
                std::vector<double> &d_list) {
    sub->add_option("--d", cfg.d, "Damping strength in [0, 1]")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--u", cfg.u, "Weight of |00> in [0, 1]")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--phi", cfg.phi, "Relative phase in [0, 2pi)")
        ->check(CLI::Validator(
            [](std::string &s) -> std::string {
                double v = 0.0;
                if (!CLI::detail::lexical_cast(s, v)) return "'" + s + "' is not a number";
                return v >= 0.0 && v < 2.0 * std::numbers::pi ? "" : "value " + s + " outside [0, 2pi)";
            },
            "[0, 2pi)"));
    sub->add_option("--d-list", d_list, "Comma-separated damping strengths")->delimiter(',');
    sub->add_option("--u-step", cfg.u_step, "Grid step; 1/step must be an integer");
    sub->add_option("--measure", measure, "concurrence, fef or discord")
        ->check(CLI::IsMember({"concurrence", "fef", "discord"}));
    sub->add_option("--tol", cfg.tol, "Optimizer tolerance, or the tolerance of every verify suite");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.output_path, "Output file; stdout when absent");
    sub->add_flag("--no-refine{false}", cfg.grid_refine, "Skip local refinement in the brute-force searches");
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Correlations of damped two-qubit cat states", "qcorr"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    RunConfig cfg;
    std::string format = "csv", measure, fault = "none";
    std::vector<double> d_list;

    struct Entry {
        Command command;
        const char *name;
        const char *help;
    };
    const Entry entries[] = {
        {Command::point, "point", "All measures of one damped cat state"},
        {Command::sweep, "sweep", "All measures on a (d, u) grid"},
        {Command::optimize, "optimize", "Best input weight and advantage window per strength"},
        {Command::figure1, "figure1", "Residual concurrence against initial concurrence"},
        {Command::figure2, "figure2", "Concurrence and discord against the input weight"},
        {Command::verify, "verify", "Closed forms against numerical oracles"},
    };
    std::vector<std::pair<CLI::App *, Command>> subs;
    for (const auto &e : entries) {
        auto *sub = app.add_subcommand(e.name, e.help);
        add_common(sub, cfg, format, measure, d_list);
        if (e.command == Command::verify)
            sub->add_option("--fault", fault, "Inject a known defect: det-sign")->check(CLI::IsMember({"none", "det-sign"}));
        subs.emplace_back(sub, e.command);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        std::ostringstream o, x;
        const int code = app.exit(e, o, x);
        out << o.str();
        err << x.str();
        return code == 0 ? exit_code::ok : exit_code::bad_arguments;
    }

    for (const auto &[sub, command] : subs)
        if (sub->parsed()) {
            cfg.command = command;
            cfg.tol_given = sub->count("--tol") > 0;
        }
    cfg.d_list = d_list;
    cfg.format = format == "json" ? Format::json : Format::csv;
    if (!measure.empty()) cfg.measure = parse_measure(measure);
    cfg.fault = fault == "det-sign" ? Fault::det_sign : Fault::none;

    try {
        validate(cfg);
        std::string text;
        int code = exit_code::ok;
        switch (cfg.command) {
            case Command::point: text = render_point(cfg); break;
            case Command::sweep: text = render_sweep(cfg); break;
            case Command::optimize: text = render_optimize(cfg); break;
            case Command::figure1: text = render_figure1(cfg); break;
            case Command::figure2: text = render_figure2(cfg); break;
            case Command::verify: {
                const auto suites = run_verify_suites(cfg);
                text = cfg.format == Format::json ? render_verify_json(cfg, suites) : render_verify(suites);
                for (const auto &s : suites)
                    if (!s.passed) code = exit_code::verify_failed;
                break;
            }
        }
        write_output(cfg, text, out);
        return code;
    } catch (const BadArgument &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::bad_arguments;
    } catch (const OutOfRange &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::bad_arguments;
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::io_error;
    }
}

}  // namespace qcorr::cli
