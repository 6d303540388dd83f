// Copyright 2026 The dgqw Authors
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

#include "cli_commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "dgqw/errors.hpp"
#include "dgqw/kernels.hpp"
#include "dgqw/mode_layout.hpp"
#include "dgqw/observables.hpp"
#include "dgqw/propagator.hpp"
#include "dgqw/verify.hpp"

namespace dgqw::cli {
namespace {

using nlohmann::json;

inline constexpr double kValidationTolerance = 1e-8;

const std::vector<std::string> kWalkColumns = {"squeeze_db", "squeeze_db_coin", "gmin",          "m_mineig",
                                               "mprime_mineig", "excess_noise", "amplification", "circ_var"};
const std::vector<std::string> kWalkModeColumns = {"beta_re", "beta_im", "n_mean"};
const std::vector<std::string> kDistributionColumns = {"p", "n_mean", "p_random"};

bool contains(const std::vector<std::string> &list, const std::string &s) {
    return std::find(list.begin(), list.end(), s) != list.end();
}

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    if (v == 0.0) {
        return "0";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

json number_or_null(double v) { return std::isfinite(v) ? json(v == 0.0 ? 0.0 : v) : json(nullptr); }

void write_csv(const std::vector<std::string> &columns, const std::vector<json> &rows, std::ostream &out) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out << (i ? "," : "") << columns[i];
    }
    out << '\n';
    for (const json &row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            out << (i ? "," : "");
            const auto it = row.find(columns[i]);
            if (it != row.end() && it->is_number()) {
                out << format_double(it->get<double>());
            }
        }
        out << '\n';
    }
}

void write_json(const json &config, const json &metadata, std::vector<json> rows, std::ostream &out) {
    json doc;
    doc["config"] = config;
    doc["metadata"] = metadata;
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

struct EngineChoice {
    Engine engine;
    std::string reason;
};

bool is_integer(double t) { return std::floor(t) == t; }

EngineChoice choose_engine(const RunConfig &config, const CoinSpec &coin) {
    const bool supported = spectral_supported(coin);
    const bool all_integer = std::all_of(config.t_values.begin(), config.t_values.end(), is_integer);
    EngineChoice choice;
    if (config.engine == "spectral") {
        if (!supported) {
            throw ConfigError("engine: spectral engine does not cover composite coins");
        }
        choice = {Engine::Spectral, "requested"};
    } else if (config.engine == "dense") {
        choice = {Engine::Dense, "requested"};
    } else if (supported && coin.is_real()) {
        choice = {Engine::Spectral, "auto: real-parameter single coin"};
    } else {
        choice = {Engine::Dense, supported ? "auto: complex coin parameters" : "auto: composite coin"};
    }
    if (choice.engine == Engine::Dense && !all_integer) {
        throw ConfigError(supported ? "t_values: non-integer times need the spectral engine (engine \"spectral\")"
                                    : "t_values: non-integer times need the spectral engine, which does not cover "
                                      "composite coins");
    }
    return choice;
}

std::vector<double> sorted_times(const RunConfig &config) {
    std::vector<double> t = config.t_values;
    std::stable_sort(t.begin(), t.end());
    return t;
}

// Propagates to each requested time in ascending order. The dense engine
// reuses the previous power.
template <typename Visit>
void sweep(const RunConfig &config, const CoinSpec &coin, Engine engine, Visit &&visit) {
    const std::vector<double> times = sorted_times(config);
    BogoliubovTransform step = single_step(config.d, coin);
    BogoliubovTransform power = BogoliubovTransform::identity(2 * config.d);
    std::size_t reached = 0;
    for (double t : times) {
        BogoliubovTransform current = BogoliubovTransform::identity(2 * config.d);
        if (engine == Engine::Spectral) {
            current = spectral_propagator(config.d, coin, t);
        } else {
            const auto target = static_cast<std::size_t>(t);
            for (; reached < target; ++reached) {
                power = compose(step, power);
            }
            current = power;
        }
        const ValidityReport report = validate(current, {kValidationTolerance, ToleranceMode::Relative});
        if (!report.passed) {
            throw NumericalError("propagated transform at t = " + format_double(t) +
                                 " fails validation (residuals " + format_double(report.symmetry_residual) + ", " +
                                 format_double(report.unitarity_residual) + ")");
        }
        visit(t, current);
    }
}

json metadata(const EngineChoice &choice) {
    return {
        {"engine", choice.engine == Engine::Spectral ? "spectral" : "dense"},
        {"engine_reason", choice.reason},
        {"kernels", std::string(kernels::isa_name(kernels::active().isa))},
        {"tolerances",
         {{"validation", kValidationTolerance},
          {"validation_mode", "relative"},
          {"excess_noise_cross_check", 1e-8},
          {"radicand_clip", kRadicandClip}}},
        {"version", kVersion},
    };
}

std::vector<std::string> walk_columns(const RunConfig &config) {
    if (config.outputs.empty()) {
        return kWalkColumns;
    }
    for (const std::string &name : config.outputs) {
        if (contains(kWalkModeColumns, name)) {
            if (config.format != "json") {
                throw ConfigError("outputs: per-mode column \"" + name + "\" is only available with format json");
            }
        } else if (!contains(kWalkColumns, name)) {
            throw ConfigError("outputs: unknown walk column \"" + name + "\"");
        }
    }
    return config.outputs;
}

}  // namespace

void cmd_walk(const RunConfig &config, std::ostream &out) {
    check_config(config);
    const CoinSpec coin = build_coin(config.coin);
    const std::vector<std::string> columns = walk_columns(config);
    const EngineChoice choice = choose_engine(config, coin);
    const ModeLayout layout(config.d);
    const ComplexVector alpha = build_input(config);
    const IntensitySource source = config.coherent_only ? IntensitySource::CoherentOnly : IntensitySource::PhotonMeans;

    std::vector<json> rows;
    sweep(config, coin, choice.engine, [&](double t, const BogoliubovTransform &transform) {
        const ObservableReport r = evaluate(transform, alpha, layout, t, source);
        json row;
        row["t"] = t;
        for (const std::string &name : columns) {
            if (name == "squeeze_db") {
                row[name] = number_or_null(r.covariance.squeezing_db);
            } else if (name == "squeeze_db_coin") {
                row[name] = number_or_null(r.coin_squeezing_db);
            } else if (name == "gmin") {
                row[name] = number_or_null(r.g_min);
            } else if (name == "m_mineig") {
                row[name] = number_or_null(r.moment_min_eigenvalue);
            } else if (name == "mprime_mineig") {
                row[name] = number_or_null(r.coin_traced_min_eigenvalue);
            } else if (name == "excess_noise") {
                row[name] = number_or_null(r.excess_noise);
            } else if (name == "amplification") {
                row[name] = r.amplification ? number_or_null(*r.amplification) : json(nullptr);
            } else if (name == "circ_var") {
                row[name] = r.circular_variance ? number_or_null(*r.circular_variance) : json(nullptr);
            } else if (name == "beta_re") {
                row[name] = std::vector<double>(r.beta.real().begin(), r.beta.real().end());
            } else if (name == "beta_im") {
                row[name] = std::vector<double>(r.beta.imag().begin(), r.beta.imag().end());
            } else if (name == "n_mean") {
                row[name] = std::vector<double>(r.photon_means.begin(), r.photon_means.end());
            }
        }
        rows.push_back(std::move(row));
    });

    if (config.format == "json") {
        write_json(to_json(config), metadata(choice), std::move(rows), out);
    } else {
        std::vector<std::string> header = {"t"};
        header.insert(header.end(), columns.begin(), columns.end());
        write_csv(header, rows, out);
    }
}

void cmd_distribution(const RunConfig &config, std::ostream &out) {
    check_config(config);
    const CoinSpec coin = build_coin(config.coin);
    std::vector<std::string> columns = config.outputs;
    if (columns.empty()) {
        columns = {"p", "n_mean"};
        if (config.random_walk_reference) {
            columns.push_back("p_random");
        }
    }
    for (const std::string &name : columns) {
        if (!contains(kDistributionColumns, name)) {
            throw ConfigError("outputs: unknown distribution column \"" + name + "\"");
        }
    }
    const bool want_random = contains(columns, "p_random");
    if (want_random && !std::all_of(config.t_values.begin(), config.t_values.end(), is_integer)) {
        throw ConfigError("t_values: the random-walk reference needs integer times");
    }
    const EngineChoice choice = choose_engine(config, coin);
    const ModeLayout layout(config.d);
    const ComplexVector alpha = build_input(config);
    const IntensitySource source = config.coherent_only ? IntensitySource::CoherentOnly : IntensitySource::PhotonMeans;
    const auto d = static_cast<Eigen::Index>(config.d);

    std::vector<json> rows;
    sweep(config, coin, choice.engine, [&](double t, const BogoliubovTransform &transform) {
        const RealVector p = intensity_distribution(transform, alpha, layout, source);
        const RealVector n = photon_means(transform, alpha);
        RealVector random;
        if (want_random) {
            random = classical_random_walk(config.d, static_cast<std::size_t>(t), 0.5);
        }
        for (Eigen::Index x = 0; x < d; ++x) {
            json row;
            row["t"] = t;
            row["x"] = static_cast<double>(x);
            for (const std::string &name : columns) {
                if (name == "p") {
                    row[name] = number_or_null(p(x));
                } else if (name == "n_mean") {
                    row[name] = number_or_null(n(x) + n(x + d));
                } else if (name == "p_random") {
                    row[name] = number_or_null(random(x));
                }
            }
            rows.push_back(std::move(row));
        }
    });

    if (config.format == "json") {
        write_json(to_json(config), metadata(choice), std::move(rows), out);
    } else {
        std::vector<std::string> header = {"t", "x"};
        header.insert(header.end(), columns.begin(), columns.end());
        write_csv(header, rows, out);
    }
}

void cmd_coin(const CoinRange &range, std::ostream &out) {
    if (range.format != "csv" && range.format != "json") {
        throw ConfigError("format: expected csv or json, got \"" + range.format + "\"");
    }
    const std::string param = range.kind == CoinKind::Pdc ? "xi" : "theta";
    const std::vector<std::string> columns = {param, "ratio", "squeeze_db", "gmin", "m_mineig"};
    std::vector<json> rows;
    for (double value : range.values) {
        if (!std::isfinite(value)) {
            throw ConfigError(param + ": values must be finite");
        }
        const CoinSpec spec = coin_from_parameters(range.kind, value);
        const BogoliubovTransform coin = coin_transform(1, spec);
        const ComplexVector vacuum = ComplexVector::Zero(2);
        json row;
        row[param] = value;
        row["ratio"] = number_or_null(splitting_ratio(spec));
        row["squeeze_db"] = number_or_null(covariance_matrix(coin).squeezing_db);
        row["gmin"] = number_or_null(entanglement_bound(coin));
        row["m_mineig"] = number_or_null(symmetric_eigenvalues(photon_moment_matrix(coin, vacuum))(0));
        rows.push_back(std::move(row));
    }
    if (range.format == "json") {
        json config = {{"kind", range.kind == CoinKind::Pdc ? "pdc" : "bs"}, {"values", range.values}};
        json meta = {{"version", kVersion}, {"kernels", std::string(kernels::isa_name(kernels::active().isa))}};
        write_json(config, meta, std::move(rows), out);
    } else {
        write_csv(columns, rows, out);
    }
}

int cmd_verify(bool inject_fault, const std::string &format, std::ostream &out) {
    VerifyOptions options;
    options.inject_fault = inject_fault;
    const std::vector<CheckResult> results = run_verify(options);
    bool all = true;
    double total = 0.0;
    std::vector<json> rows;
    for (const CheckResult &r : results) {
        all = all && r.passed;
        total += r.seconds;
        if (format == "json") {
            rows.push_back({{"name", r.name},
                            {"residual", number_or_null(r.residual)},
                            {"threshold", r.threshold},
                            {"passed", r.passed},
                            {"seconds", r.seconds}});
        } else {
            char line[256];
            std::snprintf(line, sizeof line, "%-4s %-24s residual=%-12.3e threshold=%-8.1e %.3fs\n",
                          r.passed ? "PASS" : "FAIL", r.name.c_str(), r.residual, r.threshold, r.seconds);
            out << line;
        }
    }
    if (format == "json") {
        write_json({{"inject_fault", inject_fault}}, {{"version", kVersion}, {"passed", all}}, std::move(rows), out);
    } else {
        char line[128];
        std::snprintf(line, sizeof line, "%s: %zu checks, %.3fs\n", all ? "all passed" : "FAILED", results.size(),
                      total);
        out << line;
    }
    return all ? kExitOk : kExitNumerical;
}

namespace {

struct WalkFlags {
    std::string config_path;
    std::optional<std::size_t> d;
    std::optional<std::string> coin;
    std::optional<double> xi;
    std::optional<double> theta;
    std::optional<std::string> parts;
    std::optional<std::string> t;
    std::optional<std::string> input;
    std::optional<std::string> engine;
    std::optional<std::string> outputs;
    std::optional<std::string> format;
    bool coherent_only = false;
    bool reference = false;
};

void add_walk_flags(CLI::App *cmd, WalkFlags &f) {
    cmd->add_option("--config", f.config_path, "JSON RunConfig file; flags override its fields");
    cmd->add_option("--d", f.d, "number of positions");
    cmd->add_option("--coin", f.coin, "pdc, pdc-limit, bs or composite");
    cmd->add_option("--xi", f.xi, "squeezing parameter of a pdc coin");
    cmd->add_option("--theta", f.theta, "rotation angle of a bs coin");
    cmd->add_option("--parts", f.parts, "composite parts in application order, e.g. pdc:0.88,bs:0.785");
    cmd->add_option("--t", f.t, "times: list 0,1,2 or range start:stop[:step]");
    cmd->add_option("--input", f.input, "coherent amplitudes x,c,re,im;...");
    cmd->add_option("--engine", f.engine, "spectral, dense or auto");
    cmd->add_option("--outputs", f.outputs, "comma-separated column names");
    cmd->add_option("--format", f.format, "csv or json");
    cmd->add_flag("--coherent-only", f.coherent_only, "intensity from |beta|^2 only");
    cmd->add_flag("--reference", f.reference, "add the classical random-walk column");
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        out.push_back(item);
    }
    return out;
}

CoinConfig parse_part(const std::string &text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw ConfigError("parts: expected kind:value, got \"" + text + "\"");
    }
    CoinConfig c;
    c.kind = text.substr(0, colon);
    double value = 0.0;
    try {
        value = std::stod(text.substr(colon + 1));
    } catch (const std::exception &) {
        throw ConfigError("parts: cannot parse value in \"" + text + "\"");
    }
    if (c.kind == "bs") {
        c.theta = value;
    } else {
        c.xi = value;
    }
    return c;
}

RunConfig resolve(const WalkFlags &f) {
    RunConfig config;
    if (!f.config_path.empty()) {
        std::ifstream in(f.config_path);
        if (!in) {
            throw ConfigError("config: cannot open " + f.config_path);
        }
        std::stringstream buf;
        buf << in.rdbuf();
        config = parse_config_text(buf.str());
    }
    if (f.d) {
        config.d = *f.d;
    }
    if (f.coin) {
        config.coin = CoinConfig{};
        config.coin.kind = *f.coin;
    }
    if (f.xi) {
        config.coin.xi = *f.xi;
    }
    if (f.theta) {
        config.coin.theta = *f.theta;
    }
    if (f.parts) {
        config.coin.kind = "composite";
        config.coin.parts.clear();
        for (const std::string &p : split(*f.parts, ',')) {
            config.coin.parts.push_back(parse_part(p));
        }
    }
    if (f.t) {
        config.t_values = parse_t_list(*f.t);
    }
    if (f.input) {
        config.input = parse_input_list(*f.input);
    }
    if (f.engine) {
        config.engine = *f.engine;
    }
    if (f.outputs) {
        config.outputs = f.outputs->empty() ? std::vector<std::string>{} : split(*f.outputs, ',');
    }
    if (f.format) {
        config.format = *f.format;
    }
    config.coherent_only = config.coherent_only || f.coherent_only;
    config.random_walk_reference = config.random_walk_reference || f.reference;
    return config;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Gaussian quantum walks driven by coherent light", "dgqw"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    WalkFlags walk_flags;
    CLI::App *walk = app.add_subcommand("walk", "observable time series of a walk");
    add_walk_flags(walk, walk_flags);

    WalkFlags dist_flags;
    CLI::App *dist = app.add_subcommand("distribution", "position distribution per time step");
    add_walk_flags(dist, dist_flags);

    std::string coin_kind = "pdc";
    double from = 0.0, to = 3.0;
    std::size_t count = 31;
    std::optional<std::string> values;
    std::string coin_format = "csv";
    CLI::App *coin = app.add_subcommand("coin", "single-coin properties over a parameter range");
    coin->add_option("--kind", coin_kind, "pdc (xi) or bs (theta)");
    coin->add_option("--from", from, "first parameter value");
    coin->add_option("--to", to, "last parameter value");
    coin->add_option("--count", count, "number of evenly spaced values");
    coin->add_option("--values", values, "explicit comma-separated values");
    coin->add_option("--format", coin_format, "csv or json");

    bool inject_fault = false;
    std::string verify_format = "text";
    CLI::App *verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_flag("--inject-fault", inject_fault, "perturb V in the validation checks");
    verify->add_option("--format", verify_format, "text or json");

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion &) {
        out << kVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        if (walk->parsed()) {
            cmd_walk(resolve(walk_flags), out);
        } else if (dist->parsed()) {
            cmd_distribution(resolve(dist_flags), out);
        } else if (coin->parsed()) {
            CoinRange range;
            if (coin_kind == "pdc") {
                range.kind = CoinKind::Pdc;
            } else if (coin_kind == "bs") {
                range.kind = CoinKind::Bs;
            } else {
                throw ConfigError("kind: expected pdc or bs, got \"" + coin_kind + "\"");
            }
            range.format = coin_format;
            if (values) {
                for (const std::string &v : split(*values, ',')) {
                    try {
                        range.values.push_back(std::stod(v));
                    } catch (const std::exception &) {
                        throw ConfigError("values: cannot parse \"" + v + "\"");
                    }
                }
            } else {
                if (count == 0 || !std::isfinite(from) || !std::isfinite(to) || to < from) {
                    throw ConfigError("range: need count >= 1 and finite from <= to");
                }
                for (std::size_t i = 0; i < count; ++i) {
                    range.values.push_back(count == 1 ? from
                                                      : from + (to - from) * static_cast<double>(i) /
                                                                   static_cast<double>(count - 1));
                }
            }
            cmd_coin(range, out);
        } else if (verify->parsed()) {
            if (verify_format != "text" && verify_format != "json") {
                throw ConfigError("format: expected text or json");
            }
            return cmd_verify(inject_fault, verify_format, out);
        }
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const NumericalError &e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::invalid_argument &e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitOk;
}

}  // namespace dgqw::cli
