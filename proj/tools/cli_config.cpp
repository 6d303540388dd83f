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

#include "cli_config.hpp"

#include <cmath>
#include <sstream>

#include "dgqw/mode_layout.hpp"

namespace dgqw::cli {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &field, const std::string &message) {
    throw ConfigError(field + ": " + message);
}

double get_number(const json &j, const std::string &field) {
    if (!j.is_number()) {
        fail(field, "expected a number");
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
        fail(field, "expected a finite number");
    }
    return v;
}

// A complex parameter is either a number or a [re, im] pair.
complex get_complex(const json &j, const std::string &field) {
    if (j.is_number()) {
        return get_number(j, field);
    }
    if (j.is_array() && j.size() == 2) {
        return {get_number(j[0], field + "[0]"), get_number(j[1], field + "[1]")};
    }
    fail(field, "expected a number or a [re, im] pair");
}

std::string get_string(const json &j, const std::string &field) {
    if (!j.is_string()) {
        fail(field, "expected a string");
    }
    return j.get<std::string>();
}

Coin parse_coin_value(const std::string &s, const std::string &field) {
    if (s == "+") {
        return Coin::Plus;
    }
    if (s == "-") {
        return Coin::Minus;
    }
    fail(field, "expected \"+\" or \"-\", got \"" + s + "\"");
}

CoinConfig parse_coin(const json &j, const std::string &field) {
    if (!j.is_object()) {
        fail(field, "expected an object");
    }
    CoinConfig c;
    for (const auto &[key, value] : j.items()) {
        const std::string sub = field + "." + key;
        if (key == "kind") {
            c.kind = get_string(value, sub);
        } else if (key == "xi") {
            c.xi = get_number(value, sub);
        } else if (key == "theta") {
            c.theta = get_number(value, sub);
        } else if (key == "mu") {
            c.mu = get_complex(value, sub);
        } else if (key == "nu") {
            c.nu = get_complex(value, sub);
        } else if (key == "tau") {
            c.tau = get_complex(value, sub);
        } else if (key == "rho") {
            c.rho = get_complex(value, sub);
        } else if (key == "parts") {
            if (!value.is_array()) {
                fail(sub, "expected an array of coins");
            }
            for (std::size_t i = 0; i < value.size(); ++i) {
                c.parts.push_back(parse_coin(value[i], sub + "[" + std::to_string(i) + "]"));
            }
        } else {
            fail(sub, "unknown field");
        }
    }
    return c;
}

json complex_json(complex z) { return z.imag() == 0.0 ? json(z.real()) : json::array({z.real(), z.imag()}); }

CoinSpec build_coin_at(const CoinConfig &c, const std::string &field) {
    if (c.kind == "pdc" || c.kind == "pdc-limit") {
        if (c.mu || c.nu) {
            if (!(c.mu && c.nu)) {
                fail(field, "mu and nu must be given together");
            }
            return {PdcCoin{*c.mu, *c.nu}};
        }
        if (c.kind == "pdc-limit") {
            return coin_from_parameters(CoinKind::Pdc, c.xi.value_or(kLimitSqueezing));
        }
        if (!c.xi) {
            fail(field, "pdc coin needs xi (or mu and nu)");
        }
        return coin_from_parameters(CoinKind::Pdc, *c.xi);
    }
    if (c.kind == "bs") {
        if (c.tau || c.rho) {
            if (!(c.tau && c.rho)) {
                fail(field, "tau and rho must be given together");
            }
            return {BsCoin{*c.tau, *c.rho}};
        }
        if (!c.theta) {
            fail(field, "bs coin needs theta (or tau and rho)");
        }
        return coin_from_parameters(CoinKind::Bs, *c.theta);
    }
    if (c.kind == "composite") {
        if (c.parts.empty()) {
            fail(field, "composite coin needs a nonempty parts list");
        }
        CompositeCoin out;
        for (std::size_t i = 0; i < c.parts.size(); ++i) {
            out.parts.push_back(build_coin_at(c.parts[i], field + ".parts[" + std::to_string(i) + "]"));
        }
        return {out};
    }
    fail(field + ".kind", "expected pdc, pdc-limit, bs or composite, got \"" + c.kind + "\"");
}

}  // namespace

RunConfig parse_config(const json &j, RunConfig base) {
    if (!j.is_object()) {
        throw ConfigError("config: expected a JSON object");
    }
    for (const auto &[key, value] : j.items()) {
        if (key == "d") {
            if (!value.is_number_unsigned()) {
                fail(key, "expected a positive integer");
            }
            base.d = value.get<std::size_t>();
        } else if (key == "coin") {
            base.coin = parse_coin(value, key);
        } else if (key == "t_values") {
            if (!value.is_array()) {
                fail(key, "expected an array of numbers");
            }
            base.t_values.clear();
            for (std::size_t i = 0; i < value.size(); ++i) {
                base.t_values.push_back(get_number(value[i], key + "[" + std::to_string(i) + "]"));
            }
        } else if (key == "input") {
            if (!value.is_array()) {
                fail(key, "expected an array of {x, c, re, im} entries");
            }
            base.input.clear();
            for (std::size_t i = 0; i < value.size(); ++i) {
                const std::string sub = key + "[" + std::to_string(i) + "]";
                const json &e = value[i];
                if (!e.is_object()) {
                    fail(sub, "expected an object");
                }
                InputEntry entry;
                for (const auto &[k, v] : e.items()) {
                    if (k == "x") {
                        if (!v.is_number_integer()) {
                            fail(sub + ".x", "expected an integer");
                        }
                        entry.x = v.get<long long>();
                    } else if (k == "c") {
                        entry.c = parse_coin_value(get_string(v, sub + ".c"), sub + ".c");
                    } else if (k == "re") {
                        entry.re = get_number(v, sub + ".re");
                    } else if (k == "im") {
                        entry.im = get_number(v, sub + ".im");
                    } else {
                        fail(sub + "." + k, "unknown field");
                    }
                }
                base.input.push_back(entry);
            }
        } else if (key == "engine") {
            base.engine = get_string(value, key);
        } else if (key == "outputs") {
            if (!value.is_array()) {
                fail(key, "expected an array of column names");
            }
            base.outputs.clear();
            for (std::size_t i = 0; i < value.size(); ++i) {
                base.outputs.push_back(get_string(value[i], key + "[" + std::to_string(i) + "]"));
            }
        } else if (key == "format") {
            base.format = get_string(value, key);
        } else if (key == "coherent_only") {
            if (!value.is_boolean()) {
                fail(key, "expected true or false");
            }
            base.coherent_only = value.get<bool>();
        } else if (key == "random_walk_reference") {
            if (!value.is_boolean()) {
                fail(key, "expected true or false");
            }
            base.random_walk_reference = value.get<bool>();
        } else {
            fail(key, "unknown field");
        }
    }
    return base;
}

RunConfig parse_config_text(const std::string &text, RunConfig base) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return parse_config(j, std::move(base));
}

json to_json(const CoinConfig &coin) {
    json j;
    j["kind"] = coin.kind;
    if (coin.xi) {
        j["xi"] = *coin.xi;
    }
    if (coin.theta) {
        j["theta"] = *coin.theta;
    }
    if (coin.mu) {
        j["mu"] = complex_json(*coin.mu);
    }
    if (coin.nu) {
        j["nu"] = complex_json(*coin.nu);
    }
    if (coin.tau) {
        j["tau"] = complex_json(*coin.tau);
    }
    if (coin.rho) {
        j["rho"] = complex_json(*coin.rho);
    }
    if (!coin.parts.empty()) {
        j["parts"] = json::array();
        for (const CoinConfig &p : coin.parts) {
            j["parts"].push_back(to_json(p));
        }
    }
    return j;
}

json to_json(const RunConfig &config) {
    json j;
    j["d"] = config.d;
    j["coin"] = to_json(config.coin);
    j["t_values"] = config.t_values;
    j["input"] = json::array();
    for (const InputEntry &e : config.input) {
        j["input"].push_back({{"x", e.x}, {"c", e.c == Coin::Plus ? "+" : "-"}, {"re", e.re}, {"im", e.im}});
    }
    j["engine"] = config.engine;
    j["outputs"] = config.outputs;
    j["format"] = config.format;
    j["coherent_only"] = config.coherent_only;
    j["random_walk_reference"] = config.random_walk_reference;
    return j;
}

void check_config(const RunConfig &config) {
    if (config.d < 2) {
        fail("d", "need at least 2 positions");
    }
    if (config.engine != "spectral" && config.engine != "dense" && config.engine != "auto") {
        fail("engine", "expected spectral, dense or auto, got \"" + config.engine + "\"");
    }
    if (config.format != "csv" && config.format != "json") {
        fail("format", "expected csv or json, got \"" + config.format + "\"");
    }
    for (std::size_t i = 0; i < config.t_values.size(); ++i) {
        if (!(config.t_values[i] >= 0.0)) {
            fail("t_values[" + std::to_string(i) + "]", "must be nonnegative");
        }
    }
    try {
        check_coin(build_coin(config.coin));
    } catch (const ConfigError &) {
        throw;
    } catch (const std::exception &e) {
        fail("coin", e.what());
    }
}

CoinSpec build_coin(const CoinConfig &coin) { return build_coin_at(coin, "coin"); }

ComplexVector build_input(const RunConfig &config) {
    const ModeLayout layout(config.d);
    ComplexVector alpha = ComplexVector::Zero(static_cast<Eigen::Index>(layout.modes()));
    for (const InputEntry &e : config.input) {
        alpha(static_cast<Eigen::Index>(layout.index_wrapped(e.x, e.c))) += complex(e.re, e.im);
    }
    return alpha;
}

std::vector<double> parse_t_list(const std::string &text) {
    std::vector<double> out;
    if (text.empty()) {
        return out;
    }
    auto number = [&](const std::string &s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != s.size() || s.empty() || !std::isfinite(v)) {
            fail("t", "cannot parse \"" + s + "\"");
        }
        return v;
    };
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> pieces;
        std::stringstream ss(text);
        std::string piece;
        while (std::getline(ss, piece, ':')) {
            pieces.push_back(piece);
        }
        if (pieces.size() < 2 || pieces.size() > 3) {
            fail("t", "range must be start:stop or start:stop:step");
        }
        const double start = number(pieces[0]);
        const double stop = number(pieces[1]);
        const double step = pieces.size() == 3 ? number(pieces[2]) : 1.0;
        if (!(step > 0.0) || stop < start) {
            fail("t", "range needs step > 0 and stop >= start");
        }
        // Index-based generation keeps grid points exact multiples of step.
        const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
        for (std::size_t i = 0; i < count; ++i) {
            out.push_back(start + static_cast<double>(i) * step);
        }
        return out;
    }
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        out.push_back(number(piece));
    }
    return out;
}

std::vector<InputEntry> parse_input_list(const std::string &text) {
    std::vector<InputEntry> out;
    std::stringstream ss(text);
    std::string item;
    std::size_t index = 0;
    while (std::getline(ss, item, ';')) {
        const std::string field = "input[" + std::to_string(index++) + "]";
        std::stringstream is(item);
        std::vector<std::string> parts;
        std::string part;
        while (std::getline(is, part, ',')) {
            parts.push_back(part);
        }
        if (parts.size() != 4) {
            fail(field, "expected x,c,re,im");
        }
        InputEntry e;
        try {
            std::size_t used = 0;
            e.x = std::stoll(parts[0], &used);
            if (used != parts[0].size()) {
                throw std::invalid_argument("x");
            }
            e.re = std::stod(parts[2]);
            e.im = std::stod(parts[3]);
        } catch (const std::exception &) {
            fail(field, "cannot parse \"" + item + "\"");
        }
        e.c = parse_coin_value(parts[1], field + ".c");
        out.push_back(e);
    }
    return out;
}

}  // namespace dgqw::cli
