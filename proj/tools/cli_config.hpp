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

#pragma once

#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dgqw/complex_matrix.hpp"
#include "dgqw/mode_layout.hpp"
#include "dgqw/walk.hpp"

namespace dgqw::cli {

/// Malformed or inconsistent configuration (exit code 1).
class ConfigError : public std::runtime_error {
   public:
    explicit ConfigError(const std::string &what) : std::runtime_error(what) {}
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumerical = 2;

struct CoinConfig {
    /// "pdc", "pdc-limit", "bs" or "composite".
    std::string kind = "pdc";
    std::optional<double> xi;
    std::optional<double> theta;
    /// Explicit complex parameters; override xi / theta when present.
    std::optional<complex> mu, nu, tau, rho;
    std::vector<CoinConfig> parts;
};

struct InputEntry {
    long long x = 0;
    Coin c = Coin::Plus;
    double re = 0.0;
    double im = 0.0;
};

struct RunConfig {
    std::size_t d = 11;
    CoinConfig coin;
    std::vector<double> t_values;
    std::vector<InputEntry> input;
    /// "spectral", "dense" or "auto".
    std::string engine = "auto";
    /// Empty selects the command's default columns.
    std::vector<std::string> outputs;
    /// "csv" or "json".
    std::string format = "csv";
    /// Use |beta|^2 instead of photon means for the intensity distribution.
    bool coherent_only = false;
    /// Add the classical random-walk column to the distribution output.
    bool random_walk_reference = false;
};

/// Reads the RunConfig fields present in `j` into `base`. Errors name the
/// offending field.
RunConfig parse_config(const nlohmann::json &j, RunConfig base = {});
RunConfig parse_config_text(const std::string &text, RunConfig base = {});

nlohmann::json to_json(const RunConfig &config);
nlohmann::json to_json(const CoinConfig &coin);

/// Checks ranges and cross-field consistency.
void check_config(const RunConfig &config);

CoinSpec build_coin(const CoinConfig &coin);
ComplexVector build_input(const RunConfig &config);

/// "0,1,2.5" or "start:stop[:step]" (inclusive).
std::vector<double> parse_t_list(const std::string &text);
/// "x,c,re,im;x,c,re,im;...", c is + or -.
std::vector<InputEntry> parse_input_list(const std::string &text);

}  // namespace dgqw::cli
