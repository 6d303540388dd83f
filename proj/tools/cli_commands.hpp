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

#include <iosfwd>
#include <string>
#include <vector>

#include "cli_config.hpp"

namespace dgqw::cli {

inline constexpr const char *kVersion = "0.1.0";

/// Runs `walk` for a parsed config and writes CSV or JSON to `out`.
void cmd_walk(const RunConfig &config, std::ostream &out);
void cmd_distribution(const RunConfig &config, std::ostream &out);

struct CoinRange {
    CoinKind kind = CoinKind::Pdc;
    std::vector<double> values;
    std::string format = "csv";
};

void cmd_coin(const CoinRange &range, std::ostream &out);

/// Returns the exit code: 0 iff every check passed.
int cmd_verify(bool inject_fault, const std::string &format, std::ostream &out);

/// Full command line (args[0] is the program name). Returns the exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace dgqw::cli
