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

// Built-in invariant suite: validity of constructed and propagated
// transforms, agreement of the two propagation engines, the Fock oracle, the
// classical limit of linear walks and the two-path excess-noise identity.

#include <string>
#include <vector>

namespace dgqw {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double threshold = 0.0;
    bool passed = false;
    double seconds = 0.0;
};

struct VerifyOptions {
    /// Adds `perturbation` to V(0, 0) of every transform in the validation
    /// checks. Used as a negative control.
    bool inject_fault = false;
    double perturbation = 1e-3;
    unsigned long long seed = 20260101;
};

std::vector<CheckResult> run_verify(const VerifyOptions &options = {});

}  // namespace dgqw
