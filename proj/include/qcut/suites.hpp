// Copyright 2026 The qcut Authors
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

// Named verification suites. Each suite runs a fixed, seeded set of checks with
// tolerances pinned here, and reports one row per configuration in the CSV
// layout n_or_k,mode,L,rank,fidelity,wall_ms (blank when a column does not apply).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcut/decompose.hpp"
#include "qcut/json_io.hpp"

namespace qcut {

struct SuiteCheck {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
};

struct SuiteRow {
    std::string n_or_k;
    std::string mode;
    std::optional<std::uint64_t> terms;  // the L column
    std::optional<int> rank;
    std::optional<double> fidelity;
    double wall_ms = 0.0;
};

struct SuiteResult {
    std::string suite;
    std::vector<SuiteCheck> checks;
    std::vector<SuiteRow> rows;

    bool overall() const;
    std::vector<const SuiteCheck *> failures() const;

    /// |measured - expected| <= tolerance
    void near(std::string name, double measured, double expected, double tolerance);
    /// measured <= bound
    void at_most(std::string name, double measured, double bound);
    /// measured >= bound
    void at_least(std::string name, double measured, double bound);
    void holds(std::string name, bool ok);
};

struct SuiteParams {
    std::optional<int> n;
    int k_max = 6;
    std::string gate = "cz";
    std::optional<CutMode> mode;  // unset: both modes where a suite supports both
    std::uint64_t seed = 20240611;
    std::optional<int> instances;
    std::string corpus_dir = "corpus";
    std::uint64_t budget = kDefaultMaxTerms;
};

std::vector<std::string> suite_names();

/// Throws std::invalid_argument for an unknown suite or out-of-range sizes.
SuiteResult run_suite(const std::string &name, const SuiteParams &params);

SuiteResult gate_cut_suite(const SuiteParams &params);
SuiteResult scaling_suite(const SuiteParams &params);
SuiteResult pipeline_suite(const SuiteParams &params);
SuiteResult gadget_suite(const SuiteParams &params);
SuiteResult swap_network_suite(const SuiteParams &params);
SuiteResult lemma1_suite(const SuiteParams &params);
SuiteResult thm3_suite(const SuiteParams &params);
SuiteResult fidelity_suite(const SuiteParams &params);
SuiteResult unital_nogo_suite(const SuiteParams &params);
SuiteResult cost_suite(const SuiteParams &params);

/// Re-derives every expectation listed in <dir>/manifest.json. A missing file is a ParseError.
SuiteResult corpus_check(const std::string &dir);

/// wall_ms is written as 0 unless `timing` is set, so reports are byte-stable.
std::string suite_csv(const SuiteResult &r, bool timing);
json suite_json(const SuiteResult &r, bool timing);

}  // namespace qcut
