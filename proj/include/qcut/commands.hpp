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

// The command-line surface as plain functions, so the tool's main only parses
// arguments. Exit codes: 0 success, 1 a verification failed or the term budget
// was exceeded, 2 invalid input.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>

#include "qcut/decompose.hpp"

namespace qcut {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInvalid = 2;

struct GlobalOptions {
    std::uint64_t seed = 20240611;
    std::optional<double> tol;  // pipeline/simulate agreement tolerance; suites pin their own
    std::string out;            // file for single documents, directory for verify reports
    bool json = false;          // machine-readable stdout
    bool timing = false;        // record wall_ms in written reports (off keeps them byte-stable)
};

struct DecomposeOptions {
    std::string gate;         // named gate, e.g. "cz"
    std::string matrix_file;  // or a 4x4 matrix in JSON
    std::string mode = "schmidt";
};

struct GadgetizeOptions {
    std::string circuit;
    std::string variant = "v1";
};

struct CutOptions {
    std::string circuit;  // needs "gaps" and "partition"
    std::string mode = "schmidt";
    std::uint64_t budget = kDefaultMaxTerms;
};

struct SimulateOptions {
    std::string circuit;
    std::string input;  // empty: all zeros
    std::string observable;
};

struct PipelineOptions {
    std::string circuit;
    std::string input;
    std::string observable;
    std::string mode = "schmidt";
    std::uint64_t budget = kDefaultMaxTerms;
};

struct VerifyOptions {
    std::string suite;
    std::optional<int> n;
    int k_max = 6;
    std::string gate = "cz";
    std::string mode;  // empty: every mode the suite supports
    std::optional<int> instances;
    std::string corpus = "corpus";
};

int cmd_decompose(const GlobalOptions &g, const DecomposeOptions &o, std::ostream &out);
int cmd_gadgetize(const GlobalOptions &g, const GadgetizeOptions &o, std::ostream &out);
int cmd_cut(const GlobalOptions &g, const CutOptions &o, std::ostream &out);
int cmd_simulate(const GlobalOptions &g, const SimulateOptions &o, std::ostream &out);
int cmd_pipeline(const GlobalOptions &g, const PipelineOptions &o, std::ostream &out, std::ostream &err);
int cmd_verify(const GlobalOptions &g, const VerifyOptions &o, std::ostream &out);

/// Runs a command and maps exceptions to exit codes, reporting them on `err`.
int run_guarded(const std::function<int()> &command, std::ostream &err);

}  // namespace qcut
