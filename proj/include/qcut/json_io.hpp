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

// JSON documents for circuits, combs, cut decompositions and channels.
// Matrices are arrays of rows, each entry a [re, im] pair. Doubles are written
// in shortest round-trip form, so custom matrices survive a write/read cycle
// bit for bit.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qcut/channels.hpp"
#include "qcut/circuit.hpp"
#include "qcut/decompose.hpp"

namespace qcut {

using json = nlohmann::json;

/// Malformed or inconsistent input document.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json matrix_to_json(const ComplexMatrix &m);
/// Throws ParseError on a ragged or non-numeric matrix, or on a shape other than rows x cols
/// (pass -1 to accept any square shape).
ComplexMatrix matrix_from_json(const json &j, Eigen::Index rows = -1, Eigen::Index cols = -1);

json gate_to_json(const Gate &g);
Gate gate_from_json(const json &j);

/// A circuit plus the optional comb annotations. Gap positions index into the
/// gate list: the gate at a gap's position is that gap's gate.
struct CircuitDocument {
    Circuit circuit{1};
    std::vector<GapSlot> gaps;
    std::optional<std::vector<int>> partition;
    std::vector<int> ancillas;
};

json document_to_json(const CircuitDocument &doc);
CircuitDocument document_from_json(const json &j);

/// Parses text; every failure (syntax, schema, invalid gate) is a ParseError.
CircuitDocument parse_circuit_document(std::string_view text);

struct CombWithGates {
    QuantumComb comb;
    std::vector<Gate> gap_gates;
};

/// Needs a partition; the comb is validated and a violation is a ParseError.
CombWithGates comb_from_document(const CircuitDocument &doc);
CircuitDocument document_from_comb(const QuantumComb &comb, const std::vector<Gate> &gap_gates,
                                   std::vector<int> ancillas = {});

json decomposition_to_json(const CutDecomposition &dec);
/// Terms only; the comb is supplied by the caller.
CutDecomposition decomposition_from_json(const json &j, const QuantumComb &comb);

json channel_to_json(const Channel &ch);
Channel channel_from_json(const json &j);

json parse_json_text(std::string_view text);
std::string read_text_file(const std::string &path);

}  // namespace qcut
