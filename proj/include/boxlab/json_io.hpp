// Copyright 2026 The boxlab Authors
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

#include "boxlab/box.hpp"
#include "boxlab/game.hpp"
#include "boxlab/operators.hpp"
#include "json.hpp"

namespace boxlab {

using Json = nlohmann::json;

/// {"p": [x][y][a][b]} with 16 numbers. The reader validates through new_box().
Json box_to_json(const BipartiteBox& box);
BipartiteBox box_from_json(const Json& j);

/// {"re": [[...]], "im": [[...]]}; "im" may be omitted for real matrices.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
Observable observable_from_json(const Json& j);

/// A vector {"re": [...], "im": [...]} gives a pure state, a nested array a density matrix.
Json state_to_json(const QuantumState& state);
QuantumState state_from_json(const Json& j);

/// JSONL: a header line {"box_id", "rounds", "seed"} then one
/// {"t","x","y","a","b"} object per round.
void write_transcript(std::ostream& out, const GameTranscript& transcript);
GameTranscript read_transcript(std::istream& in);

/// Sorted keys, floats at 17 significant digits, integers verbatim.
/// indent < 0 gives a single line.
std::string canonical_dump(const Json& j, int indent = 2);

Json read_json_file(const std::string& path);

}  // namespace boxlab
