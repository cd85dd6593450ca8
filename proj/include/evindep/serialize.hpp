// Copyright 2026 The evindep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EVINDEP_SERIALIZE_HPP_
#define EVINDEP_SERIALIZE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "evindep/clustering.hpp"
#include "evindep/independence.hpp"
#include "evindep/mass.hpp"

namespace evindep {

// Mass function record:
//   {"frame": ["w1", "w2", ...],
//    "focals": [{"set": [0, 1], "mass": 0.5}, ...]}
// Sets are sorted element indices, never raw bitmasks.
std::string mass_to_json(const MassFunction& m, int indent = -1);

// Validates through MassFunction::make. Throws kParseError on malformed
// input.
MassFunction mass_from_json(std::string_view text);

// One source's assessments of n objects on a common frame:
//   {"source": "S1", "frame": [...],
//    "masses": [{"object": 0, "focals": [...]}, ...]}
struct Dataset {
  std::string source;
  Frame frame;
  std::vector<MassFunction> masses;
};

std::string dataset_to_json(const Dataset& d, int indent = -1);
Dataset dataset_from_json(std::string_view text);

// True when the document is a dataset record rather than a single mass.
bool looks_like_dataset(std::string_view text);

std::string report_to_json(const IndependenceReport& r, int indent = 2);

// "clusters <C>" then one "<object> <cluster>" line per object.
std::string partition_to_text(const Partition& p);
Partition partition_from_text(std::string_view text);

// Throws kIoError.
std::string read_text_file(const std::string& path);

// Writes to a sibling temporary file and renames it over `path`.
void write_text_file_atomic(const std::string& path, std::string_view content);

}  // namespace evindep

#endif  // EVINDEP_SERIALIZE_HPP_
