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

#ifndef EVINDEP_DATAGEN_HPP_
#define EVINDEP_DATAGEN_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "evindep/mass.hpp"
#include "evindep/rng.hpp"

namespace evindep {

// Random basic belief assignment: the focal count is uniform in
// [1, 2^|Ω| - 1], the focal sets are distinct non-empty subsets drawn
// uniformly without replacement, and the masses are the segment lengths
// left by |F| - 1 uniform cut points of [0, 1].
MassFunction random_mass(const Frame& frame, Rng& rng);

std::vector<MassFunction> random_masses(const Frame& frame, std::size_t n,
                                        Rng& rng);

// Singleton of maximal pignistic probability, lowest index on ties.
// Throws kTotalConflict.
Subset decision_class(const MassFunction& m);

std::vector<Subset> decision_classes(std::span<const MassFunction> masses);

// Moves every focal F of masses[i] to F ∪ decisions[i]. Throws
// kLengthMismatch.
std::vector<MassFunction> make_positive(std::span<const MassFunction> masses,
                                        std::span<const Subset> decisions);

// Same with each mass's own decision class.
std::vector<MassFunction> make_positive(std::span<const MassFunction> masses);

// Singleton index -> contradicting singleton index; must be a derangement.
using Contradiction = std::vector<std::size_t>;

// ω_k -> ω_{k+1 mod n}.
Contradiction cyclic_contradiction(std::size_t frame_size);

// Throws kNotADerangement.
void validate_contradiction(const Contradiction& c, std::size_t frame_size);

// Moves every focal F of masses[i] to (F ∪ c(d_i)) \ d_i where d_i is
// decisions_other[i], the decision class of the other source on object i.
// Throws kLengthMismatch or kNotADerangement.
std::vector<MassFunction> make_negative(std::span<const MassFunction> masses,
                                        std::span<const Subset> decisions_other,
                                        const Contradiction& contradiction);

enum class Scenario { kIndependent, kPositive, kNegative };

std::string_view scenario_name(Scenario s);
// Throws kInvalidArgument.
Scenario parse_scenario(std::string_view name);

struct GenConfig {
  std::size_t frame_size = 5;
  std::size_t n = 100;
  std::uint64_t seed = 0;
  Scenario scenario = Scenario::kIndependent;
  Contradiction contradiction;  // empty: cyclic shift
};

struct GeneratedSources {
  Frame frame;
  std::vector<MassFunction> first;
  std::vector<MassFunction> second;
};

// independent: two unrelated random sources.
// positive:    both sources moved toward the first source's original
//              decision classes.
// negative:    the first source is random; the second is moved to the
//              contradicting classes of the first source's decisions.
GeneratedSources generate(const GenConfig& config);

}  // namespace evindep

#endif  // EVINDEP_DATAGEN_HPP_
