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

#include "evindep/datagen.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "evindep/error.hpp"

namespace evindep {
namespace {

template <typename MapFocal>
MassFunction transfer(const MassFunction& m, MapFocal map_focal) {
  std::map<std::uint32_t, double> acc;
  for (const auto& f : m.focals()) acc[map_focal(f.set).bits] += f.mass;
  std::vector<Focal> focals;
  for (const auto& [bits, mass] : acc) focals.push_back({Subset{bits}, mass});
  return MassFunction::from_accumulated(m.frame(), std::move(focals));
}

void require_lengths(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(a) + " masses but " + std::to_string(b) +
                    " decision classes");
  }
}

}  // namespace

MassFunction random_mass(const Frame& frame, Rng& rng) {
  const std::uint64_t n_subsets = frame.powerset_size() - 1;
  const std::size_t n_focals =
      static_cast<std::size_t>(1 + rng.uniform_index(n_subsets));

  // Partial Fisher-Yates over the non-empty subsets 1..2^n-1.
  std::vector<std::uint32_t> pool(n_subsets);
  std::iota(pool.begin(), pool.end(), 1u);
  for (std::size_t i = 0; i < n_focals; ++i) {
    const std::size_t j = i + rng.uniform_index(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }

  std::vector<double> cuts(n_focals - 1);
  for (double& c : cuts) c = rng.uniform01();
  std::sort(cuts.begin(), cuts.end());

  std::vector<std::pair<Subset, double>> assignments;
  assignments.reserve(n_focals);
  double previous = 0.0;
  for (std::size_t i = 0; i < n_focals; ++i) {
    const double next = i + 1 < n_focals ? cuts[i] : 1.0;
    assignments.emplace_back(Subset{pool[i]}, next - previous);
    previous = next;
  }
  return MassFunction::make(frame, std::move(assignments));
}

std::vector<MassFunction> random_masses(const Frame& frame, std::size_t n,
                                        Rng& rng) {
  std::vector<MassFunction> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_mass(frame, rng));
  return out;
}

Subset decision_class(const MassFunction& m) {
  const PignisticDistribution bet = pignistic(m);
  std::size_t best = 0;
  for (std::size_t i = 1; i < bet.probs.size(); ++i) {
    if (bet.probs[i] > bet.probs[best]) best = i;
  }
  return Subset::singleton(best);
}

std::vector<Subset> decision_classes(std::span<const MassFunction> masses) {
  std::vector<Subset> out;
  out.reserve(masses.size());
  for (const auto& m : masses) out.push_back(decision_class(m));
  return out;
}

std::vector<MassFunction> make_positive(std::span<const MassFunction> masses,
                                        std::span<const Subset> decisions) {
  require_lengths(masses.size(), decisions.size());
  std::vector<MassFunction> out;
  out.reserve(masses.size());
  for (std::size_t i = 0; i < masses.size(); ++i) {
    const Subset d = decisions[i];
    out.push_back(transfer(masses[i], [d](Subset f) { return f | d; }));
  }
  return out;
}

std::vector<MassFunction> make_positive(std::span<const MassFunction> masses) {
  const std::vector<Subset> own = decision_classes(masses);
  return make_positive(masses, own);
}

Contradiction cyclic_contradiction(std::size_t frame_size) {
  Contradiction c(frame_size);
  for (std::size_t k = 0; k < frame_size; ++k) c[k] = (k + 1) % frame_size;
  return c;
}

void validate_contradiction(const Contradiction& c, std::size_t frame_size) {
  if (c.size() != frame_size) {
    throw Error(ErrorCode::kNotADerangement,
                "contradiction map must cover all " + std::to_string(frame_size) +
                    " singletons");
  }
  std::vector<bool> seen(frame_size, false);
  for (std::size_t k = 0; k < frame_size; ++k) {
    if (c[k] >= frame_size || seen[c[k]] || c[k] == k) {
      throw Error(ErrorCode::kNotADerangement,
                  "contradiction map is not a derangement at singleton " +
                      std::to_string(k));
    }
    seen[c[k]] = true;
  }
}

std::vector<MassFunction> make_negative(std::span<const MassFunction> masses,
                                        std::span<const Subset> decisions_other,
                                        const Contradiction& contradiction) {
  require_lengths(masses.size(), decisions_other.size());
  if (masses.empty()) return {};
  const Frame& frame = masses.front().frame();
  validate_contradiction(contradiction, frame.size());
  std::vector<MassFunction> out;
  out.reserve(masses.size());
  for (std::size_t i = 0; i < masses.size(); ++i) {
    const Subset d = decisions_other[i];
    if (d.cardinality() != 1 || !frame.contains(d)) {
      throw Error(ErrorCode::kInvalidArgument, "decision class must be a singleton");
    }
    const Subset opposite =
        Subset::singleton(contradiction[static_cast<std::size_t>(
            std::countr_zero(d.bits))]);
    const Subset keep = frame.complement(d);
    out.push_back(transfer(masses[i], [&](Subset f) {
      return (f | opposite) & keep;
    }));
  }
  return out;
}

std::string_view scenario_name(Scenario s) {
  switch (s) {
    case Scenario::kIndependent: return "independent";
    case Scenario::kPositive: return "positive";
    case Scenario::kNegative: return "negative";
  }
  return "unknown";
}

Scenario parse_scenario(std::string_view name) {
  if (name == "independent") return Scenario::kIndependent;
  if (name == "positive") return Scenario::kPositive;
  if (name == "negative") return Scenario::kNegative;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown scenario '" + std::string(name) + "'");
}

GeneratedSources generate(const GenConfig& config) {
  if (config.n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "at least one mass per source");
  }
  Frame frame = Frame::numbered(config.frame_size);
  const Rng root(config.seed);
  Rng rng1 = root.split(1);
  Rng rng2 = root.split(2);
  std::vector<MassFunction> base1 = random_masses(frame, config.n, rng1);
  std::vector<MassFunction> base2 = random_masses(frame, config.n, rng2);

  switch (config.scenario) {
    case Scenario::kIndependent:
      return {std::move(frame), std::move(base1), std::move(base2)};
    case Scenario::kPositive: {
      const std::vector<Subset> d = decision_classes(base1);
      return {std::move(frame), make_positive(base1, d), make_positive(base2, d)};
    }
    case Scenario::kNegative: {
      const Contradiction c = config.contradiction.empty()
                                  ? cyclic_contradiction(config.frame_size)
                                  : config.contradiction;
      validate_contradiction(c, config.frame_size);
      const std::vector<Subset> d = decision_classes(base1);
      std::vector<MassFunction> second = make_negative(base2, d, c);
      return {std::move(frame), make_positive(base1, d), std::move(second)};
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown scenario");
}

}  // namespace evindep
