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

#include "evindep/mass.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "evindep/error.hpp"

namespace evindep {
namespace {

using Accumulator = std::map<std::uint32_t, double>;

MassFunction finish(const Frame& frame, const Accumulator& acc) {
  std::vector<Focal> focals;
  focals.reserve(acc.size());
  for (const auto& [bits, mass] : acc) focals.push_back({Subset{bits}, mass});
  return MassFunction::from_accumulated(frame, std::move(focals));
}

void require_in_frame(const Frame& frame, Subset s) {
  if (!frame.contains(s)) {
    throw Error(ErrorCode::kSubsetOutOfRange,
                "subset bits " + std::to_string(s.bits) +
                    " exceed a frame of size " + std::to_string(frame.size()));
  }
}

}  // namespace

MassFunction MassFunction::make(
    Frame frame, std::vector<std::pair<Subset, double>> assignments) {
  if (assignments.empty()) {
    throw Error(ErrorCode::kEmptyList, "a mass function needs at least one entry");
  }
  std::vector<Focal> focals;
  focals.reserve(assignments.size());
  double sum = 0.0;
  for (const auto& [set, mass] : assignments) {
    if (!std::isfinite(mass) || mass < 0.0) {
      throw Error(ErrorCode::kNegativeMass,
                  "mass of " + frame.format(set) + " must be finite and >= 0");
    }
    require_in_frame(frame, set);
    sum += mass;
    focals.push_back({set, mass});
  }
  std::sort(focals.begin(), focals.end(),
            [](const Focal& a, const Focal& b) { return a.set < b.set; });
  auto dup = std::adjacent_find(
      focals.begin(), focals.end(),
      [](const Focal& a, const Focal& b) { return a.set == b.set; });
  if (dup != focals.end()) {
    throw Error(ErrorCode::kDuplicateSubset,
                "subset " + frame.format(dup->set) + " is assigned twice");
  }
  if (std::abs(sum - 1.0) > kMassTolerance) {
    throw Error(ErrorCode::kNonUnitSum,
                "masses sum to " + std::to_string(sum) + ", expected 1");
  }
  std::erase_if(focals, [](const Focal& f) { return f.mass == 0.0; });
  return MassFunction(std::move(frame), std::move(focals));
}

MassFunction MassFunction::vacuous(Frame frame) {
  Subset full = frame.full();
  return MassFunction(std::move(frame), {{full, 1.0}});
}

MassFunction MassFunction::categorical(Frame frame, Subset set) {
  require_in_frame(frame, set);
  return MassFunction(std::move(frame), {{set, 1.0}});
}

MassFunction MassFunction::from_accumulated(Frame frame,
                                            std::vector<Focal> unsorted) {
  std::erase_if(unsorted, [](const Focal& f) { return !(f.mass > 0.0); });
  std::sort(unsorted.begin(), unsorted.end(),
            [](const Focal& a, const Focal& b) { return a.set < b.set; });
  return MassFunction(std::move(frame), std::move(unsorted));
}

double MassFunction::operator[](Subset s) const {
  auto it = std::lower_bound(
      focals_.begin(), focals_.end(), s,
      [](const Focal& f, Subset key) { return f.set < key; });
  return (it != focals_.end() && it->set == s) ? it->mass : 0.0;
}

double MassFunction::total() const {
  double sum = 0.0;
  for (const auto& f : focals_) sum += f.mass;
  return sum;
}

MassFunction conjunctive(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame());
  Accumulator acc;
  for (const auto& b : m1.focals()) {
    for (const auto& c : m2.focals()) {
      acc[(b.set & c.set).bits] += b.mass * c.mass;
    }
  }
  return finish(m1.frame(), acc);
}

MassFunction disjunctive(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame());
  Accumulator acc;
  for (const auto& b : m1.focals()) {
    for (const auto& c : m2.focals()) {
      acc[(b.set | c.set).bits] += b.mass * c.mass;
    }
  }
  return finish(m1.frame(), acc);
}

MassFunction mean_combine(std::span<const MassFunction> masses) {
  if (masses.empty()) {
    throw Error(ErrorCode::kEmptyList, "mean of an empty list of mass functions");
  }
  const Frame& frame = masses.front().frame();
  std::map<std::uint32_t, std::vector<double>> values;
  for (const auto& m : masses) {
    require_same_frame(frame, m.frame());
    for (const auto& f : m.focals()) values[f.set.bits];
  }
  for (auto& [bits, column] : values) {
    column.reserve(masses.size());
    for (const auto& m : masses) column.push_back(m[Subset{bits}]);
    std::sort(column.begin(), column.end());
  }
  Accumulator acc;
  for (const auto& [bits, column] : values) {
    double mean = 0.0;
    for (std::size_t k = 0; k < column.size(); ++k) {
      mean += (column[k] - mean) / static_cast<double>(k + 1);
    }
    acc[bits] = mean;
  }
  return finish(frame, acc);
}

MassFunction condition(const MassFunction& m, Subset given) {
  if (given.is_empty()) {
    throw Error(ErrorCode::kEmptyConditioner, "cannot condition on the empty set");
  }
  require_in_frame(m.frame(), given);
  Accumulator acc;
  for (const auto& f : m.focals()) acc[(f.set & given).bits] += f.mass;
  return finish(m.frame(), acc);
}

MassFunction decondition(const MassFunction& conditional, Subset given) {
  const Frame& frame = conditional.frame();
  require_in_frame(frame, given);
  Subset outside = frame.complement(given);
  Accumulator acc;
  for (const auto& f : conditional.focals()) {
    if (!f.set.is_subset_of(given)) {
      throw Error(ErrorCode::kFocalOutsideConditioner,
                  "focal " + frame.format(f.set) + " is not included in " +
                      frame.format(given));
    }
    acc[(f.set | outside).bits] += f.mass;
  }
  return finish(frame, acc);
}

MassFunction discount(const MassFunction& m, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::kAlphaOutOfRange,
                "discount factor must lie in [0, 1], got " + std::to_string(alpha));
  }
  const Subset full = m.frame().full();
  Accumulator acc;
  for (const auto& f : m.focals()) acc[f.set.bits] += alpha * f.mass;
  // alpha*m(Ω) + (1 - alpha) keeps alpha = 1 bit-exact.
  acc[full.bits] += 1.0 - alpha;
  return finish(m.frame(), acc);
}

PignisticDistribution pignistic(const MassFunction& m) {
  const double conflict = m[Subset::empty()];
  const double norm = 1.0 - conflict;
  if (norm <= kMassTolerance) {
    throw Error(ErrorCode::kTotalConflict,
                "pignistic transform undefined when m(empty) = 1");
  }
  std::vector<double> probs(m.frame().size(), 0.0);
  for (const auto& f : m.focals()) {
    if (f.set.is_empty()) continue;
    const double share = f.mass / f.set.cardinality();
    for (std::size_t i : f.set.indices()) probs[i] += share;
  }
  for (double& p : probs) p /= norm;
  return {m.frame(), std::move(probs)};
}

double jaccard(Subset a, Subset b) {
  const int uni = (a | b).cardinality();
  if (uni == 0) return 1.0;
  return static_cast<double>((a & b).cardinality()) / uni;
}

double jousselme(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame());
  // Difference vector over the union of focal sets, both inputs sorted.
  std::vector<Focal> diff;
  diff.reserve(m1.size() + m2.size());
  auto a = m1.focals().begin(), ae = m1.focals().end();
  auto b = m2.focals().begin(), be = m2.focals().end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->set < b->set)) {
      diff.push_back({a->set, a->mass});
      ++a;
    } else if (a == ae || b->set < a->set) {
      diff.push_back({b->set, -b->mass});
      ++b;
    } else {
      diff.push_back({a->set, a->mass - b->mass});
      ++a;
      ++b;
    }
  }
  double quad = 0.0;
  for (const auto& x : diff) {
    for (const auto& y : diff) quad += x.mass * y.mass * jaccard(x.set, y.set);
  }
  const double d2 = 0.5 * quad;
  if (!(d2 > 0.0)) return 0.0;
  return std::min(1.0, std::sqrt(d2));
}

}  // namespace evindep
