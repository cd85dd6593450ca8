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

#ifndef EVINDEP_MASS_HPP_
#define EVINDEP_MASS_HPP_

#include <span>
#include <utility>
#include <vector>

#include "evindep/frame.hpp"

namespace evindep {

// Tolerance on the total mass when validating user input.
inline constexpr double kMassTolerance = 1e-9;

struct Focal {
  Subset set;
  double mass = 0.0;

  friend bool operator==(const Focal&, const Focal&) = default;
};

// A basic belief assignment over a frame. Only focal elements (strictly
// positive mass) are stored, sorted by subset bits. Mass on the empty set is
// allowed since the conjunctive rule is not normalized.
class MassFunction {
 public:
  // Validating constructor. Zero entries are dropped; throws kNegativeMass,
  // kDuplicateSubset, kSubsetOutOfRange, kNonUnitSum or kEmptyList.
  static MassFunction make(Frame frame,
                           std::vector<std::pair<Subset, double>> assignments);

  static MassFunction vacuous(Frame frame);
  static MassFunction categorical(Frame frame, Subset set);

  // Builds from raw accumulated values without checking the total. Used by
  // operators whose output is normalized by construction.
  static MassFunction from_accumulated(Frame frame,
                                       std::vector<Focal> unsorted);

  const Frame& frame() const { return frame_; }
  std::span<const Focal> focals() const { return focals_; }
  std::size_t size() const { return focals_.size(); }

  // 0 when the subset is not focal.
  double operator[](Subset s) const;

  double total() const;

  friend bool operator==(const MassFunction& a, const MassFunction& b) {
    return a.frame_ == b.frame_ && a.focals_ == b.focals_;
  }

 private:
  MassFunction(Frame frame, std::vector<Focal> focals)
      : frame_(std::move(frame)), focals_(std::move(focals)) {}

  Frame frame_;
  std::vector<Focal> focals_;
};

struct PignisticDistribution {
  Frame frame;
  std::vector<double> probs;  // one per frame element
};

// m(A) = sum over B∩C=A of m1(B) m2(C).
MassFunction conjunctive(const MassFunction& m1, const MassFunction& m2);

// m(A) = sum over B∪C=A of m1(B) m2(C).
MassFunction disjunctive(const MassFunction& m1, const MassFunction& m2);

// Per-subset arithmetic mean. Values for a subset are averaged in sorted
// order with a running mean, so the result is exactly idempotent and does not
// depend on the order of the list.
MassFunction mean_combine(std::span<const MassFunction> masses);

// Transfers each focal's mass to its intersection with `given`.
MassFunction condition(const MassFunction& m, Subset given);

// Least committed inverse of condition: every focal C ⊆ given moves to
// C ∪ complement(given).
MassFunction decondition(const MassFunction& conditional, Subset given);

// Classical reliability discounting; alpha = 1 keeps m, alpha = 0 is vacuous.
MassFunction discount(const MassFunction& m, double alpha);

// Throws kTotalConflict when m(∅) = 1.
PignisticDistribution pignistic(const MassFunction& m);

// Jousselme distance with the Jaccard similarity |A∩B|/|A∪B| (1 for ∅,∅),
// evaluated over focal pairs only.
double jousselme(const MassFunction& m1, const MassFunction& m2);

// Jaccard similarity between two subsets as used by jousselme.
double jaccard(Subset a, Subset b);

}  // namespace evindep

#endif  // EVINDEP_MASS_HPP_
