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

#ifndef EVINDEP_INDEPENDENCE_HPP_
#define EVINDEP_INDEPENDENCE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "evindep/clustering.hpp"
#include "evindep/dependence.hpp"
#include "evindep/mass.hpp"

namespace evindep {

enum class Referent { kFirst, kSecond };

// Cluster overlap proportions relative to the referent source:
// beta(r, c) = |Cl_r ∩ Cl'_c| / |Cl_r| where rows index the referent's
// clusters and columns the other source's.
class CorrespondenceMatrix {
 public:
  CorrespondenceMatrix(std::size_t size, std::vector<double> beta,
                       Referent referent);

  std::size_t size() const { return size_; }
  Referent referent() const { return referent_; }
  double operator()(std::size_t row, std::size_t col) const {
    return beta_[row * size_ + col];
  }

 private:
  std::size_t size_;
  std::vector<double> beta_;
  Referent referent_;
};

// Both orientations: first has source 1 as referent, second has source 2.
// Throws kPartitionMismatch unless both partitions cover the same objects
// with the same number of clusters.
std::pair<CorrespondenceMatrix, CorrespondenceMatrix> correspondence_matrices(
    const Partition& p1, const Partition& p2);

struct MatchedPair {
  std::size_t row = 0;  // referent cluster
  std::size_t col = 0;  // other source's cluster
  double beta = 0.0;
};

// Perfect 1-1 matching, pairs in the order they were taken.
using Matching = std::vector<MatchedPair>;

// Repeatedly pairs the row and column of the largest remaining entry and
// deletes both. Ties go to the smallest row, then the smallest column.
Matching greedy_match(const CorrespondenceMatrix& m);

struct PairLink {
  std::size_t row = 0;
  std::size_t col = 0;
  double beta = 0.0;
  double alpha = 1.0;
  std::optional<double> conf;
};

// m(I) = α(1-β), m(Ī) = αβ, m(I∪Ī) = 1-α.
IndependenceMass pair_independence_mass(const PairLink& link);

// Componentwise mean. Throws kEmptyList.
IndependenceMass aggregate_independence(std::span<const IndependenceMass> masses);

struct Degrees {
  double independence = 0.0;  // BetP(I)
  double dependence = 0.0;    // BetP(Ī)
};

Degrees independence_degree(const IndependenceMass& m);

// d(m1_l, m2_l) for every object l.
std::vector<double> cross_distances(std::span<const MassFunction> masses1,
                                    std::span<const MassFunction> masses2);

// Mean cross distance over objects in both (sorted) member lists; 1 when the
// clusters share no object.
double cluster_conflict(const std::vector<std::size_t>& members_a,
                        const std::vector<std::size_t>& members_b,
                        std::span<const double> cross);

// I: α(1-β), P: αβ(1-Conf), P̄: αβConf, I∪P: (1-α)(1-Conf),
// I∪P̄: (1-α)Conf. Throws kInvalidArgument when conf is unset.
DependenceMass pair_dependence_mass(const PairLink& link);

DependenceMass aggregate_dependence(std::span<const DependenceMass> masses);

// Pignistic probabilities of I, P and P̄.
struct DependenceDegrees {
  double independent = 0.0;
  double positive = 0.0;
  double negative = 0.0;
};

DependenceDegrees dependence_degrees(const DependenceMass& m);

enum class AlphaPolicy {
  kOne,          // α = 1 for every pair
  kClusterSize,  // α = |referent cluster| / n
};

struct AnalysisConfig {
  std::optional<std::size_t> clusters;  // defaults to the frame size
  std::uint64_t seed = 0;
  AlphaPolicy alpha_policy = AlphaPolicy::kOne;
};

// Estimate for one referent source against the other.
struct DirectionReport {
  Referent referent = Referent::kFirst;
  std::vector<PairLink> links;  // in matching order
  IndependenceMass independence;
  DependenceMass dependence;
  Degrees degrees;
  DependenceDegrees dependence_degrees;
};

struct IndependenceReport {
  std::size_t n_objects = 0;
  std::size_t n_clusters = 0;
  Partition first;
  Partition second;
  CorrespondenceMatrix m1;
  CorrespondenceMatrix m2;
  DirectionReport forward;   // S1 relative to S2
  DirectionReport backward;  // S2 relative to S1
};

// Clusters both sources, matches clusters in both directions and aggregates
// the per-pair masses. Objects are aligned by position. Throws
// kLengthMismatch, kFrameMismatch or kTooFewObjects.
IndependenceReport analyze(std::span<const MassFunction> masses1,
                           std::span<const MassFunction> masses2,
                           const AnalysisConfig& config);

}  // namespace evindep

#endif  // EVINDEP_INDEPENDENCE_HPP_
