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

#include "evindep/independence.hpp"

#include <algorithm>
#include <string>

#include "evindep/error.hpp"

namespace evindep {
namespace {

// Running mean over sorted values: exact for repeated values and independent
// of input order.
double sorted_mean(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double mean = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    mean += (values[k] - mean) / static_cast<double>(k + 1);
  }
  return mean;
}

template <typename T, typename Field>
double mean_of(std::span<const T> items, Field field) {
  std::vector<double> values;
  values.reserve(items.size());
  for (const auto& it : items) values.push_back(it.*field);
  return sorted_mean(std::move(values));
}

DirectionReport estimate_direction(const CorrespondenceMatrix& m,
                                   const Partition& referent,
                                   const Partition& other,
                                   std::span<const double> cross,
                                   AlphaPolicy policy) {
  DirectionReport report;
  report.referent = m.referent();
  const double n = static_cast<double>(referent.n_objects());
  std::vector<IndependenceMass> indep;
  std::vector<DependenceMass> dep;
  for (const MatchedPair& pair : greedy_match(m)) {
    PairLink link;
    link.row = pair.row;
    link.col = pair.col;
    link.beta = pair.beta;
    link.alpha = policy == AlphaPolicy::kOne
                     ? 1.0
                     : static_cast<double>(referent.members(pair.row).size()) / n;
    link.conf = cluster_conflict(referent.members(pair.row),
                                 other.members(pair.col), cross);
    indep.push_back(pair_independence_mass(link));
    dep.push_back(pair_dependence_mass(link));
    report.links.push_back(link);
  }
  report.independence = aggregate_independence(indep);
  report.dependence = aggregate_dependence(dep);
  report.degrees = independence_degree(report.independence);
  report.dependence_degrees = dependence_degrees(report.dependence);
  return report;
}

}  // namespace

CorrespondenceMatrix::CorrespondenceMatrix(std::size_t size,
                                           std::vector<double> beta,
                                           Referent referent)
    : size_(size), beta_(std::move(beta)), referent_(referent) {
  if (beta_.size() != size_ * size_) {
    throw Error(ErrorCode::kInvalidArgument,
                "correspondence matrix needs " + std::to_string(size_ * size_) +
                    " entries");
  }
  for (double b : beta_) {
    if (!(b >= 0.0 && b <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "beta must lie in [0, 1]");
    }
  }
}

std::pair<CorrespondenceMatrix, CorrespondenceMatrix> correspondence_matrices(
    const Partition& p1, const Partition& p2) {
  if (p1.n_objects() != p2.n_objects() || p1.n_clusters() != p2.n_clusters()) {
    throw Error(ErrorCode::kPartitionMismatch,
                "partitions must cover the same objects with the same cluster count");
  }
  const std::size_t c = p1.n_clusters();
  std::vector<std::size_t> overlap(c * c, 0);
  for (std::size_t i = 0; i < p1.n_objects(); ++i) {
    ++overlap[p1.cluster_of(i) * c + p2.cluster_of(i)];
  }
  std::vector<double> b1(c * c, 0.0), b2(c * c, 0.0);
  for (std::size_t k1 = 0; k1 < c; ++k1) {
    for (std::size_t k2 = 0; k2 < c; ++k2) {
      const double common = static_cast<double>(overlap[k1 * c + k2]);
      const std::size_t s1 = p1.members(k1).size(), s2 = p2.members(k2).size();
      if (s1 > 0) b1[k1 * c + k2] = common / static_cast<double>(s1);
      if (s2 > 0) b2[k2 * c + k1] = common / static_cast<double>(s2);
    }
  }
  return {CorrespondenceMatrix(c, std::move(b1), Referent::kFirst),
          CorrespondenceMatrix(c, std::move(b2), Referent::kSecond)};
}

Matching greedy_match(const CorrespondenceMatrix& m) {
  const std::size_t c = m.size();
  std::vector<bool> row_used(c, false), col_used(c, false);
  Matching matching;
  matching.reserve(c);
  for (std::size_t step = 0; step < c; ++step) {
    MatchedPair best{c, c, -1.0};
    for (std::size_t r = 0; r < c; ++r) {
      if (row_used[r]) continue;
      for (std::size_t k = 0; k < c; ++k) {
        if (!col_used[k] && m(r, k) > best.beta) best = {r, k, m(r, k)};
      }
    }
    row_used[best.row] = true;
    col_used[best.col] = true;
    matching.push_back(best);
  }
  return matching;
}

IndependenceMass pair_independence_mass(const PairLink& link) {
  return {link.alpha * (1.0 - link.beta), link.alpha * link.beta,
          1.0 - link.alpha};
}

IndependenceMass aggregate_independence(std::span<const IndependenceMass> masses) {
  if (masses.empty()) {
    throw Error(ErrorCode::kEmptyList, "no pair masses to aggregate");
  }
  return {mean_of(masses, &IndependenceMass::independent),
          mean_of(masses, &IndependenceMass::dependent),
          mean_of(masses, &IndependenceMass::ignorance)};
}

Degrees independence_degree(const IndependenceMass& m) {
  return {m.independent + 0.5 * m.ignorance, m.dependent + 0.5 * m.ignorance};
}

std::vector<double> cross_distances(std::span<const MassFunction> masses1,
                                    std::span<const MassFunction> masses2) {
  if (masses1.size() != masses2.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "sources describe " + std::to_string(masses1.size()) + " and " +
                    std::to_string(masses2.size()) + " objects");
  }
  std::vector<double> out(masses1.size());
  for (std::size_t l = 0; l < masses1.size(); ++l) {
    out[l] = jousselme(masses1[l], masses2[l]);
  }
  return out;
}

double cluster_conflict(const std::vector<std::size_t>& members_a,
                        const std::vector<std::size_t>& members_b,
                        std::span<const double> cross) {
  std::vector<std::size_t> common;
  std::set_intersection(members_a.begin(), members_a.end(), members_b.begin(),
                        members_b.end(), std::back_inserter(common));
  if (common.empty()) return 1.0;
  double sum = 0.0;
  for (std::size_t l : common) sum += cross[l];
  return sum / static_cast<double>(common.size());
}

DependenceMass pair_dependence_mass(const PairLink& link) {
  if (!link.conf) {
    throw Error(ErrorCode::kInvalidArgument,
                "pair conflict must be computed before the dependence mass");
  }
  const double a = link.alpha, b = link.beta, conf = *link.conf;
  DependenceMass d;
  d.independent = a * (1.0 - b);
  d.positive = a * b * (1.0 - conf);
  d.negative = a * b * conf;
  d.indep_or_pos = (1.0 - a) * (1.0 - conf);
  d.indep_or_neg = (1.0 - a) * conf;
  return d;
}

DependenceMass aggregate_dependence(std::span<const DependenceMass> masses) {
  if (masses.empty()) {
    throw Error(ErrorCode::kEmptyList, "no pair masses to aggregate");
  }
  DependenceMass d;
  d.independent = mean_of(masses, &DependenceMass::independent);
  d.positive = mean_of(masses, &DependenceMass::positive);
  d.negative = mean_of(masses, &DependenceMass::negative);
  d.indep_or_pos = mean_of(masses, &DependenceMass::indep_or_pos);
  d.indep_or_neg = mean_of(masses, &DependenceMass::indep_or_neg);
  d.ignorance = mean_of(masses, &DependenceMass::ignorance);
  return d;
}

DependenceDegrees dependence_degrees(const DependenceMass& m) {
  const PignisticDistribution bet = pignistic(m.to_mass());
  return {bet.probs[kIndependent], bet.probs[kPositive], bet.probs[kNegative]};
}

IndependenceReport analyze(std::span<const MassFunction> masses1,
                           std::span<const MassFunction> masses2,
                           const AnalysisConfig& config) {
  if (masses1.size() != masses2.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "sources describe " + std::to_string(masses1.size()) + " and " +
                    std::to_string(masses2.size()) + " objects");
  }
  if (masses1.empty()) {
    throw Error(ErrorCode::kTooFewObjects, "sources describe no objects");
  }
  require_same_frame(masses1.front().frame(), masses2.front().frame());
  const std::size_t c =
      config.clusters.value_or(masses1.front().frame().size());

  Partition p1 = cluster_masses(masses1, c, config.seed);
  Partition p2 = cluster_masses(masses2, c, config.seed);
  const std::vector<double> cross = cross_distances(masses1, masses2);
  auto [m1, m2] = correspondence_matrices(p1, p2);

  DirectionReport forward =
      estimate_direction(m1, p1, p2, cross, config.alpha_policy);
  DirectionReport backward =
      estimate_direction(m2, p2, p1, cross, config.alpha_policy);
  return IndependenceReport{masses1.size(),      c,
                            std::move(p1),       std::move(p2),
                            std::move(m1),       std::move(m2),
                            std::move(forward),  std::move(backward)};
}

}  // namespace evindep
