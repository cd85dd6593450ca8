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

#include "evindep/clustering.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "evindep/error.hpp"
#include "evindep/rng.hpp"

namespace evindep {
namespace {

// Index of the maximum of `values` over `eligible`; exact ties go to rng.
std::size_t argmax_with_ties(const std::vector<double>& values,
                             const std::vector<bool>& eligible, Rng& rng) {
  double best = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!eligible[i]) continue;
    if (values[i] > best) {
      best = values[i];
      candidates.assign(1, i);
    } else if (values[i] == best) {
      candidates.push_back(i);
    }
  }
  if (candidates.size() == 1) return candidates.front();
  return candidates[rng.uniform_index(candidates.size())];
}

// Sum of distances from each object to each cluster's members, n x C.
std::vector<double> cluster_sums(const DistanceMatrix& dm, const Partition& p) {
  const std::size_t n = dm.size(), c = p.n_clusters();
  std::vector<double> sums(n * c, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < c; ++k) {
      double s = 0.0;
      for (std::size_t j : p.members(k)) s += dm(i, j);
      sums[i * c + k] = s;
    }
  }
  return sums;
}

Partition repair_empty_clusters(const DistanceMatrix& dm, Partition p) {
  for (;;) {
    std::size_t empty = p.n_clusters();
    for (std::size_t k = 0; k < p.n_clusters(); ++k) {
      if (p.members(k).empty()) {
        empty = k;
        break;
      }
    }
    if (empty == p.n_clusters()) return p;

    std::size_t chosen = p.n_objects();
    double worst = -1.0;
    for (std::size_t i = 0; i < p.n_objects(); ++i) {
      const std::size_t own = p.cluster_of(i);
      if (p.members(own).size() < 2) continue;
      const double d = dissimilarity(i, own, dm, p);
      if (d > worst) {
        worst = d;
        chosen = i;
      }
    }
    std::vector<std::size_t> assignment = p.assignment();
    assignment[chosen] = empty;
    p = Partition(p.n_clusters(), std::move(assignment));
  }
}

}  // namespace

Partition::Partition(std::size_t n_clusters, std::vector<std::size_t> assignment)
    : assignment_(std::move(assignment)), clusters_(n_clusters) {
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    if (assignment_[i] >= n_clusters) {
      throw Error(ErrorCode::kInvalidArgument,
                  "object " + std::to_string(i) + " assigned to cluster " +
                      std::to_string(assignment_[i]) + " of " +
                      std::to_string(n_clusters));
    }
    clusters_[assignment_[i]].push_back(i);
  }
}

DistanceMatrix distance_matrix(std::span<const MassFunction> masses) {
  DistanceMatrix dm(masses.size());
  for (std::size_t i = 0; i < masses.size(); ++i) {
    require_same_frame(masses[0].frame(), masses[i].frame());
    for (std::size_t j = i + 1; j < masses.size(); ++j) {
      dm.set(i, j, jousselme(masses[i], masses[j]));
    }
  }
  return dm;
}

double dissimilarity(std::size_t object, std::size_t cluster,
                     const DistanceMatrix& dm, const Partition& p) {
  const auto& members = p.members(cluster);
  if (members.empty()) {
    throw Error(ErrorCode::kEmptyCluster,
                "cluster " + std::to_string(cluster) + " has no members");
  }
  double sum = 0.0;
  for (std::size_t j : members) sum += dm(object, j);
  return sum / static_cast<double>(members.size());
}

Partition reassignment_pass(const DistanceMatrix& dm, const Partition& p) {
  const std::size_t n = p.n_objects(), c = p.n_clusters();
  const std::vector<double> sums = cluster_sums(dm, p);
  std::vector<std::size_t> next(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best_k = p.cluster_of(i);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < c; ++k) {
      const std::size_t size = p.members(k).size();
      if (size == 0) continue;
      const double d = sums[i * c + k] / static_cast<double>(size);
      if (d < best) {
        best = d;
        best_k = k;
      }
    }
    next[i] = best_k;
  }
  return Partition(c, std::move(next));
}

ClusteringOutcome cluster_distance_matrix(const DistanceMatrix& dm,
                                          std::size_t n_clusters,
                                          std::uint64_t seed,
                                          const ClusteringOptions& options) {
  const std::size_t n = dm.size();
  if (n_clusters == 0 || n < n_clusters) {
    throw Error(ErrorCode::kTooFewObjects,
                "cannot form " + std::to_string(n_clusters) + " clusters from " +
                    std::to_string(n) + " objects");
  }
  Rng rng(seed);

  // Farthest-point seeding.
  std::vector<bool> eligible(n, true);
  std::vector<double> score(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) score[i] += dm(i, j);
  }
  std::vector<std::size_t> seeds;
  seeds.push_back(argmax_with_ties(score, eligible, rng));
  eligible[seeds.back()] = false;
  std::vector<double> min_to_seed(n);
  for (std::size_t i = 0; i < n; ++i) min_to_seed[i] = dm(i, seeds.back());
  while (seeds.size() < n_clusters) {
    seeds.push_back(argmax_with_ties(min_to_seed, eligible, rng));
    eligible[seeds.back()] = false;
    for (std::size_t i = 0; i < n; ++i) {
      min_to_seed[i] = std::min(min_to_seed[i], dm(i, seeds.back()));
    }
  }

  std::vector<std::size_t> assignment(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best_k = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n_clusters; ++k) {
      const double d = seeds[k] == i ? -1.0 : dm(i, seeds[k]);
      if (d < best) {
        best = d;
        best_k = k;
      }
    }
    assignment[i] = best_k;
  }

  Partition current(n_clusters, std::move(assignment));
  for (std::size_t pass = 1; pass <= options.max_passes; ++pass) {
    Partition next = reassignment_pass(dm, current);
    if (next == current) return {std::move(current), pass, true};
    current = repair_empty_clusters(dm, std::move(next));
  }
  return {std::move(current), options.max_passes, false};
}

Partition cluster_masses(std::span<const MassFunction> masses,
                         std::size_t n_clusters, std::uint64_t seed) {
  if (n_clusters == 0 || masses.size() < n_clusters) {
    throw Error(ErrorCode::kTooFewObjects,
                "cannot form " + std::to_string(n_clusters) + " clusters from " +
                    std::to_string(masses.size()) + " objects");
  }
  return cluster_distance_matrix(distance_matrix(masses), n_clusters, seed)
      .partition;
}

}  // namespace evindep
