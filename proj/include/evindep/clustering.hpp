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

#ifndef EVINDEP_CLUSTERING_HPP_
#define EVINDEP_CLUSTERING_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "evindep/mass.hpp"

namespace evindep {

// Symmetric matrix of pairwise Jousselme distances with a zero diagonal.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v) {
    d_[i * n_ + j] = v;
    d_[j * n_ + i] = v;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> d_;
};

// Assignment of n objects to C clusters. Members are kept sorted.
class Partition {
 public:
  // Throws kInvalidArgument when an assignment is >= n_clusters.
  Partition(std::size_t n_clusters, std::vector<std::size_t> assignment);

  std::size_t n_objects() const { return assignment_.size(); }
  std::size_t n_clusters() const { return clusters_.size(); }
  std::size_t cluster_of(std::size_t object) const { return assignment_[object]; }
  const std::vector<std::size_t>& assignment() const { return assignment_; }
  const std::vector<std::size_t>& members(std::size_t cluster) const {
    return clusters_[cluster];
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.assignment_ == b.assignment_ && a.clusters_.size() == b.clusters_.size();
  }

 private:
  std::vector<std::size_t> assignment_;
  std::vector<std::vector<std::size_t>> clusters_;
};

// Throws kFrameMismatch when the masses do not share a frame.
DistanceMatrix distance_matrix(std::span<const MassFunction> masses);

// Mean distance from `object` to every member of `cluster`, itself included
// when it is a member. Throws kEmptyCluster.
double dissimilarity(std::size_t object, std::size_t cluster,
                     const DistanceMatrix& dm, const Partition& p);

struct ClusteringOptions {
  std::size_t max_passes = 100;
};

struct ClusteringOutcome {
  Partition partition;
  std::size_t passes = 0;
  bool converged = false;
};

// Member-based C-means over a precomputed distance matrix.
//
// Seeds are picked by farthest-point traversal: first the object with the
// largest summed distance, then repeatedly the object maximizing its minimum
// distance to the chosen seeds. Exact ties between candidates are broken with
// a generator seeded by `seed`. The remaining objects join their nearest
// seed, then whole passes reassign every object to the cluster of minimum
// dissimilarity (lowest index on ties) until nothing moves or
// `max_passes` is reached. An emptied cluster takes the object farthest from
// its own cluster. Throws kTooFewObjects unless n >= C >= 1.
ClusteringOutcome cluster_distance_matrix(const DistanceMatrix& dm,
                                          std::size_t n_clusters,
                                          std::uint64_t seed,
                                          const ClusteringOptions& options = {});

Partition cluster_masses(std::span<const MassFunction> masses,
                         std::size_t n_clusters, std::uint64_t seed);

// One batch pass over a partition; the result equals `p` when `p` is stable.
Partition reassignment_pass(const DistanceMatrix& dm, const Partition& p);

}  // namespace evindep

#endif  // EVINDEP_CLUSTERING_HPP_
