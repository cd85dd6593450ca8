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

#ifndef EVINDEP_DEPENDENCE_HPP_
#define EVINDEP_DEPENDENCE_HPP_

#include "evindep/mass.hpp"

namespace evindep {

// Elements of the dependence frame {I, P, P̄}, in frame order.
inline constexpr std::size_t kIndependent = 0;
inline constexpr std::size_t kPositive = 1;
inline constexpr std::size_t kNegative = 2;

// {I, P, Pbar}: independence, positive dependence, negative dependence.
const Frame& dependence_frame();

// {I, Ibar}: independence and dependence.
const Frame& independence_frame();

// Mass over {I, Ī}.
struct IndependenceMass {
  double independent = 0.0;  // m(I)
  double dependent = 0.0;    // m(Ī)
  double ignorance = 0.0;    // m(I ∪ Ī)

  // Throws kNegativeMass / kNonUnitSum.
  void validate() const;
  MassFunction to_mass() const;

  friend bool operator==(const IndependenceMass&,
                         const IndependenceMass&) = default;
};

// Mass over {I, P, P̄} restricted to the focal sets produced by the
// estimator. Ī is the refinement P ∪ P̄.
struct DependenceMass {
  double independent = 0.0;     // m(I)
  double positive = 0.0;        // m(P)
  double negative = 0.0;        // m(P̄)
  double indep_or_pos = 0.0;    // m(I ∪ P)
  double indep_or_neg = 0.0;    // m(I ∪ P̄)
  double ignorance = 0.0;       // m(I ∪ P ∪ P̄)

  // alpha: reliability, beta: dependence rate, gamma: negative part of the
  // dependence (plays the role of the inter-cluster conflict).
  static DependenceMass from_parameters(double alpha, double beta, double gamma);

  // Accepts any mass on the dependence frame whose focals are among the six
  // above; throws kInvalidArgument otherwise.
  static DependenceMass from_mass(const MassFunction& m);

  void validate() const;
  MassFunction to_mass() const;

  friend bool operator==(const DependenceMass&, const DependenceMass&) = default;
};

}  // namespace evindep

#endif  // EVINDEP_DEPENDENCE_HPP_
