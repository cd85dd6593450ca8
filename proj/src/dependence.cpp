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

#include "evindep/dependence.hpp"

#include <cmath>
#include <string>

#include "evindep/error.hpp"

namespace evindep {
namespace {

constexpr Subset kI = Subset::singleton(kIndependent);
constexpr Subset kP = Subset::singleton(kPositive);
constexpr Subset kN = Subset::singleton(kNegative);

void check_parameter(const char* name, double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorCode::kAlphaOutOfRange,
                std::string(name) + " must lie in [0, 1], got " + std::to_string(v));
  }
}

void check_components(std::initializer_list<double> values) {
  double sum = 0.0;
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::kNegativeMass, "dependence masses must be >= 0");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kMassTolerance) {
    throw Error(ErrorCode::kNonUnitSum,
                "dependence masses sum to " + std::to_string(sum));
  }
}

}  // namespace

const Frame& dependence_frame() {
  static const Frame frame({"I", "P", "Pbar"});
  return frame;
}

const Frame& independence_frame() {
  static const Frame frame({"I", "Ibar"});
  return frame;
}

void IndependenceMass::validate() const {
  check_components({independent, dependent, ignorance});
}

MassFunction IndependenceMass::to_mass() const {
  const Frame& f = independence_frame();
  return MassFunction::make(f, {{Subset::singleton(0), independent},
                                {Subset::singleton(1), dependent},
                                {f.full(), ignorance}});
}

DependenceMass DependenceMass::from_parameters(double alpha, double beta,
                                               double gamma) {
  check_parameter("alpha", alpha);
  check_parameter("beta", beta);
  check_parameter("gamma", gamma);
  DependenceMass d;
  d.independent = alpha * (1.0 - beta);
  d.positive = alpha * beta * (1.0 - gamma);
  d.negative = alpha * beta * gamma;
  d.indep_or_pos = (1.0 - alpha) * (1.0 - gamma);
  d.indep_or_neg = (1.0 - alpha) * gamma;
  return d;
}

DependenceMass DependenceMass::from_mass(const MassFunction& m) {
  require_same_frame(m.frame(), dependence_frame());
  DependenceMass d;
  for (const auto& f : m.focals()) {
    if (f.set == kI) d.independent = f.mass;
    else if (f.set == kP) d.positive = f.mass;
    else if (f.set == kN) d.negative = f.mass;
    else if (f.set == (kI | kP)) d.indep_or_pos = f.mass;
    else if (f.set == (kI | kN)) d.indep_or_neg = f.mass;
    else if (f.set == (kI | kP | kN)) d.ignorance = f.mass;
    else {
      throw Error(ErrorCode::kInvalidArgument,
                  "focal " + m.frame().format(f.set) +
                      " is not a dependence-mass focal set");
    }
  }
  return d;
}

void DependenceMass::validate() const {
  check_components(
      {independent, positive, negative, indep_or_pos, indep_or_neg, ignorance});
}

MassFunction DependenceMass::to_mass() const {
  return MassFunction::make(dependence_frame(),
                            {{kI, independent},
                             {kP, positive},
                             {kN, negative},
                             {kI | kP, indep_or_pos},
                             {kI | kN, indep_or_neg},
                             {kI | kP | kN, ignorance}});
}

}  // namespace evindep
