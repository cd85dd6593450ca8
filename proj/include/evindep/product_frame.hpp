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

#ifndef EVINDEP_PRODUCT_FRAME_HPP_
#define EVINDEP_PRODUCT_FRAME_HPP_

#include "evindep/dependence.hpp"
#include "evindep/mass.hpp"

namespace evindep {

// Product space Ω×Θ. Pair (ω_i, θ_j) is element i * |Θ| + j of the product
// frame, labelled "<ω_i>|<θ_j>". Product subsets are plain Subsets on that
// frame and need not be rectangles.
class ProductFrame {
 public:
  // Throws kInvalidFrame when |Ω|·|Θ| > 16.
  ProductFrame(Frame left, Frame right);

  const Frame& left() const { return left_; }
  const Frame& right() const { return right_; }
  const Frame& product() const { return product_; }

  Subset element(std::size_t left_index, std::size_t right_index) const {
    return Subset::singleton(left_index * right_.size() + right_index);
  }

  // A × X.
  Subset rectangle(Subset left_set, Subset right_set) const;

  // {ω : ∃θ, (ω, θ) ∈ s}.
  Subset project_left(Subset s) const;

 private:
  Frame left_;
  Frame right_;
  Frame product_;
};

using ProductSubset = Subset;

// Each focal X ⊆ Θ becomes Ω × X.
MassFunction vacuous_extension(const MassFunction& m_right,
                               const ProductFrame& pf);

// Ballooning extension of a mass over Ω conditional on `theta_true`: each
// focal A becomes (A × theta_true) ∪ (Ω × (Θ \ theta_true)).
MassFunction decondition_to_product(const MassFunction& m_conditional,
                                    Subset theta_true, const ProductFrame& pf);

// Projection of a product mass back onto Ω.
MassFunction marginalize_left(const MassFunction& m, const ProductFrame& pf);

// {F, Fbar}.
const Frame& reliability_frame();

// Discounting computed through Ω×{F,F̄}: extend the reliability mass,
// decondition m on F, combine conjunctively, marginalize. Agrees with
// discount().
MassFunction reliability_discount(const MassFunction& m, double alpha);

// Intermediate product masses of independence_adjust, on Ω×{I,P,P̄}.
struct AdjustmentTrace {
  ProductFrame frame;
  MassFunction extended;               // m^Pos lifted to Ω×Θ
  MassFunction deconditioned_indep;    // m[I] = m, deconditioned
  MassFunction deconditioned_neg;      // m[P̄] = categorical ∅, deconditioned
  MassFunction combined;               // conjunctive combination of the three
  MassFunction marginal;               // result on Ω
};

// Folds a dependence mass into m. The conditional on P is the vacuous mass,
// whose deconditioning is neutral for the conjunctive rule and is skipped.
MassFunction independence_adjust(const MassFunction& m,
                                 const DependenceMass& dependence);

AdjustmentTrace trace_independence_adjust(const MassFunction& m,
                                          const DependenceMass& dependence);

// Closed form of independence_adjust. With k = m(I) + m(I∪P̄):
//   m'(∅) = m(P̄) + k·m(∅),  m'(A) = k·m(A),
//   m'(Ω) = k·m(Ω) + m(P) + m(I∪P) + m(I∪P∪P̄).
MassFunction closed_form_adjust(const MassFunction& m,
                                const DependenceMass& dependence);

}  // namespace evindep

#endif  // EVINDEP_PRODUCT_FRAME_HPP_
