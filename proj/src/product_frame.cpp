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

#include "evindep/product_frame.hpp"

#include <map>
#include <string>

#include "evindep/error.hpp"

namespace evindep {
namespace {

Frame make_product_labels(const Frame& left, const Frame& right) {
  if (left.size() * right.size() > kMaxFrameSize) {
    throw Error(ErrorCode::kInvalidFrame,
                "product frame of " + std::to_string(left.size()) + "x" +
                    std::to_string(right.size()) + " exceeds 16 elements");
  }
  std::vector<std::string> labels;
  labels.reserve(left.size() * right.size());
  for (const auto& l : left.labels()) {
    for (const auto& r : right.labels()) labels.push_back(l + "|" + r);
  }
  return Frame(std::move(labels));
}

MassFunction remap(const MassFunction& m, const Frame& target,
                   const auto& map_focal) {
  std::map<std::uint32_t, double> acc;
  for (const auto& f : m.focals()) acc[map_focal(f.set).bits] += f.mass;
  std::vector<Focal> focals;
  focals.reserve(acc.size());
  for (const auto& [bits, mass] : acc) focals.push_back({Subset{bits}, mass});
  return MassFunction::from_accumulated(target, std::move(focals));
}

}  // namespace

ProductFrame::ProductFrame(Frame left, Frame right)
    : left_(std::move(left)),
      right_(std::move(right)),
      product_(make_product_labels(left_, right_)) {}

Subset ProductFrame::rectangle(Subset left_set, Subset right_set) const {
  Subset out;
  for (std::size_t i : left_set.indices()) {
    for (std::size_t j : right_set.indices()) out = out | element(i, j);
  }
  return out;
}

Subset ProductFrame::project_left(Subset s) const {
  const std::uint32_t row_mask =
      static_cast<std::uint32_t>((std::uint64_t{1} << right_.size()) - 1);
  Subset out;
  for (std::size_t i = 0; i < left_.size(); ++i) {
    if ((s.bits >> (i * right_.size())) & row_mask) {
      out = out | Subset::singleton(i);
    }
  }
  return out;
}

MassFunction vacuous_extension(const MassFunction& m_right,
                               const ProductFrame& pf) {
  require_same_frame(m_right.frame(), pf.right());
  const Subset all = pf.left().full();
  return remap(m_right, pf.product(),
               [&](Subset x) { return pf.rectangle(all, x); });
}

MassFunction decondition_to_product(const MassFunction& m_conditional,
                                    Subset theta_true, const ProductFrame& pf) {
  require_same_frame(m_conditional.frame(), pf.left());
  if (theta_true.is_empty()) {
    throw Error(ErrorCode::kEmptyConditioner,
                "deconditioning needs a non-empty hypothesis on the right frame");
  }
  if (!pf.right().contains(theta_true)) {
    throw Error(ErrorCode::kSubsetOutOfRange, "hypothesis outside the right frame");
  }
  const Subset rest =
      pf.rectangle(pf.left().full(), pf.right().complement(theta_true));
  return remap(m_conditional, pf.product(), [&](Subset a) {
    return pf.rectangle(a, theta_true) | rest;
  });
}

MassFunction marginalize_left(const MassFunction& m, const ProductFrame& pf) {
  require_same_frame(m.frame(), pf.product());
  return remap(m, pf.left(), [&](Subset b) { return pf.project_left(b); });
}

const Frame& reliability_frame() {
  static const Frame frame({"F", "Fbar"});
  return frame;
}

MassFunction reliability_discount(const MassFunction& m, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::kAlphaOutOfRange,
                "reliability must lie in [0, 1], got " + std::to_string(alpha));
  }
  const Frame& rf = reliability_frame();
  const Subset reliable = Subset::singleton(0);
  const MassFunction m_reliability = MassFunction::from_accumulated(
      rf, {{reliable, alpha}, {rf.full(), 1.0 - alpha}});
  const ProductFrame pf(m.frame(), rf);
  const MassFunction combined =
      conjunctive(vacuous_extension(m_reliability, pf),
                  decondition_to_product(m, reliable, pf));
  return marginalize_left(combined, pf);
}

AdjustmentTrace trace_independence_adjust(const MassFunction& m,
                                          const DependenceMass& dependence) {
  dependence.validate();
  ProductFrame pf(m.frame(), dependence_frame());
  MassFunction extended = vacuous_extension(dependence.to_mass(), pf);
  MassFunction indep = decondition_to_product(
      m, Subset::singleton(kIndependent), pf);
  MassFunction neg = decondition_to_product(
      MassFunction::categorical(m.frame(), Subset::empty()),
      Subset::singleton(kNegative), pf);
  MassFunction combined = conjunctive(conjunctive(extended, indep), neg);
  MassFunction marginal = marginalize_left(combined, pf);
  return {std::move(pf),       std::move(extended), std::move(indep),
          std::move(neg),      std::move(combined), std::move(marginal)};
}

MassFunction independence_adjust(const MassFunction& m,
                                 const DependenceMass& dependence) {
  return trace_independence_adjust(m, dependence).marginal;
}

MassFunction closed_form_adjust(const MassFunction& m,
                                const DependenceMass& dependence) {
  dependence.validate();
  const double k = dependence.independent + dependence.indep_or_neg;
  std::map<std::uint32_t, double> acc;
  for (const auto& f : m.focals()) acc[f.set.bits] += k * f.mass;
  acc[0] += dependence.negative;
  acc[m.frame().full().bits] +=
      dependence.positive + dependence.indep_or_pos + dependence.ignorance;
  std::vector<Focal> focals;
  for (const auto& [bits, mass] : acc) focals.push_back({Subset{bits}, mass});
  return MassFunction::from_accumulated(m.frame(), std::move(focals));
}

}  // namespace evindep
