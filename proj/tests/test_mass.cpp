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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "evindep/error.hpp"
#include "evindep/frame.hpp"
#include "evindep/mass.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace {

using namespace evindep;
using namespace testutil;

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no evindep::Error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(Frame, ValidatesLabels) {
  EXPECT_EQ(code_of([] { Frame(std::vector<std::string>{}); }), ErrorCode::kInvalidFrame);
  EXPECT_EQ(code_of([] { Frame({"a", "a"}); }), ErrorCode::kInvalidFrame);
  EXPECT_EQ(code_of([] { Frame({"a", ""}); }), ErrorCode::kInvalidFrame);
  EXPECT_EQ(code_of([] { Frame::numbered(17); }), ErrorCode::kInvalidFrame);
  EXPECT_EQ(Frame::numbered(16).size(), 16u);
}

TEST(Frame, SubsetAlgebra) {
  const Frame f = Frame::numbered(3);
  EXPECT_EQ(f.full().bits, 0b111u);
  EXPECT_EQ(f.complement(kW1).bits, 0b110u);
  EXPECT_EQ(Subset::of({0, 2}).bits, 0b101u);
  EXPECT_EQ(f.format(kW1W2), "{w1,w2}");
  EXPECT_EQ(f.format(Subset::empty()), "{}");
  EXPECT_TRUE(kW1.is_subset_of(kW1W2));
  EXPECT_FALSE(kW3.is_subset_of(kW1W2));
  EXPECT_EQ(kW1W2.cardinality(), 2);
  EXPECT_EQ(f.index_of("w2"), 1u);
  EXPECT_FALSE(f.contains(Subset{0b1000}));
}

TEST(MakeMass, VacuousFromFullFrame) {
  const auto m = MassFunction::make(frame3(), {{kOmega3, 1.0}});
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m.focals()[0].set, kOmega3);
  EXPECT_EQ(m, MassFunction::vacuous(frame3()));
}

TEST(MakeMass, AcceptsWorkedExample) {
  const auto m = m1();
  EXPECT_EQ(m.size(), 3u);
  EXPECT_DOUBLE_EQ(m[kW1W2], 0.5);
  EXPECT_DOUBLE_EQ(m[kW2], 0.0);
}

TEST(MakeMass, Errors) {
  EXPECT_EQ(code_of([] { MassFunction::make(frame3(), {{kW1, 0.5}, {kW2, 0.4}}); }),
            ErrorCode::kNonUnitSum);
  EXPECT_EQ(code_of([] { MassFunction::make(frame3(), {{kW1, -0.1}, {kW2, 1.1}}); }),
            ErrorCode::kNegativeMass);
  EXPECT_EQ(code_of([] { MassFunction::make(frame3(), {{kW1, 0.5}, {kW1, 0.5}}); }),
            ErrorCode::kDuplicateSubset);
  EXPECT_EQ(code_of([] { MassFunction::make(frame3(), {{Subset{0b1000}, 1.0}}); }),
            ErrorCode::kSubsetOutOfRange);
  EXPECT_EQ(code_of([] { MassFunction::make(frame3(), {}); }), ErrorCode::kEmptyList);
}

TEST(MakeMass, DropsZerosAndKeepsEmptySet) {
  const auto m = MassFunction::make(
      frame3(), {{kW1, 0.0}, {Subset::empty(), 0.25}, {kOmega3, 0.75}});
  EXPECT_EQ(m.size(), 2u);
  EXPECT_DOUBLE_EQ(m[Subset::empty()], 0.25);
}

TEST(Conjunctive, WorkedExample) {
  expect_mass(conjunctive(m1(), m2()),
              {{Subset::empty(), 0.02}, {kW1, 0.18}, {kW2, 0.08}, {kW1W2, 0.63},
               {kOmega3, 0.09}},
              1e-12);
}

TEST(Conjunctive, VacuousIsNeutral) {
  EXPECT_EQ(conjunctive(m1(), MassFunction::vacuous(frame3())), m1());
}

TEST(Conjunctive, FrameMismatch) {
  const auto other = MassFunction::vacuous(Frame::numbered(4));
  EXPECT_EQ(code_of([&] { conjunctive(m1(), other); }), ErrorCode::kFrameMismatch);
}

TEST(Conjunctive, MatchesEnumerationOracle) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto a = oracle::random_mass(frame3(), rng, true);
    const auto b = oracle::random_mass(frame3(), rng, true);
    expect_dense(conjunctive(a, b), oracle::conjunctive(oracle::dense(a), oracle::dense(b)),
                 1e-12);
  }
}

TEST(Disjunctive, EmptyCategoricalIsNeutral) {
  const auto empty = MassFunction::categorical(frame3(), Subset::empty());
  EXPECT_EQ(disjunctive(m1(), empty), m1());
}

TEST(Disjunctive, WorkedExampleMatchesOracle) {
  const auto d = disjunctive(m1(), m2());
  expect_mass(d, {{kW1W2, 0.49}, {kOmega3, 0.51}}, 1e-12);
  expect_dense(d, oracle::disjunctive(oracle::dense(m1()), oracle::dense(m2())), 1e-12);
}

TEST(Disjunctive, CategoricalUnion) {
  const auto d = disjunctive(MassFunction::categorical(frame3(), kW1),
                             MassFunction::categorical(frame3(), kW2));
  expect_mass(d, {{kW1W2, 1.0}}, 0.0);
}

TEST(Disjunctive, MatchesEnumerationOracle) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const auto a = oracle::random_mass(frame3(), rng, true);
    const auto b = oracle::random_mass(frame3(), rng, true);
    expect_dense(disjunctive(a, b), oracle::disjunctive(oracle::dense(a), oracle::dense(b)),
                 1e-12);
  }
}

TEST(Mean, WorkedExample) {
  const std::vector<MassFunction> both{m1(), m2()};
  expect_mass(mean_combine(both),
              {{kW1, 0.1}, {kW2, 0.05}, {kW1W2, 0.55}, {kOmega3, 0.3}}, 1e-12);
}

TEST(Mean, IdempotentAndPermutationInvariant) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const auto m = oracle::random_mass(frame3(), rng);
    const std::vector<MassFunction> same(5, m);
    EXPECT_EQ(mean_combine(same), m);

    std::vector<MassFunction> list;
    for (int i = 0; i < 5; ++i) list.push_back(oracle::random_mass(frame3(), rng));
    const auto ref = mean_combine(list);
    std::shuffle(list.begin(), list.end(), rng);
    EXPECT_EQ(mean_combine(list), ref);
  }
}

TEST(Mean, Errors) {
  EXPECT_EQ(code_of([] { mean_combine(std::vector<MassFunction>{}); }),
            ErrorCode::kEmptyList);
  const std::vector<MassFunction> mixed{m1(), MassFunction::vacuous(Frame::numbered(2))};
  EXPECT_EQ(code_of([&] { mean_combine(mixed); }), ErrorCode::kFrameMismatch);
}

TEST(Condition, Examples) {
  EXPECT_EQ(condition(m1(), kOmega3), m1());
  expect_mass(condition(m1(), kW1W2), {{kW1, 0.2}, {kW1W2, 0.8}}, 1e-12);
  EXPECT_EQ(code_of([] { condition(m1(), Subset::empty()); }),
            ErrorCode::kEmptyConditioner);
}

TEST(Condition, EqualsConjunctionWithCategorical) {
  std::mt19937_64 rng(14);
  const Frame f = Frame::numbered(4);
  for (int t = 0; t < 300; ++t) {
    const auto m = oracle::random_mass(f, rng, true);
    const Subset a{static_cast<std::uint32_t>(1 + rng() % 15)};
    EXPECT_EQ(condition(m, a), conjunctive(m, MassFunction::categorical(f, a)));
    expect_dense(condition(m, a), oracle::condition(oracle::dense(m), a.bits), 1e-12);
  }
}

TEST(Decondition, Examples) {
  const auto c = MassFunction::make(frame3(), {{kW1, 0.2}, {kW1W2, 0.8}});
  expect_mass(decondition(c, kW1W2), {{Subset{0b101}, 0.2}, {kOmega3, 0.8}}, 1e-12);
  EXPECT_EQ(decondition(m1(), kOmega3), m1());
  EXPECT_EQ(code_of([] { decondition(m1(), kW1W2); }),
            ErrorCode::kFocalOutsideConditioner);
}

TEST(Decondition, RoundTripAndOracle) {
  std::mt19937_64 rng(15);
  const Frame f = Frame::numbered(4);
  for (int t = 0; t < 300; ++t) {
    const Subset a{static_cast<std::uint32_t>(1 + rng() % 15)};
    const auto c = condition(oracle::random_mass(f, rng, true), a);
    const auto d = decondition(c, a);
    EXPECT_EQ(condition(d, a), c);
    expect_dense(d, oracle::decondition(oracle::dense(c), a.bits), 1e-12);
  }
}

TEST(Discount, Examples) {
  EXPECT_EQ(discount(m1(), 1.0), m1());
  EXPECT_EQ(discount(m1(), 0.0), MassFunction::vacuous(frame3()));
  expect_mass(discount(m1(), 0.9), {{kW1, 0.18}, {kW1W2, 0.45}, {kOmega3, 0.37}}, 1e-12);
  EXPECT_EQ(code_of([] { discount(m1(), 1.5); }), ErrorCode::kAlphaOutOfRange);
  EXPECT_EQ(code_of([] { discount(m1(), -0.1); }), ErrorCode::kAlphaOutOfRange);
}

TEST(Discount, MatchesOracle) {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 200; ++t) {
    const auto m = oracle::random_mass(frame3(), rng, true);
    const double alpha = std::uniform_real_distribution<double>(0, 1)(rng);
    expect_dense(discount(m, alpha), oracle::discount(oracle::dense(m), alpha), 1e-12);
  }
}

TEST(Pignistic, Examples) {
  const auto p = pignistic(m1());
  EXPECT_NEAR(p.probs[0], 0.55, 1e-12);
  EXPECT_NEAR(p.probs[1], 0.35, 1e-12);
  EXPECT_NEAR(p.probs[2], 0.10, 1e-12);
  EXPECT_DOUBLE_EQ(pignistic(MassFunction::categorical(frame3(), kW1)).probs[0], 1.0);
  for (double v : pignistic(MassFunction::vacuous(Frame::numbered(5))).probs)
    EXPECT_NEAR(v, 0.2, 1e-15);
  EXPECT_EQ(code_of([] {
              pignistic(MassFunction::categorical(frame3(), Subset::empty()));
            }),
            ErrorCode::kTotalConflict);
}

TEST(Pignistic, RenormalizesConflictAndMatchesOracle) {
  std::mt19937_64 rng(17);
  const Frame f = Frame::numbered(4);
  for (int t = 0; t < 200; ++t) {
    const auto m = oracle::random_mass(f, rng, true);
    if (m[Subset::empty()] > 0.99) continue;
    const auto p = pignistic(m);
    const auto want = oracle::pignistic(oracle::dense(m), 4);
    double total = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      EXPECT_NEAR(p.probs[i], want[i], 1e-12);
      total += p.probs[i];
    }
    EXPECT_NEAR(total, 1.0, 1e-9);
  }
}

TEST(Jousselme, Examples) {
  EXPECT_EQ(jousselme(m1(), m1()), 0.0);
  EXPECT_NEAR(jousselme(MassFunction::categorical(frame3(), kW1),
                        MassFunction::categorical(frame3(), kW2)),
              1.0, 1e-15);
  const auto other = MassFunction::vacuous(Frame::numbered(4));
  EXPECT_EQ(code_of([&] { jousselme(m1(), other); }), ErrorCode::kFrameMismatch);
}

TEST(Jousselme, MatchesQuadraticFormOracle) {
  std::mt19937_64 rng(18);
  for (int t = 0; t < 300; ++t) {
    const auto a = oracle::random_mass(frame3(), rng, true);
    const auto b = oracle::random_mass(frame3(), rng, true);
    EXPECT_NEAR(jousselme(a, b), oracle::jousselme(oracle::dense(a), oracle::dense(b)),
                1e-12);
  }
}

TEST(Jousselme, MetricAxioms) {
  std::mt19937_64 rng(19);
  const Frame f = Frame::numbered(4);
  for (int t = 0; t < 1000; ++t) {
    const auto a = oracle::random_mass(f, rng, true);
    const auto b = oracle::random_mass(f, rng, true);
    const auto c = oracle::random_mass(f, rng, true);
    const double ab = jousselme(a, b), ba = jousselme(b, a);
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0);
    EXPECT_EQ(ab, ba);
    EXPECT_NEAR(jousselme(a, a), 0.0, 1e-12);
    if (!(a == b)) EXPECT_GT(ab, 0.0);
    EXPECT_LE(ab, jousselme(a, c) + jousselme(c, b) + 1e-12);
  }
}

TEST(Properties, CommutativeAndAssociative) {
  std::mt19937_64 rng(20);
  const Frame f = Frame::numbered(4);
  for (int t = 0; t < 300; ++t) {
    const auto a = oracle::random_mass(f, rng, true);
    const auto b = oracle::random_mass(f, rng, true);
    const auto c = oracle::random_mass(f, rng, true);
    expect_dense(conjunctive(a, b), oracle::dense(conjunctive(b, a)), 1e-12);
    expect_dense(disjunctive(a, b), oracle::dense(disjunctive(b, a)), 1e-12);
    expect_dense(conjunctive(conjunctive(a, b), c),
                 oracle::dense(conjunctive(a, conjunctive(b, c))), 1e-12);
    expect_dense(disjunctive(disjunctive(a, b), c),
                 oracle::dense(disjunctive(a, disjunctive(b, c))), 1e-12);
  }
}

TEST(Properties, EveryOperationStaysNormalized) {
  std::mt19937_64 rng(21);
  const Frame f = Frame::numbered(4);
  for (int t = 0; t < 300; ++t) {
    const auto a = oracle::random_mass(f, rng, true);
    const auto b = oracle::random_mass(f, rng, true);
    const Subset s{static_cast<std::uint32_t>(1 + rng() % 15)};
    const double alpha = std::uniform_real_distribution<double>(0, 1)(rng);
    const std::vector<MassFunction> list{a, b};
    for (const auto& m : {conjunctive(a, b), disjunctive(a, b), mean_combine(list),
                          condition(a, s), decondition(condition(a, s), s),
                          discount(a, alpha)}) {
      EXPECT_NEAR(m.total(), 1.0, 1e-9);
      for (const auto& focal : m.focals()) EXPECT_GT(focal.mass, 0.0);
    }
  }
}

}  // namespace
