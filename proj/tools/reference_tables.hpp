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

// Reference tables for the worked examples reproduced by `evindep reproduce`
// and checked by the acceptance suite. Cells are the printed values; blank
// cells are stored as 0.
#ifndef EVINDEP_TOOLS_REFERENCE_TABLES_HPP_
#define EVINDEP_TOOLS_REFERENCE_TABLES_HPP_

#include <array>
#include <cstddef>
#include <cstdint>

namespace evindep::reference {

// Frame {w1, w2, w3}; bit i is w(i+1).
inline constexpr std::uint32_t kEmpty = 0b000;
inline constexpr std::uint32_t kW1 = 0b001;
inline constexpr std::uint32_t kW2 = 0b010;
inline constexpr std::uint32_t kW1W2 = 0b011;
inline constexpr std::uint32_t kOmega = 0b111;

struct Cell {
  std::uint32_t set;
  double mass;
};

inline constexpr std::array<Cell, 3> kM1{{{kW1, 0.2}, {kW1W2, 0.5}, {kOmega, 0.3}}};
inline constexpr std::array<Cell, 3> kM2{{{kW2, 0.1}, {kW1W2, 0.6}, {kOmega, 0.3}}};

inline constexpr std::array<Cell, 5> kConjunctiveBaseline{
    {{kEmpty, 0.02}, {kW1, 0.18}, {kW2, 0.08}, {kW1W2, 0.63}, {kOmega, 0.09}}};

// Dependence mass over {I, P, Pbar} used in the product-frame example.
inline constexpr double kExampleI = 0.26;
inline constexpr double kExampleP = 0.56;
inline constexpr double kExamplePbar = 0.18;

// Product-frame rows: the right part is a bitmask over {I, P, Pbar} attached
// to each left subset; a row is the union of its rectangles.
struct Rectangle {
  std::uint32_t left;
  std::uint32_t right;
};

inline constexpr std::uint32_t kI = 0b001;
inline constexpr std::uint32_t kP = 0b010;
inline constexpr std::uint32_t kPbar = 0b100;
inline constexpr std::uint32_t kTheta = 0b111;

struct ProductRow {
  const char* name;
  std::array<Rectangle, 2> parts;  // right == 0 marks an unused part
  std::array<double, 4> columns;   // extended, m[I], m[Pbar], combined
};

inline constexpr std::array<ProductRow, 12> kProductTable{{
    {"{}", {{{0, 0}, {0, 0}}}, {0, 0, 0, 0.18}},
    {"w1 x I", {{{kW1, kI}, {0, 0}}}, {0, 0, 0, 0.052}},
    {"(w1 u w2) x I", {{{kW1W2, kI}, {0, 0}}}, {0, 0, 0, 0.13}},
    {"Omega x I", {{{kOmega, kI}, {0, 0}}}, {0.26, 0, 0, 0.078}},
    {"Omega x P", {{{kOmega, kP}, {0, 0}}}, {0.56, 0, 0, 0.56}},
    {"(w1 x I) u (Omega x P)", {{{kW1, kI}, {kOmega, kP}}}, {0, 0, 0, 0}},
    {"((w1 u w2) x I) u (Omega x P)", {{{kW1W2, kI}, {kOmega, kP}}}, {0, 0, 0, 0}},
    {"Omega x Pbar", {{{kOmega, kPbar}, {0, 0}}}, {0.18, 0, 0, 0}},
    {"Omega x (I u P)", {{{kOmega, kI | kP}, {0, 0}}}, {0, 0, 1, 0}},
    {"(w1 x I) u (Omega x (P u Pbar))", {{{kW1, kI}, {kOmega, kP | kPbar}}}, {0, 0.2, 0, 0}},
    {"((w1 u w2) x I) u (Omega x (P u Pbar))", {{{kW1W2, kI}, {kOmega, kP | kPbar}}}, {0, 0.5, 0, 0}},
    {"Omega x Theta", {{{kOmega, kTheta}, {0, 0}}}, {0, 0.3, 0, 0}},
}};

// Marginal of the adjusted m1 and its combination with m2.
inline constexpr std::array<Cell, 5> kAdjustedM1{
    {{kEmpty, 0.18}, {kW1, 0.052}, {kW2, 0}, {kW1W2, 0.13}, {kOmega, 0.638}}};
inline constexpr std::array<Cell, 5> kAdjustedM1CombinedM2{
    {{kEmpty, 0.25432}, {kW1, 0.0468}, {kW2, 0.00768}, {kW1W2, 0.15528}, {kOmega, 0.53592}}};

// Combination table: rows of each block are {}, w1, w2, w1 u w2, Omega.
inline constexpr std::array<std::uint32_t, 5> kCombinationRows{kEmpty, kW1, kW2, kW1W2, kOmega};

struct Parameters {
  double alpha;
  double beta;
  double gamma;
};

inline constexpr std::array<Parameters, 3> kSourceICases{
    {{0.95, 0.95, 0.05}, {0.95, 0.05, 0.95}, {0.95, 0.05, 0.05}}};
inline constexpr std::array<Parameters, 3> kSourceJCases{
    {{0.9, 0.9, 0.1}, {0.9, 0.1, 0.9}, {0.9, 0.1, 0.1}}};

using Column = std::array<double, 5>;

inline constexpr std::array<Column, 3> kAdjustedI{{
    {0.045125, 0.01, 0, 0.025, 0.919875},
    {0.045125, 0.19, 0, 0.475, 0.289875},
    {0.002375, 0.181, 0, 0.4525, 0.364125},
}};

// Identical in every block.
inline constexpr std::array<Column, 3> kAdjustedJ{{
    {0.081, 0, 0.01, 0.06, 0.849},
    {0.081, 0, 0.09, 0.54, 0.289},
    {0.009, 0, 0.082, 0.492, 0.417},
}};

// [source i case][source j case]
inline constexpr std::array<std::array<Column, 3>, 3> kCombined{{
    {{
        {0.12257, 0.00909, 0.0779175, 0.07138, 0.780974},
        {0.12337, 0.00829, 0.0850388, 0.517457, 0.265844},
        {0.0545389, 0.00909, 0.0774798, 0.475303, 0.383588},
    }},
    {{
        {0.12437, 0.17271, 0.00764875, 0.449167, 0.246104},
        {0.13957, 0.15751, 0.0688388, 0.550307, 0.0837739},
        {0.0692989, 0.17271, 0.0627198, 0.574394, 0.120878},
    }},
    {{
        {0.0849926, 0.164529, 0.00816625, 0.43317, 0.309142},
        {0.0994726, 0.150049, 0.0734962, 0.57175, 0.105232},
        {0.0261956, 0.164529, 0.0669633, 0.590472, 0.15184},
    }},
}};

// Six significant digits, truncated in a few cells.
inline constexpr double kPrintedTolerance = 5e-7 + 1e-12;

// Source-dependence regimes on generated data: n = 100, |Omega| = 5, C = 5.
inline constexpr std::uint64_t kRegimeSeed = 4;
inline constexpr std::size_t kRegimeObjects = 100;
inline constexpr std::size_t kRegimeFrameSize = 5;
inline constexpr std::size_t kRegimeSeedCount = 10;
inline constexpr double kRegimeMeanLow = 0.55;
inline constexpr double kRegimeMeanHigh = 0.9;

// Published run, for display only: independence degree per direction and
// (I, P, Pbar) per direction for the dependent scenarios.
inline constexpr std::array<double, 2> kPublishedIndependence{0.72, 0.66};
inline constexpr std::array<std::array<double, 3>, 2> kPublishedPositive{
    {{0.26, 0.56, 0.18}, {0.35, 0.5, 0.15}}};
inline constexpr std::array<std::array<double, 3>, 2> kPublishedNegative{
    {{0.35, 0.25, 0.4}, {0.38, 0.18, 0.44}}};

}  // namespace evindep::reference

#endif  // EVINDEP_TOOLS_REFERENCE_TABLES_HPP_
