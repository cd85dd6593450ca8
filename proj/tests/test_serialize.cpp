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

#include <filesystem>

#include "evindep/datagen.hpp"
#include "evindep/error.hpp"
#include "evindep/serialize.hpp"
#include "json.hpp"
#include "test_util.hpp"

namespace {

using namespace evindep;
using namespace testutil;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

TEST(MassJson, Layout) {
  const auto j = nlohmann::json::parse(mass_to_json(m1()));
  EXPECT_EQ(j["frame"], nlohmann::json({"w1", "w2", "w3"}));
  ASSERT_EQ(j["focals"].size(), 3u);
  EXPECT_EQ(j["focals"][1]["set"], nlohmann::json({0, 1}));
  EXPECT_EQ(j["focals"][1]["mass"], 0.5);
}

TEST(MassJson, RoundTripIsExact) {
  Rng rng(4);
  for (const auto& m : random_masses(Frame::numbered(6), 100, rng)) {
    EXPECT_EQ(mass_from_json(mass_to_json(m)), m);
    EXPECT_EQ(mass_from_json(mass_to_json(m, 2)), m);
  }
  const auto conflict = conjunctive(m1(), MassFunction::categorical(frame3(), kW3));
  EXPECT_EQ(mass_from_json(mass_to_json(conflict)), conflict);
}

TEST(MassJson, Errors) {
  EXPECT_EQ(code_of([] { mass_from_json("{"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { mass_from_json(R"({"frame":["a"]})"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] {
              mass_from_json(R"({"frame":["a","b"],"focals":[{"set":[2],"mass":1}]})");
            }),
            ErrorCode::kSubsetOutOfRange);
  EXPECT_EQ(code_of([] {
              mass_from_json(R"({"frame":["a","b"],"focals":[{"set":[0],"mass":0.5}]})");
            }),
            ErrorCode::kNonUnitSum);
  EXPECT_EQ(code_of([] {
              mass_from_json(
                  R"({"frame":["a","b"],"focals":[{"set":[0],"mass":0.5},{"set":[0],"mass":0.5}]})");
            }),
            ErrorCode::kDuplicateSubset);
  EXPECT_EQ(code_of([] { mass_from_json(R"({"frame":["a","a"],"focals":[]})"); }),
            ErrorCode::kInvalidFrame);
}

TEST(DatasetJson, RoundTripAndOrdering) {
  GenConfig cfg;
  cfg.n = 20;
  const auto data = generate(cfg);
  const Dataset d{"S1", data.frame, data.first};
  const std::string text = dataset_to_json(d);
  EXPECT_TRUE(looks_like_dataset(text));
  EXPECT_FALSE(looks_like_dataset(mass_to_json(m1())));
  const Dataset back = dataset_from_json(text);
  EXPECT_EQ(back.source, "S1");
  EXPECT_EQ(back.frame, d.frame);
  EXPECT_EQ(back.masses, d.masses);

  const auto shuffled = dataset_from_json(
      R"({"frame":["a","b"],"masses":[{"object":1,"focals":[{"set":[1],"mass":1}]},)"
      R"({"object":0,"focals":[{"set":[0],"mass":1}]}]})");
  ASSERT_EQ(shuffled.masses.size(), 2u);
  EXPECT_EQ(shuffled.masses[0][Subset{0b01}], 1.0);
  EXPECT_EQ(code_of([] {
              dataset_from_json(
                  R"({"frame":["a"],"masses":[{"object":0,"focals":[{"set":[0],"mass":1}]},)"
                  R"({"object":0,"focals":[{"set":[0],"mass":1}]}]})");
            }),
            ErrorCode::kParseError);
}

TEST(ReportJson, HasBothDirections) {
  Rng rng(1);
  const auto list = random_masses(Frame::numbered(3), 20, rng);
  const auto j = nlohmann::json::parse(report_to_json(analyze(list, list, {})));
  ASSERT_EQ(j["directions"].size(), 2u);
  EXPECT_EQ(j["directions"][0]["referent"], "S1");
  EXPECT_EQ(j["directions"][1]["referent"], "S2");
  EXPECT_EQ(j["directions"][0]["I_d"], 0.0);
  EXPECT_EQ(j["directions"][1]["dependence"]["P"], 1.0);
  EXPECT_EQ(j["partitions"]["S1"].size(), 20u);
}

TEST(Files, AtomicWriteAndRead) {
  const auto dir = std::filesystem::temp_directory_path() / "evindep_serialize_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "mass.json").string();
  write_text_file_atomic(path, mass_to_json(m2()));
  EXPECT_EQ(mass_from_json(read_text_file(path)), m2());
  EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
  EXPECT_EQ(code_of([&] { read_text_file((dir / "missing.json").string()); }),
            ErrorCode::kIoError);
  std::filesystem::remove_all(dir);
}

}  // namespace
