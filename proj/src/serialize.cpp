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

#include "evindep/serialize.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "evindep/error.hpp"
#include "json.hpp"

namespace evindep {
namespace {

using nlohmann::json;

json focals_to_json(const MassFunction& m) {
  json focals = json::array();
  for (const auto& f : m.focals()) {
    focals.push_back({{"set", f.set.indices()}, {"mass", f.mass}});
  }
  return focals;
}

Frame frame_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParseError, "\"frame\" must be a list");
  return Frame(j.get<std::vector<std::string>>());
}

MassFunction mass_from_focals(const Frame& frame, const json& focals) {
  if (!focals.is_array()) {
    throw Error(ErrorCode::kParseError, "\"focals\" must be a list");
  }
  std::vector<std::pair<Subset, double>> assignments;
  for (const auto& f : focals) {
    Subset s;
    for (const auto& idx : f.at("set")) {
      const auto i = idx.get<std::int64_t>();
      if (i < 0 || static_cast<std::size_t>(i) >= frame.size()) {
        throw Error(ErrorCode::kSubsetOutOfRange,
                    "element index " + std::to_string(i) + " outside the frame");
      }
      if (s.contains(static_cast<std::size_t>(i))) {
        throw Error(ErrorCode::kParseError, "repeated element index in a set");
      }
      s = s | Subset::singleton(static_cast<std::size_t>(i));
    }
    assignments.emplace_back(s, f.at("mass").get<double>());
  }
  return MassFunction::make(frame, std::move(assignments));
}

template <typename Fn>
auto parsing(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

json dependence_to_json(const DependenceMass& d) {
  return {{"I", d.independent},      {"P", d.positive},
          {"Pbar", d.negative},      {"I_or_P", d.indep_or_pos},
          {"I_or_Pbar", d.indep_or_neg}, {"I_or_P_or_Pbar", d.ignorance}};
}

json matrix_to_json(const CorrespondenceMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json direction_to_json(const DirectionReport& d) {
  json pairs = json::array();
  for (const auto& l : d.links) {
    pairs.push_back({{"row", l.row},
                     {"col", l.col},
                     {"beta", l.beta},
                     {"alpha", l.alpha},
                     {"conf", l.conf ? json(*l.conf) : json(nullptr)}});
  }
  const bool first = d.referent == Referent::kFirst;
  return {{"referent", first ? "S1" : "S2"},
          {"other", first ? "S2" : "S1"},
          {"independence",
           {{"I", d.independence.independent},
            {"Ibar", d.independence.dependent},
            {"I_or_Ibar", d.independence.ignorance}}},
          {"dependence", dependence_to_json(d.dependence)},
          {"I_d", d.degrees.independence},
          {"Ibar_d", d.degrees.dependence},
          {"BetP",
           {{"I", d.dependence_degrees.independent},
            {"P", d.dependence_degrees.positive},
            {"Pbar", d.dependence_degrees.negative}}},
          {"pairs", std::move(pairs)}};
}

}  // namespace

std::string mass_to_json(const MassFunction& m, int indent) {
  json j = {{"frame", m.frame().labels()}, {"focals", focals_to_json(m)}};
  return j.dump(indent);
}

MassFunction mass_from_json(std::string_view text) {
  return parsing([&] {
    const json j = json::parse(text);
    return mass_from_focals(frame_from_json(j.at("frame")), j.at("focals"));
  });
}

std::string dataset_to_json(const Dataset& d, int indent) {
  json masses = json::array();
  for (std::size_t i = 0; i < d.masses.size(); ++i) {
    require_same_frame(d.frame, d.masses[i].frame());
    masses.push_back({{"object", i}, {"focals", focals_to_json(d.masses[i])}});
  }
  json j = {{"source", d.source},
            {"frame", d.frame.labels()},
            {"masses", std::move(masses)}};
  return j.dump(indent);
}

Dataset dataset_from_json(std::string_view text) {
  return parsing([&] {
    const json j = json::parse(text);
    Frame frame = frame_from_json(j.at("frame"));
    const json& records = j.at("masses");
    if (!records.is_array()) {
      throw Error(ErrorCode::kParseError, "\"masses\" must be a list");
    }
    std::vector<std::optional<MassFunction>> slots(records.size());
    for (std::size_t pos = 0; pos < records.size(); ++pos) {
      const json& rec = records[pos];
      const std::size_t object =
          rec.contains("object") ? rec.at("object").get<std::size_t>() : pos;
      if (object >= slots.size() || slots[object]) {
        throw Error(ErrorCode::kParseError,
                    "object indices must be 0..n-1 without repeats");
      }
      slots[object] = mass_from_focals(frame, rec.at("focals"));
    }
    Dataset d{j.value("source", std::string{}), frame, {}};
    d.masses.reserve(slots.size());
    for (auto& s : slots) d.masses.push_back(std::move(*s));
    return d;
  });
}

bool looks_like_dataset(std::string_view text) {
  return parsing([&] { return json::parse(text).contains("masses"); });
}

std::string report_to_json(const IndependenceReport& r, int indent) {
  json j = {{"n_objects", r.n_objects},
            {"clusters", r.n_clusters},
            {"partitions",
             {{"S1", r.first.assignment()}, {"S2", r.second.assignment()}}},
            {"correspondence",
             {{"M1", matrix_to_json(r.m1)}, {"M2", matrix_to_json(r.m2)}}},
            {"directions",
             {direction_to_json(r.forward), direction_to_json(r.backward)}}};
  return j.dump(indent);
}

std::string partition_to_text(const Partition& p) {
  std::ostringstream out;
  out << "clusters " << p.n_clusters() << '\n';
  for (std::size_t i = 0; i < p.n_objects(); ++i) {
    out << i << ' ' << p.cluster_of(i) << '\n';
  }
  return out.str();
}

Partition partition_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string keyword;
  std::size_t n_clusters = 0;
  if (!(in >> keyword >> n_clusters) || keyword != "clusters") {
    throw Error(ErrorCode::kParseError, "partition text must start with 'clusters <C>'");
  }
  std::vector<std::size_t> assignment;
  std::size_t object = 0, cluster = 0;
  while (in >> object >> cluster) {
    if (object != assignment.size()) {
      throw Error(ErrorCode::kParseError, "partition objects must be listed in order");
    }
    assignment.push_back(cluster);
  }
  if (!in.eof()) throw Error(ErrorCode::kParseError, "malformed partition line");
  return Partition(n_clusters, std::move(assignment));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file_atomic(const std::string& path, std::string_view content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + tmp + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error(ErrorCode::kIoError, "write failed for '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kIoError, "cannot replace '" + path + "'");
  }
}

}  // namespace evindep
