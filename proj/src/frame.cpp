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

#include "evindep/frame.hpp"

#include <algorithm>
#include <set>

#include "evindep/error.hpp"

namespace evindep {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNonUnitSum: return "NonUnitSum";
    case ErrorCode::kNegativeMass: return "NegativeMass";
    case ErrorCode::kDuplicateSubset: return "DuplicateSubset";
    case ErrorCode::kSubsetOutOfRange: return "SubsetOutOfRange";
    case ErrorCode::kFrameMismatch: return "FrameMismatch";
    case ErrorCode::kEmptyList: return "EmptyList";
    case ErrorCode::kEmptyConditioner: return "EmptyConditioner";
    case ErrorCode::kFocalOutsideConditioner: return "FocalOutsideConditioner";
    case ErrorCode::kAlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::kTotalConflict: return "TotalConflict";
    case ErrorCode::kEmptyCluster: return "EmptyCluster";
    case ErrorCode::kTooFewObjects: return "TooFewObjects";
    case ErrorCode::kPartitionMismatch: return "PartitionMismatch";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNotADerangement: return "NotADerangement";
    case ErrorCode::kInvalidFrame: return "InvalidFrame";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Subset Subset::of(std::initializer_list<std::size_t> indices) {
  Subset s;
  for (std::size_t i : indices) {
    if (i >= kMaxFrameSize) {
      throw Error(ErrorCode::kSubsetOutOfRange,
                  "element index " + std::to_string(i) + " is out of range");
    }
    s.bits |= std::uint32_t{1} << i;
  }
  return s;
}

std::vector<std::size_t> Subset::indices() const {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(cardinality()));
  for (std::uint32_t b = bits; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

Frame::Frame(std::vector<std::string> labels) {
  if (labels.empty() || labels.size() > kMaxFrameSize) {
    throw Error(ErrorCode::kInvalidFrame,
                "frame must have between 1 and 16 elements, got " +
                    std::to_string(labels.size()));
  }
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw Error(ErrorCode::kInvalidFrame, "empty frame label");
    if (!seen.insert(l).second) {
      throw Error(ErrorCode::kInvalidFrame, "duplicate frame label '" + l + "'");
    }
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

Frame Frame::numbered(std::size_t size) {
  std::vector<std::string> labels;
  labels.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    labels.push_back("w" + std::to_string(i + 1));
  }
  return Frame(std::move(labels));
}

std::size_t Frame::index_of(const std::string& label) const {
  auto it = std::find(labels_->begin(), labels_->end(), label);
  if (it == labels_->end()) {
    throw Error(ErrorCode::kInvalidArgument, "unknown frame label '" + label + "'");
  }
  return static_cast<std::size_t>(it - labels_->begin());
}

std::string Frame::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : s.indices()) {
    if (!first) out += ',';
    out += i < size() ? label(i) : "#" + std::to_string(i);
    first = false;
  }
  out += '}';
  return out;
}

void require_same_frame(const Frame& a, const Frame& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::kFrameMismatch,
                "mass functions are defined on different frames");
  }
}

}  // namespace evindep
