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

#ifndef EVINDEP_FRAME_HPP_
#define EVINDEP_FRAME_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

namespace evindep {

inline constexpr std::size_t kMaxFrameSize = 16;

// A subset of a frame of discernment, bit i set when element i belongs to it.
struct Subset {
  std::uint32_t bits = 0;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t b) : bits(b) {}

  static constexpr Subset empty() { return Subset{}; }
  static constexpr Subset singleton(std::size_t index) {
    return Subset{std::uint32_t{1} << index};
  }
  static Subset of(std::initializer_list<std::size_t> indices);

  constexpr bool is_empty() const { return bits == 0; }
  constexpr int cardinality() const { return std::popcount(bits); }
  constexpr bool contains(std::size_t index) const {
    return (bits >> index) & 1u;
  }
  constexpr bool is_subset_of(Subset other) const {
    return (bits & ~other.bits) == 0;
  }

  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset{a.bits & b.bits};
  }
  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset{a.bits | b.bits};
  }
  friend constexpr auto operator<=>(Subset, Subset) = default;

  // Sorted element indices.
  std::vector<std::size_t> indices() const;
};

// Ordered, labelled frame of discernment with 1..16 elements. Copies share
// the label storage.
class Frame {
 public:
  explicit Frame(std::vector<std::string> labels);

  // Frame with labels w1..wn.
  static Frame numbered(std::size_t size);

  std::size_t size() const { return labels_->size(); }
  const std::vector<std::string>& labels() const { return *labels_; }
  const std::string& label(std::size_t index) const {
    return (*labels_)[index];
  }

  Subset full() const {
    return Subset{static_cast<std::uint32_t>((std::uint64_t{1} << size()) - 1)};
  }
  std::uint64_t powerset_size() const { return std::uint64_t{1} << size(); }
  bool contains(Subset s) const { return s.is_subset_of(full()); }
  Subset complement(Subset s) const { return Subset{full().bits & ~s.bits}; }

  // Throws kInvalidArgument when the label is unknown.
  std::size_t index_of(const std::string& label) const;

  // "{w1,w2}"; the empty set renders as "{}".
  std::string format(Subset s) const;

  friend bool operator==(const Frame& a, const Frame& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

// Throws kFrameMismatch unless both frames are equal.
void require_same_frame(const Frame& a, const Frame& b);

}  // namespace evindep

#endif  // EVINDEP_FRAME_HPP_
