// Copyright 2026 The iprob Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IPROB_SAMPLE_SPACE_HPP
#define IPROB_SAMPLE_SPACE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace iprob {

// Finite, ordered set of outcome labels. Outcome i is bit i of every Event
// over this space, so at most 64 outcomes are supported.
class SampleSpace {
 public:
  static constexpr std::size_t kMaxOutcomes = 64;

  // Labels must be non-empty and unique; 1 <= count <= kMaxOutcomes.
  static std::shared_ptr<const SampleSpace> make(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;
  std::uint64_t full_mask() const { return full_; }

  friend bool operator==(const SampleSpace& a, const SampleSpace& b) {
    return a.labels_ == b.labels_;
  }

 private:
  explicit SampleSpace(std::vector<std::string> labels);

  std::vector<std::string> labels_;
  std::uint64_t full_ = 0;
};

using SpacePtr = std::shared_ptr<const SampleSpace>;

// True when both pointers denote the same outcome list.
bool same_space(const SpacePtr& a, const SpacePtr& b);

// Throws Error(kSpaceMismatch) unless same_space(a, b).
void require_same_space(const SpacePtr& a, const SpacePtr& b);

// A subset of a sample space. Value type; cheap to copy.
class Event {
 public:
  Event(SpacePtr space, std::uint64_t mask);

  static Event empty(SpacePtr space) { return Event(std::move(space), 0); }
  static Event full(SpacePtr space);
  static Event singleton(SpacePtr space, std::size_t outcome);
  // Throws Error(kNotFound) for labels outside the space.
  static Event of(SpacePtr space, const std::vector<std::string>& labels);

  const SpacePtr& space() const { return space_; }
  std::uint64_t mask() const { return mask_; }
  bool contains(std::size_t outcome) const { return (mask_ >> outcome) & 1U; }
  bool is_empty() const { return mask_ == 0; }
  bool is_full() const;
  std::size_t count() const;

  Event complement() const;
  bool subset_of(const Event& other) const;
  bool intersects(const Event& other) const;

  std::vector<std::string> labels() const;
  // "{a,b}"; "{}" for the empty event.
  std::string str() const;

  friend Event operator|(const Event& a, const Event& b);
  friend Event operator&(const Event& a, const Event& b);
  // Set difference a \ b.
  friend Event operator-(const Event& a, const Event& b);
  friend bool operator==(const Event& a, const Event& b);

 private:
  SpacePtr space_;
  std::uint64_t mask_;
};

// Every event of the space, in increasing mask order. Enforces the
// exhaustive-enumeration cap.
std::vector<Event> all_events(const SpacePtr& space);

}  // namespace iprob

#endif  // IPROB_SAMPLE_SPACE_HPP
