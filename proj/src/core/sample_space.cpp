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

#include "iprob/sample_space.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>

#include "iprob/error.hpp"

namespace iprob {

int exhaustive_outcome_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("IPROB_MAX_EXHAUSTIVE")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0') return static_cast<int>(std::clamp(v, 1L, 30L));
    }
    return 16;
  }();
  return cap;
}

int triple_scan_outcome_cap() { return std::min(12, exhaustive_outcome_cap()); }

void require_budget(std::size_t n, int cap, const char* what) {
  if (n > static_cast<std::size_t>(cap)) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::string(what) + ": " + std::to_string(n) + " outcomes exceeds the exhaustive cap of " +
                    std::to_string(cap));
  }
}

SampleSpace::SampleSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  full_ = labels_.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << labels_.size()) - 1);
}

std::shared_ptr<const SampleSpace> SampleSpace::make(std::vector<std::string> labels) {
  if (labels.empty()) throw Error(ErrorCode::kValidation, "sample space needs at least one outcome");
  if (labels.size() > kMaxOutcomes) {
    throw Error(ErrorCode::kValidation, "sample space is limited to 64 outcomes");
  }
  std::set<std::string_view> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw Error(ErrorCode::kValidation, "empty outcome label");
    if (!seen.insert(l).second) throw Error(ErrorCode::kValidation, "duplicate outcome label \"" + l + "\"");
  }
  return std::shared_ptr<const SampleSpace>(new SampleSpace(std::move(labels)));
}

std::optional<std::size_t> SampleSpace::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
  if (!same_space(a, b)) throw Error(ErrorCode::kSpaceMismatch, "operands live on different sample spaces");
}

Event::Event(SpacePtr space, std::uint64_t mask) : space_(std::move(space)), mask_(mask) {
  if (!space_) throw Error(ErrorCode::kInvalidArgument, "event without a sample space");
  if (mask_ & ~space_->full_mask()) {
    throw Error(ErrorCode::kInvalidArgument, "event mentions outcomes outside its sample space");
  }
}

Event Event::full(SpacePtr space) {
  const auto m = space->full_mask();
  return Event(std::move(space), m);
}

Event Event::singleton(SpacePtr space, std::size_t outcome) {
  if (outcome >= space->size()) throw Error(ErrorCode::kInvalidArgument, "outcome index out of range");
  return Event(std::move(space), std::uint64_t{1} << outcome);
}

Event Event::of(SpacePtr space, const std::vector<std::string>& labels) {
  std::uint64_t m = 0;
  for (const auto& l : labels) {
    auto i = space->index_of(l);
    if (!i) throw Error(ErrorCode::kNotFound, "unknown outcome label \"" + l + "\"");
    m |= std::uint64_t{1} << *i;
  }
  return Event(std::move(space), m);
}

bool Event::is_full() const { return mask_ == space_->full_mask(); }

std::size_t Event::count() const { return static_cast<std::size_t>(std::popcount(mask_)); }

Event Event::complement() const { return Event(space_, ~mask_ & space_->full_mask()); }

bool Event::subset_of(const Event& other) const {
  require_same_space(space_, other.space_);
  return (mask_ & ~other.mask_) == 0;
}

bool Event::intersects(const Event& other) const {
  require_same_space(space_, other.space_);
  return (mask_ & other.mask_) != 0;
}

std::vector<std::string> Event::labels() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < space_->size(); ++i) {
    if (contains(i)) out.push_back(space_->label(i));
  }
  return out;
}

std::string Event::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& l : labels()) {
    if (!first) out += ",";
    out += l;
    first = false;
  }
  return out + "}";
}

Event operator|(const Event& a, const Event& b) {
  require_same_space(a.space_, b.space_);
  return Event(a.space_, a.mask_ | b.mask_);
}

Event operator&(const Event& a, const Event& b) {
  require_same_space(a.space_, b.space_);
  return Event(a.space_, a.mask_ & b.mask_);
}

Event operator-(const Event& a, const Event& b) {
  require_same_space(a.space_, b.space_);
  return Event(a.space_, a.mask_ & ~b.mask_);
}

bool operator==(const Event& a, const Event& b) {
  return a.mask_ == b.mask_ && same_space(a.space_, b.space_);
}

std::vector<Event> all_events(const SpacePtr& space) {
  require_budget(space->size(), exhaustive_outcome_cap(), "event enumeration");
  std::vector<Event> out;
  const std::uint64_t full = space->full_mask();
  out.reserve(static_cast<std::size_t>(full) + 1);
  for (std::uint64_t m = 0;; ++m) {
    out.emplace_back(space, m);
    if (m == full) break;
  }
  return out;
}

}  // namespace iprob
