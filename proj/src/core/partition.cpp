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

#include "iprob/partition.hpp"

#include <algorithm>

#include "iprob/error.hpp"

namespace iprob {

Partition::Partition(SpacePtr space, std::vector<Event> blocks, bool cover)
    : space_(std::move(space)), blocks_(std::move(blocks)), cover_(cover) {
  if (blocks_.empty()) throw Error(ErrorCode::kValidation, "partition needs at least one block");
  std::uint64_t seen = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Event& b = blocks_[i];
    require_same_space(space_, b.space());
    if (b.is_empty()) throw Error(ErrorCode::kValidation, "block " + std::to_string(i) + " is empty");
    if (!cover_ && (seen & b.mask())) {
      throw Error(ErrorCode::kValidation,
                  "block " + std::to_string(i) + " " + b.str() + " overlaps an earlier block");
    }
    seen |= b.mask();
    masks_.push_back(b.mask());
  }
  if (seen != space_->full_mask()) {
    throw Error(ErrorCode::kValidation,
                "blocks do not cover the sample space; missing " +
                    Event(space_, space_->full_mask() & ~seen).str());
  }
  if (!cover_) {
    owner_.assign(space_->size(), 0);
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      for (std::size_t w = 0; w < space_->size(); ++w) {
        if (blocks_[i].contains(w)) owner_[w] = i;
      }
    }
  }
}

Partition Partition::make(SpacePtr space, std::vector<Event> blocks) {
  return Partition(std::move(space), std::move(blocks), false);
}

Partition Partition::cover(SpacePtr space, std::vector<Event> blocks) {
  return Partition(std::move(space), std::move(blocks), true);
}

Partition Partition::from_labels(SpacePtr space, const std::vector<std::vector<std::string>>& blocks,
                                 bool is_cover) {
  std::vector<Event> events;
  events.reserve(blocks.size());
  for (const auto& b : blocks) events.push_back(Event::of(space, b));
  return Partition(std::move(space), std::move(events), is_cover);
}

Partition Partition::trivial(SpacePtr space) {
  auto full = Event::full(space);
  return Partition(std::move(space), {std::move(full)}, false);
}

Partition Partition::discrete(SpacePtr space) {
  std::vector<Event> blocks;
  for (std::size_t i = 0; i < space->size(); ++i) blocks.push_back(Event::singleton(space, i));
  return Partition(std::move(space), std::move(blocks), false);
}

std::size_t Partition::block_of(std::size_t outcome) const {
  if (cover_) throw Error(ErrorCode::kInvalidArgument, "block_of is undefined for a cover");
  return owner_.at(outcome);
}

std::uint64_t Partition::psi_mask(std::uint64_t h) const {
  const std::uint64_t hc = ~h & space_->full_mask();
  std::uint64_t out = 0;
  for (auto b : masks_) {
    if (h & b) out |= hc & b;
  }
  return out;
}

std::uint64_t Partition::uncertainty_mask(std::uint64_t h) const {
  if (!cover_) {
    std::uint64_t out = 0;
    for (auto b : masks_) {
      if (!(h & b)) out |= b;
    }
    return out;
  }
  // For a cover the residual H^c \ psi(H) is what remains; it is no longer a
  // union of blocks.
  return ~h & space_->full_mask() & ~psi_mask(h);
}

bool Partition::refines(const Partition& coarser) const {
  require_same_space(space_, coarser.space_);
  return std::all_of(masks_.begin(), masks_.end(), [&](std::uint64_t b) {
    return std::any_of(coarser.masks_.begin(), coarser.masks_.end(),
                       [&](std::uint64_t c) { return (b & ~c) == 0; });
  });
}

bool Partition::same_blocks(const Partition& other) const {
  if (!same_space(space_, other.space_)) return false;
  auto a = masks_;
  auto b = other.masks_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string Partition::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ", ";
    out += blocks_[i].str();
  }
  return out + "}";
}

}  // namespace iprob
