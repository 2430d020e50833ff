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

#ifndef IPROB_PARTITION_HPP
#define IPROB_PARTITION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iprob/sample_space.hpp"

namespace iprob {

// Ordered list of non-empty blocks whose union is the whole space. A proper
// partition has pairwise disjoint blocks. A cover may overlap; complementation
// built from a cover is weak but not guaranteed regular.
class Partition {
 public:
  static Partition make(SpacePtr space, std::vector<Event> blocks);
  static Partition cover(SpacePtr space, std::vector<Event> blocks);
  static Partition from_labels(SpacePtr space, const std::vector<std::vector<std::string>>& blocks,
                               bool is_cover = false);
  // {Omega}
  static Partition trivial(SpacePtr space);
  // Every outcome in its own block.
  static Partition discrete(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  const std::vector<Event>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  const Event& block(std::size_t i) const { return blocks_.at(i); }
  bool is_cover() const { return cover_; }

  // Index of the block holding `outcome`. Proper partitions only.
  std::size_t block_of(std::size_t outcome) const;

  // Mask-level kernels of the complementation operations.
  std::uint64_t psi_mask(std::uint64_t h) const;
  std::uint64_t uncertainty_mask(std::uint64_t h) const;

  // True when every block of *this sits inside some block of `coarser`.
  bool refines(const Partition& coarser) const;

  // Same set of blocks, ignoring order.
  bool same_blocks(const Partition& other) const;

  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.cover_ == b.cover_ && a.blocks_ == b.blocks_;
  }

 private:
  Partition(SpacePtr space, std::vector<Event> blocks, bool cover);

  SpacePtr space_;
  std::vector<Event> blocks_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::size_t> owner_;
  bool cover_ = false;
};

}  // namespace iprob

#endif  // IPROB_PARTITION_HPP
