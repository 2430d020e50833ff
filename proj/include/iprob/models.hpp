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

#ifndef IPROB_MODELS_HPP
#define IPROB_MODELS_HPP

#include <vector>

#include "iprob/measure.hpp"
#include "iprob/partition.hpp"

namespace iprob {

// Seven-level likelihood scale. Block Z_j = {z_j, w_j} where w_j is a
// zero-weight outcome, and
//   H_n = Z_0 u ... u Z_{n-1} u {w_j : j > n},
// so H_n touches every block but Z_n and Q(H_n) = [P(Z_<n), P(Z_<=n)].
struct IpccModel {
  SpacePtr space;
  Partition z;
  ProbMeasure p;
  std::vector<Event> h;
};

// weights are the block masses; they must sum to 1. Default
// 2, 8, 23, 33, 24, 8, 2 percent.
IpccModel ipcc_model();
IpccModel ipcc_model(const std::vector<Rational>& weights);

// Outcomes w01, w10, w00, w11 (barometer, clouds). Z = {{w01, w10}, {w00, w11}}
// splits discordant from agreeing readings; z_alt = {{w10}, {w01}, {w00, w11}}.
struct UmbrellaModel {
  SpacePtr space;
  Partition z;
  Partition z_alt;
  ProbMeasure p;
  Event w01, w10, w00, w11;
};

// Default P = (1/5, 3/10, 1/4, 1/4) in outcome order.
UmbrellaModel umbrella_model();
UmbrellaModel umbrella_model(const std::vector<Rational>& weights);

}  // namespace iprob

#endif  // IPROB_MODELS_HPP
