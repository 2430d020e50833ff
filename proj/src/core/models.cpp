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

#include "iprob/models.hpp"

#include <string>

#include "iprob/error.hpp"

namespace iprob {

IpccModel ipcc_model() {
  return ipcc_model({Rational(2, 100), Rational(8, 100), Rational(23, 100), Rational(33, 100),
                     Rational(24, 100), Rational(8, 100), Rational(2, 100)});
}

IpccModel ipcc_model(const std::vector<Rational>& weights) {
  const std::size_t m = weights.size();
  if (m < 1 || 2 * m > 64) throw Error(ErrorCode::kInvalidArgument, "scale needs 1 to 32 levels");
  std::vector<std::string> labels;
  std::vector<Rational> w;
  for (std::size_t j = 0; j < m; ++j) {
    labels.push_back("z" + std::to_string(j));
    labels.push_back("w" + std::to_string(j));
    w.push_back(weights[j]);
    w.push_back(Rational(0));
  }
  SpacePtr space = SampleSpace::make(labels);
  std::vector<Event> blocks;
  for (std::size_t j = 0; j < m; ++j) blocks.emplace_back(space, std::uint64_t{3} << (2 * j));
  Partition z = Partition::make(space, blocks);
  ProbMeasure p = ProbMeasure::make(space, std::move(w));
  std::vector<Event> h;
  for (std::size_t n = 0; n < m; ++n) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < n; ++i) mask |= blocks[i].mask();
    for (std::size_t j = n + 1; j < m; ++j) mask |= std::uint64_t{2} << (2 * j);
    h.emplace_back(space, mask);
  }
  return IpccModel{space, std::move(z), std::move(p), std::move(h)};
}

UmbrellaModel umbrella_model() {
  return umbrella_model({Rational(1, 5), Rational(3, 10), Rational(1, 4), Rational(1, 4)});
}

UmbrellaModel umbrella_model(const std::vector<Rational>& weights) {
  SpacePtr space = SampleSpace::make({"w01", "w10", "w00", "w11"});
  ProbMeasure p = ProbMeasure::make(space, weights);
  const Event w01 = Event::singleton(space, 0);
  const Event w10 = Event::singleton(space, 1);
  const Event w00 = Event::singleton(space, 2);
  const Event w11 = Event::singleton(space, 3);
  Partition z = Partition::make(space, {w01 | w10, w00 | w11});
  Partition z_alt = Partition::make(space, {w10, w01, w00 | w11});
  return UmbrellaModel{space, std::move(z), std::move(z_alt), std::move(p), w01, w10, w00, w11};
}

}  // namespace iprob
