// Copyright 2026 The nogosim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace nogo {

/// The splitmix64 output function (avalanche step).
std::uint64_t mix64(std::uint64_t z);

/// Seed for trial `index` of a run with `master_seed`. Independent of the
/// order in which trials are executed.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index);

/// xoshiro256** seeded by four splitmix64 outputs of `seed`.
///
/// The stream is fully determined by the seed on every platform. Satisfies
/// UniformRandomBitGenerator. Single owner; never share one across threads.
class SeededRng {
 public:
  using result_type = std::uint64_t;

  explicit SeededRng(std::uint64_t seed);
  static SeededRng for_trial(std::uint64_t master_seed, std::uint64_t index) {
    return SeededRng(derive_seed(master_seed, index));
  }

  std::uint64_t seed() const noexcept { return seed_; }

  result_type operator()();
  /// Uniform double in [0, 1) built from the top 53 bits of the next draw.
  double uniform();

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

 private:
  std::uint64_t seed_;
  std::array<std::uint64_t, 4> state_;
};

}  // namespace nogo
