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

#include "nogo/sampler/roulette.h"

#include <cmath>
#include <stdexcept>

#include "nogo/core/tolerance.h"

namespace nogo {

std::size_t roulette(double r, std::span<const double> probs) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw std::invalid_argument("roulette variate must lie in [0, 1]");
  }
  if (probs.empty()) {
    throw std::invalid_argument("roulette needs at least one cell");
  }
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw std::invalid_argument("roulette probability must be non-negative");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kProbSumTol) {
    throw std::invalid_argument("roulette probabilities must sum to 1");
  }

  double cumulative = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (probs[k] > 0.0) {
      last_nonzero = k;
      if (r < cumulative + probs[k]) {
        return k;
      }
    }
    cumulative += probs[k];
  }
  return last_nonzero;
}

}  // namespace nogo
