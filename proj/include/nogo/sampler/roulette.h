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

#include <cstddef>
#include <span>

namespace nogo {

/// Selects the cell of `probs` containing `r`.
///
/// Cell k is the half-open interval [c_{k-1}, c_k) of cumulative sums, so a
/// zero-probability cell can never be chosen. r = 1 (or any r at or beyond
/// the final cumulative sum) falls in the last cell of nonzero width.
/// Throws std::invalid_argument for r outside [0,1], a negative probability,
/// or a sum further than 1e-9 from 1.
std::size_t roulette(double r, std::span<const double> probs);

}  // namespace nogo
