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

namespace nogo {

// Structural checks: normalization, unitarity, projector validity.
inline constexpr double kStructuralTol = 1e-10;
// Algebraic identities between exactly-specified matrices.
inline constexpr double kAlgebraicTol = 1e-12;
// Outcome cells with probability below this are never sampled.
inline constexpr double kDegenerateProb = 1e-15;
// Eigenvalues closer than this are merged into one eigenspace.
inline constexpr double kEigenGroupTol = 1e-9;
// Allowed deviation of a probability vector's sum from 1.
inline constexpr double kProbSumTol = 1e-9;

}  // namespace nogo
