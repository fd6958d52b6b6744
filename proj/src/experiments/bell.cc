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

#include "nogo/experiments/bell.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nogo/sampler/measurement.h"

namespace nogo {

StateVector bell_state() {
  const double s = 1.0 / std::sqrt(2.0);
  return StateVector::from_values({2, 2}, {0.0, s, -s, 0.0});
}

std::size_t bell_cell(int alice, int bob) {
  if ((alice != 1 && alice != -1) || (bob != 1 && bob != -1)) {
    throw std::invalid_argument("Bell outcomes are +1 or -1");
  }
  return (alice == 1 ? 0u : 1u) + (bob == 1 ? 0u : 2u);
}

BellProbs bell_joint_probs(const BlochVector& a, const BlochVector& b) {
  const double ab = a.dot(b);
  return {0.25 * (1.0 - ab), 0.25 * (1.0 + ab), 0.25 * (1.0 + ab), 0.25 * (1.0 - ab)};
}

namespace {

ProjectorSet axis_pair(const BlochVector& a) {
  return ProjectorSet::create({axis_projector(a), axis_projector(-a)}, {1.0, -1.0});
}

}  // namespace

ProjectorSet bell_product_set(const BlochVector& a, const BlochVector& b) {
  return product(axis_pair(a), axis_pair(b));
}

BellProbs bell_joint_probs_born(const BlochVector& a, const BlochVector& b) {
  const Operator rho = density(bell_state());
  const ProjectorSet cells = bell_product_set(a, b);
  BellProbs p{};
  for (std::size_t k = 0; k < 4; ++k) {
    p[k] = trace_prob(cells[k], rho);
  }
  return p;
}

double bell_correlator(const BlochVector& a, const BlochVector& b) { return -a.dot(b); }

double correlator_from_probs(const BellProbs& p) { return p[0] - p[1] - p[2] + p[3]; }

BellInequality bell_original_inequality(const BlochVector& a, const BlochVector& b,
                                        const BlochVector& c) {
  const double lhs = std::abs(bell_correlator(a, b) - bell_correlator(a, c));
  const double rhs = 1.0 - bell_correlator(b, c);
  return {lhs, rhs, lhs > rhs};
}

double chsh(const BlochVector& a, const BlochVector& b, const BlochVector& c,
            const BlochVector& d) {
  return bell_correlator(a, b) + bell_correlator(b, c) + bell_correlator(c, d) -
         bell_correlator(d, a);
}

namespace {

// S for coplanar axes at angles 0, t1, t2, t3: E = -cos(difference).
double coplanar_chsh(double t1, double t2, double t3) {
  return -std::cos(t1) - std::cos(t2 - t1) - std::cos(t3 - t2) + std::cos(t3);
}

}  // namespace

ChshScanResult chsh_scan(int steps) {
  if (steps < 4) {
    throw std::invalid_argument("chsh_scan needs at least 4 steps");
  }
  const double step = 2.0 * std::numbers::pi / steps;
  std::vector<double> cosine(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    cosine[static_cast<std::size_t>(k)] = std::cos(k * step);
  }
  const auto cos_at = [&](int k) {
    k %= steps;
    if (k < 0) k += steps;
    return cosine[static_cast<std::size_t>(k)];
  };

  double best = -1.0;
  std::array<int, 3> best_idx{0, 0, 0};
  for (int i = 0; i < steps; ++i) {
    const double e_ab = cos_at(i);
    for (int j = 0; j < steps; ++j) {
      const double e_bc = cos_at(j - i);
      for (int k = 0; k < steps; ++k) {
        const double s = std::abs(-e_ab - e_bc - cos_at(k - j) + cos_at(k));
        if (s > best) {
          best = s;
          best_idx = {i, j, k};
        }
      }
    }
  }

  std::array<double, 3> t{best_idx[0] * step, best_idx[1] * step, best_idx[2] * step};
  double h = step;
  for (int pass = 0; pass < 3; ++pass) {
    h *= 0.5;
    const std::array<double, 3> center = t;
    for (int di = -2; di <= 2; ++di) {
      for (int dj = -2; dj <= 2; ++dj) {
        for (int dk = -2; dk <= 2; ++dk) {
          const std::array<double, 3> c{center[0] + di * h, center[1] + dj * h,
                                        center[2] + dk * h};
          const double s = std::abs(coplanar_chsh(c[0], c[1], c[2]));
          if (s > best) {
            best = s;
            t = c;
          }
        }
      }
    }
  }
  const auto wrap = [](double angle) {
    const double two_pi = 2.0 * std::numbers::pi;
    angle = std::fmod(angle, two_pi);
    return angle < 0.0 ? angle + two_pi : angle;
  };
  return ChshScanResult{best, {0.0, wrap(t[0]), wrap(t[1]), wrap(t[2])}};
}

double local_deterministic_chsh_max() {
  double best = 0.0;
  for (int mask = 0; mask < 16; ++mask) {
    std::array<int, 4> v{};
    for (int k = 0; k < 4; ++k) {
      v[static_cast<std::size_t>(k)] = (mask >> k) & 1 ? -1 : 1;
    }
    const double s = v[0] * v[1] + v[1] * v[2] + v[2] * v[3] - v[3] * v[0];
    best = std::max(best, std::abs(s));
  }
  return best;
}

BellTrialOutcome bell_trial(const BlochVector& a, const BlochVector& b, BellMode mode,
                            SeededRng& rng) {
  const StateVector singlet = bell_state();
  const Dims dims{2, 2};
  if (mode == BellMode::simultaneous) {
    const MeasurementOutcome out = measure_projective(singlet, bell_product_set(a, b), rng);
    const int alice = out.index % 2 == 0 ? 1 : -1;
    const int bob = out.index / 2 == 0 ? 1 : -1;
    return {alice, bob, out.index};
  }
  const std::size_t left[] = {0};
  const std::size_t right[] = {1};
  const ProjectorSet p_left = lift(axis_pair(a), left, dims);
  const ProjectorSet p_right = lift(axis_pair(b), right, dims);
  int alice = 0;
  int bob = 0;
  if (mode == BellMode::left_then_right) {
    const MeasurementOutcome first = measure_projective(singlet, p_left, rng);
    const MeasurementOutcome second = measure_projective(first.post_state, p_right, rng);
    alice = static_cast<int>(first.label);
    bob = static_cast<int>(second.label);
  } else {
    const MeasurementOutcome first = measure_projective(singlet, p_right, rng);
    const MeasurementOutcome second = measure_projective(first.post_state, p_left, rng);
    bob = static_cast<int>(first.label);
    alice = static_cast<int>(second.label);
  }
  return {alice, bob, bell_cell(alice, bob)};
}

}  // namespace nogo
