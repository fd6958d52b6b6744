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

#include "nogo/cli/runner.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "nogo/cli/catalog.h"
#include "nogo/cli/frequency_test.h"
#include "nogo/cli/serialize.h"
#include "nogo/core/gates.h"
#include "nogo/core/operator.h"
#include "nogo/experiments/bell.h"
#include "nogo/experiments/conway_kochen.h"
#include "nogo/experiments/dht.h"
#include "nogo/experiments/ks_color.h"
#include "nogo/qubit/bloch.h"
#include "nogo/sampler/measurement.h"
#include "nogo/sampler/seeded_rng.h"
#include "nogo/spin1/frame3.h"
#include "nogo/spin1/spin1.h"

namespace nogo::cli {

namespace {

constexpr double kRadiansPerDegree = std::numbers::pi / 180.0;
constexpr std::uint64_t kMaxQuantumContrastTrials = 10000;

class Params {
 public:
  Params(const ExperimentInfo& info, const std::vector<std::pair<std::string, std::string>>& given)
      : info_(info) {
    for (const auto& [key, value] : given) {
      const bool known = std::any_of(info.params.begin(), info.params.end(),
                                     [&key](const ParamSpec& p) { return p.name == key; });
      if (!known) {
        std::string names;
        for (const ParamSpec& p : info.params) {
          names += (names.empty() ? "" : ", ") + p.name;
        }
        throw InvalidParameterError("unknown parameter '" + key + "' for " + info.name +
                                    " (expected one of: " + names + ")");
      }
      if (values_.count(key) != 0) {
        throw InvalidParameterError("parameter '" + key + "' given more than once");
      }
      values_[key] = value;
    }
  }

  const std::string& get(const std::string& name) const {
    const auto it = values_.find(name);
    if (it != values_.end()) {
      return it->second;
    }
    for (const ParamSpec& p : info_.params) {
      if (p.name == name) return p.default_value;
    }
    throw std::logic_error("parameter '" + name + "' missing from the catalog");
  }

  std::vector<std::pair<std::string, std::string>> resolved() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const ParamSpec& p : info_.params) {
      out.emplace_back(p.name, get(p.name));
    }
    return out;
  }

 private:
  const ExperimentInfo& info_;
  std::map<std::string, std::string> values_;
};

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const auto last = text.find_last_not_of(" \t");
  return text.substr(first, last - first + 1);
}

double parse_decimal(const std::string& text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw InvalidParameterError("not a number: '" + text + "'");
  }
  return value;
}

// Wraps domain constructors so their validation errors surface as parameter errors.
template <typename F>
auto checked(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InvalidParameterError&) {
    throw;
  } catch (const std::exception& e) {
    throw InvalidParameterError("invalid " + what + ": " + e.what());
  }
}

Axis parse_axis_param(const std::string& text) {
  return checked("axis '" + text + "'", [&] { return parse_axis(text); });
}

Frame3 parse_frame(const std::string& text) {
  if (text == "identity") {
    return Frame3::identity();
  }
  const std::string prefix = "zyz:";
  if (text.rfind(prefix, 0) != 0) {
    throw InvalidParameterError("frame must be 'identity' or 'zyz:ALPHA,BETA,GAMMA': '" + text +
                                "'");
  }
  const std::vector<double> deg = parse_number_list(text.substr(prefix.size()), 3);
  return Frame3::from_euler_zyz(deg[0] * kRadiansPerDegree, deg[1] * kRadiansPerDegree,
                                deg[2] * kRadiansPerDegree);
}

Eigen::Vector3d parse_real_vector(const std::string& text) {
  const std::vector<double> v = parse_number_list(text, 3);
  Eigen::Vector3d out(v[0], v[1], v[2]);
  if (out.norm() == 0.0) {
    throw InvalidParameterError("vector must be nonzero: '" + text + "'");
  }
  return out.normalized();
}

BellMode parse_mode(const std::string& text) {
  if (text == "simultaneous") return BellMode::simultaneous;
  if (text == "left-then-right") return BellMode::left_then_right;
  if (text == "right-then-left") return BellMode::right_then_left;
  throw InvalidParameterError("mode must be simultaneous, left-then-right or right-then-left: '" +
                              text + "'");
}

AxisOrder parse_order(const std::string& text) {
  if (text.size() != 3) {
    throw InvalidParameterError("order must name three axes, such as xyz: '" + text + "'");
  }
  AxisOrder order{};
  for (std::size_t i = 0; i < 3; ++i) {
    order[i] = parse_axis_param(std::string(1, text[i]));
  }
  checked("order '" + text + "'", [&] {
    validate_axis_order(order);
    return 0;
  });
  return order;
}

std::string order_name(const AxisOrder& order) {
  return {axis_name(order[0]), axis_name(order[1]), axis_name(order[2])};
}

// Number of t in [0, n) with t % groups == k.
std::uint64_t group_share(std::uint64_t n, std::uint64_t k, std::uint64_t groups) {
  return n / groups + (k < n % groups ? 1 : 0);
}

void require_groups(std::uint64_t trials, std::uint64_t groups, const std::string& experiment) {
  if (trials < groups) {
    throw InvalidParameterError(experiment + " needs at least " + std::to_string(groups) +
                                " trials");
  }
}

TestResult bound_test(std::string name, double value, double expected, double threshold) {
  TestResult t;
  t.name = std::move(name);
  t.value = value;
  t.expected = expected;
  t.statistic = std::abs(value - expected);
  t.threshold = threshold;
  t.pass = t.statistic <= threshold;
  return t;
}

// Passes iff value exceeds the bound.
TestResult exceeds_test(std::string name, double value, double bound) {
  TestResult t;
  t.name = std::move(name);
  t.value = value;
  t.expected = bound;
  t.statistic = value - bound;
  t.threshold = 0.0;
  t.pass = t.statistic > 0.0;
  return t;
}

void append(std::vector<TestResult>& into, std::vector<TestResult> more) {
  into.insert(into.end(), std::make_move_iterator(more.begin()),
              std::make_move_iterator(more.end()));
}

// One group of a round-robin experiment: outcome cells sampled on `trials`
// of the N trials, with conditional probabilities `probs`.
struct Group {
  std::string name;
  std::vector<std::string> labels;
  std::vector<double> probs;
  std::vector<std::uint64_t> counts;
  std::uint64_t trials = 0;
};

void add_groups(ExperimentReport& report, const std::vector<Group>& groups) {
  const double n = static_cast<double>(report.trials);
  for (const Group& g : groups) {
    const double weight = static_cast<double>(g.trials) / n;
    for (std::size_t k = 0; k < g.labels.size(); ++k) {
      const std::string label = g.name.empty() ? g.labels[k] : g.name + ":" + g.labels[k];
      report.analytic.emplace_back(label, weight * g.probs[k]);
      report.empirical.emplace_back(label, static_cast<double>(g.counts[k]) / n);
    }
  }
  for (const Group& g : groups) {
    append(report.tests,
           frequency_test(g.counts, g.probs, g.trials, g.labels, g.name.empty() ? "freq" : g.name));
  }
}

StateVector real_state(const Eigen::Vector3d& v) {
  return StateVector::from_values({3}, {v.x(), v.y(), v.z()});
}

// ---------------------------------------------------------------------------

void run_ks_color(const Params& params, ExperimentReport& report) {
  const Eigen::Vector3d sv = parse_real_vector(params.get("state"));
  const Eigen::Vector3d fv = parse_real_vector(params.get("filter"));
  const Frame3 frame = parse_frame(params.get("frame"));
  require_groups(report.trials, 3, report.experiment);

  const ColorState s = ColorState::create(sv.x(), sv.y(), sv.z());
  const ColorState f = ColorState::create(fv.x(), fv.y(), fv.z());
  const std::array<double, 3> frame_probs = ks_frame_probs(s, frame);
  const double p_filter = ks_filter_prob(s, f);
  const std::array<double, 4> n_yes = ks_independent_yes(frame_probs[0], frame_probs[1],
                                                         frame_probs[2]);

  const StateVector s3 = real_state(sv);
  const StateVector f3 = real_state(fv);
  const std::vector<StateVector> basis = {real_state(frame.column(0)), real_state(frame.column(1)),
                                          real_state(frame.column(2))};

  Group g_frame{"frame", {"x", "y", "z"}, {frame_probs.begin(), frame_probs.end()}, {0, 0, 0},
                group_share(report.trials, 0, 3)};
  Group g_filter{"filter", {"yes", "no"}, {p_filter, 1.0 - p_filter}, {0, 0},
                 group_share(report.trials, 1, 3)};
  Group g_yes{"n_yes", {"0", "1", "2", "3"}, {n_yes.begin(), n_yes.end()}, {0, 0, 0, 0},
              group_share(report.trials, 2, 3)};

  for (std::uint64_t t = 0; t < report.trials; ++t) {
    SeededRng rng = SeededRng::for_trial(report.seed, t);
    switch (t % 3) {
      case 0:
        ++g_frame.counts[measure_basis(s3, basis, rng).index];
        break;
      case 1:
        ++g_filter.counts[measure_filter(s3, f3, rng).yes ? 0 : 1];
        break;
      default: {
        std::size_t yes = 0;
        for (const StateVector& axis : basis) {
          yes += measure_filter(s3, axis, rng).yes ? 1 : 0;
        }
        ++g_yes.counts[yes];
        break;
      }
    }
  }
  add_groups(report, {g_frame, g_filter, g_yes});

  report.tests.push_back(bound_test("frame_prob_sum",
                                    frame_probs[0] + frame_probs[1] + frame_probs[2], 1.0,
                                    kAlgebraicTol));
  report.tests.push_back(
      bound_test("filter_prob_born", p_filter, std::norm(inner(f3, s3)), kAlgebraicTol));
  report.tests.push_back(
      bound_test("n_yes_sum", n_yes[0] + n_yes[1] + n_yes[2] + n_yes[3], 1.0, kAlgebraicTol));
}

void run_ks_spin1_order(const Params& params, ExperimentReport& report) {
  const Eigen::Vector3d k = parse_real_vector(params.get("state"));
  const std::string order_text = params.get("order");
  const double theta = parse_number(params.get("theta")) * kRadiansPerDegree;
  std::vector<AxisOrder> orders;
  if (order_text == "all") {
    const auto all = all_axis_orders();
    orders.assign(all.begin(), all.end());
  } else {
    orders.push_back(parse_order(order_text));
  }
  require_groups(report.trials, orders.size(), report.experiment);

  const StateVector s = real_state(k);
  std::vector<JsqTriple> triples;
  std::vector<std::string> labels;
  for (int kv = 1; kv <= 3; ++kv) {
    const JsqTriple tr = k_value_to_jsq_triple(kv);
    triples.push_back(tr);
    labels.push_back("J2=(" + std::to_string(tr[0]) + "," + std::to_string(tr[1]) + "," +
                     std::to_string(tr[2]) + ")");
  }
  const auto probs_of = [&triples](const std::map<JsqTriple, double>& dist) {
    std::vector<double> p(triples.size(), 0.0);
    for (std::size_t i = 0; i < triples.size(); ++i) {
      const auto it = dist.find(triples[i]);
      if (it != dist.end()) p[i] = it->second;
    }
    return p;
  };

  const std::map<JsqTriple, double> reference = sequential_jsq_distribution(s, orders.front());
  const std::vector<double> probs = probs_of(reference);
  double max_gap = 0.0;
  for (const AxisOrder& order : all_axis_orders()) {
    const std::map<JsqTriple, double> dist = sequential_jsq_distribution(s, order);
    for (const auto& [triple, p] : dist) {
      const auto it = reference.find(triple);
      max_gap = std::max(max_gap, std::abs(p - (it == reference.end() ? 0.0 : it->second)));
    }
    for (const auto& [triple, p] : reference) {
      if (dist.count(triple) == 0) max_gap = std::max(max_gap, p);
    }
  }
  double off_shell = 0.0;
  for (const auto& [triple, p] : reference) {
    if (triple[0] + triple[1] + triple[2] != 2) off_shell += p;
  }

  std::vector<std::vector<std::uint64_t>> per_order(orders.size(),
                                                    std::vector<std::uint64_t>(triples.size(), 0));
  std::uint64_t off_shell_hits = 0;
  for (std::uint64_t t = 0; t < report.trials; ++t) {
    SeededRng rng = SeededRng::for_trial(report.seed, t);
    const std::size_t o = static_cast<std::size_t>(t % orders.size());
    const JsqTriple triple = sequential_jsq_measure(s, orders[o], rng).triple;
    const auto it = std::find(triples.begin(), triples.end(), triple);
    if (it == triples.end()) {
      ++off_shell_hits;
    } else {
      ++per_order[o][static_cast<std::size_t>(it - triples.begin())];
    }
  }

  Group total{"", labels, probs, std::vector<std::uint64_t>(triples.size(), 0), report.trials};
  for (const auto& counts : per_order) {
    for (std::size_t i = 0; i < counts.size(); ++i) total.counts[i] += counts[i];
  }
  const double n = static_cast<double>(report.trials);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    report.analytic.emplace_back(labels[i], probs[i]);
    report.empirical.emplace_back(labels[i], static_cast<double>(total.counts[i]) / n);
  }
  if (off_shell_hits == 0) {
    append(report.tests, frequency_test(total.counts, probs, report.trials, labels, "freq"));
  }
  if (orders.size() > 1) {
    for (std::size_t o = 0; o < orders.size(); ++o) {
      std::uint64_t n_o = 0;
      for (std::uint64_t c : per_order[o]) n_o += c;
      if (n_o == group_share(report.trials, o, orders.size())) {
        append(report.tests, frequency_test(per_order[o], probs, n_o, labels,
                                            "order " + order_name(orders[o])));
      }
    }
  }

  report.tests.push_back(bound_test("order_independence", max_gap, 0.0, kAlgebraicTol));
  report.tests.push_back(bound_test("analytic_sum_to_2", off_shell, 0.0, kAlgebraicTol));
  report.tests.push_back(
      bound_test("sampled_sum_to_2", static_cast<double>(off_shell_hits), 0.0, 0.0));
  const double p_x0 = born_probabilities(s, jsq_projector_set(Axis::x))[0];
  const double p_x0_rotated = born_probabilities(s, jsq_projector_set(Axis::x,
                                                                      rotation_about_x(theta)))[0];
  report.tests.push_back(bound_test("jx2_zero_frame_independent", p_x0_rotated, p_x0,
                                    kAlgebraicTol));
}

struct BellPair {
  std::string name;
  BlochVector a;
  BlochVector b;
};

std::vector<BlochVector> parse_axes(const Params& params, std::size_t count) {
  const std::vector<double> azimuth = parse_number_list(params.get("angles"), count);
  const std::vector<double> polar = parse_number_list(params.get("polar"), count);
  std::vector<BlochVector> axes;
  for (std::size_t i = 0; i < count; ++i) {
    axes.push_back(
        BlochVector::spherical(polar[i] * kRadiansPerDegree, azimuth[i] * kRadiansPerDegree));
  }
  return axes;
}

// Samples the pairs round robin; returns the empirical correlator and the
// trial count of each pair.
std::vector<std::pair<double, std::uint64_t>> run_bell_pairs(const std::vector<BellPair>& pairs,
                                                             BellMode mode,
                                                             ExperimentReport& report) {
  require_groups(report.trials, pairs.size(), report.experiment);
  std::vector<Group> groups;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const BellProbs p = bell_joint_probs(pairs[i].a, pairs[i].b);
    groups.push_back({pairs[i].name, {"++", "-+", "+-", "--"}, {p.begin(), p.end()},
                      {0, 0, 0, 0}, group_share(report.trials, i, pairs.size())});
  }
  for (std::uint64_t t = 0; t < report.trials; ++t) {
    SeededRng rng = SeededRng::for_trial(report.seed, t);
    const std::size_t i = static_cast<std::size_t>(t % pairs.size());
    ++groups[i].counts[bell_trial(pairs[i].a, pairs[i].b, mode, rng).cell];
  }
  add_groups(report, groups);

  std::vector<std::pair<double, std::uint64_t>> correlators;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Group& g = groups[i];
    const BellProbs closed = bell_joint_probs(pairs[i].a, pairs[i].b);
    const BellProbs born = bell_joint_probs_born(pairs[i].a, pairs[i].b);
    double gap = 0.0;
    for (std::size_t c = 0; c < 4; ++c) gap = std::max(gap, std::abs(closed[c] - born[c]));
    report.tests.push_back(bound_test("born[" + g.name + "]", gap, 0.0, kAlgebraicTol));
    report.tests.push_back(
        bound_test("marginal[" + g.name + "]", closed[0] + closed[2], 0.5, kAlgebraicTol));

    BellProbs freq{};
    for (std::size_t c = 0; c < 4; ++c) {
      freq[c] = static_cast<double>(g.counts[c]) / static_cast<double>(g.trials);
    }
    const double e_analytic = bell_correlator(pairs[i].a, pairs[i].b);
    const double e_empirical = correlator_from_probs(freq);
    const double sigma =
        std::sqrt(std::max(0.0, 1.0 - e_analytic * e_analytic) / static_cast<double>(g.trials));
    report.tests.push_back(bound_test("E[" + g.name + "]", e_empirical, e_analytic, 4.0 * sigma));
    correlators.emplace_back(e_empirical, g.trials);
  }
  return correlators;
}

// Variance of an empirical correlator with analytic value e over n trials.
double correlator_variance(double e, std::uint64_t n) {
  return std::max(0.0, 1.0 - e * e) / static_cast<double>(n);
}

void run_bell_chsh(const Params& params, ExperimentReport& report) {
  const std::vector<BlochVector> ax = parse_axes(params, 4);
  const BellMode mode = parse_mode(params.get("mode"));
  const std::vector<BellPair> pairs = {
      {"ab", ax[0], ax[1]}, {"bc", ax[1], ax[2]}, {"cd", ax[2], ax[3]}, {"da", ax[3], ax[0]}};
  const auto emp = run_bell_pairs(pairs, mode, report);

  const std::array<double, 4> sign = {1.0, 1.0, 1.0, -1.0};
  double s_empirical = 0.0;
  double variance = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    s_empirical += sign[i] * emp[i].first;
    variance += correlator_variance(bell_correlator(pairs[i].a, pairs[i].b), emp[i].second);
  }
  const double s_analytic = chsh(ax[0], ax[1], ax[2], ax[3]);
  const double four_sd = 4.0 * std::sqrt(variance);
  report.tests.push_back(bound_test("chsh", s_empirical, s_analytic, four_sd));
  if (std::abs(s_analytic) - 2.0 > four_sd) {
    report.tests.push_back(exceeds_test("chsh_violation", std::abs(s_empirical), 2.0));
  }
  report.tests.push_back(
      bound_test("local_deterministic_bound", local_deterministic_chsh_max(), 2.0, kAlgebraicTol));
}

void run_bell_original(const Params& params, ExperimentReport& report) {
  const std::vector<BlochVector> ax = parse_axes(params, 3);
  const BellMode mode = parse_mode(params.get("mode"));
  const std::vector<BellPair> pairs = {
      {"ab", ax[0], ax[1]}, {"ac", ax[0], ax[2]}, {"bc", ax[1], ax[2]}};
  const auto emp = run_bell_pairs(pairs, mode, report);

  const BellInequality analytic = bell_original_inequality(ax[0], ax[1], ax[2]);
  const double gap_analytic = analytic.lhs - analytic.rhs;
  const double gap_empirical =
      std::abs(emp[0].first - emp[1].first) - (1.0 - emp[2].first);
  double variance = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    variance += correlator_variance(bell_correlator(pairs[i].a, pairs[i].b), emp[i].second);
  }
  const double four_sd = 4.0 * std::sqrt(variance);
  report.tests.push_back(bound_test("lhs_minus_rhs", gap_empirical, gap_analytic, four_sd));
  if (gap_analytic > four_sd) {
    report.tests.push_back(exceeds_test("bell_violation", gap_empirical, 0.0));
  }
}

void run_ck_singlet(const Params& params, ExperimentReport& report) {
  const Axis axis = parse_axis_param(params.get("axis"));
  const Frame3 frame = parse_frame(params.get("frame"));
  const StateVector singlet = two_spin1_singlet();
  const ProjectorSet cells = ck_projector_set(frame, axis);
  const std::vector<double> probs = born_probabilities(singlet, cells);

  std::vector<std::string> labels;
  for (int v = 0; v < 2; ++v) {
    for (int kv = 1; kv <= 3; ++kv) {
      labels.push_back("K=" + std::to_string(kv) + ",J2" + axis_name(axis) + "=" +
                       std::to_string(v));
    }
  }
  Group g{"", labels, probs, std::vector<std::uint64_t>(6, 0), report.trials};
  std::uint64_t agree = 0;
  for (std::uint64_t t = 0; t < report.trials; ++t) {
    SeededRng rng = SeededRng::for_trial(report.seed, t);
    const CkTrialOutcome out = ck_frame_axis_trial(frame, axis, rng);
    ++g.counts[static_cast<std::size_t>(out.k_value - 1 + 3 * out.axis_value)];
    agree += out.agree ? 1 : 0;
  }
  add_groups(report, {g});

  report.tests.push_back(bound_test(
      "agreement", static_cast<double>(agree) / static_cast<double>(report.trials), 1.0, 0.0));
  const Operator r(frame.matrix().cast<Complex>());
  const StateVector rotated = apply(kron(r, r), singlet);
  report.tests.push_back(
      bound_test("rotation_invariance", fidelity(rotated, singlet), 1.0, kStructuralTol));
  for (Axis nu : {Axis::x, Axis::y, Axis::z}) {
    const double gap = (two_spin1_singlet_in_spin_basis(nu).amplitudes() - singlet.amplitudes())
                           .cwiseAbs()
                           .maxCoeff();
    report.tests.push_back(bound_test(std::string("spin_basis_form[") + axis_name(nu) + "]", gap,
                                      0.0, kAlgebraicTol));
  }
}

void run_ck_classical(const Params& params, ExperimentReport& report) {
  const OrderedFrame one =
      checked("frame_one", [&] { return OrderedFrame::parse(params.get("frame_one")); });
  const OrderedFrame two =
      checked("frame_two", [&] { return OrderedFrame::parse(params.get("frame_two")); });
  const std::string axis = params.get("axis");
  const double analytic_rate =
      checked("axis '" + axis + "'", [&] { return classical_agreement_analytic(one, two, axis); });

  std::vector<std::string> labels;
  std::vector<double> probs(9, 0.0);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      labels.push_back("I=" + one.slots()[i] + ",II=" + two.slots()[j]);
    }
    // Both sides read the same r against the same thirds, so slot i meets slot i.
    probs[i * 3 + i] = 1.0 / 3.0;
  }
  Group g{"", labels, probs, std::vector<std::uint64_t>(9, 0), report.trials};
  const auto slot_of = [](const OrderedFrame& f, const std::string& name) {
    return static_cast<std::size_t>(
        std::find(f.slots().begin(), f.slots().end(), name) - f.slots().begin());
  };
  for (std::uint64_t t = 0; t < report.trials; ++t) {
    SeededRng rng = SeededRng::for_trial(report.seed, t);
    const auto [a, b] = classical_shared_seed_trial(one, two, rng.uniform());
    ++g.counts[slot_of(one, a) * 3 + slot_of(two, b)];
  }
  add_groups(report, {g});

  const double rate = classical_agreement_rate(one, two, axis, report.trials, report.seed);
  report.tests.push_back(bound_test("classical_agreement", rate, analytic_rate,
                                    four_sigma(analytic_rate, report.trials)));

  if (axis.size() == 1 && (axis == "x" || axis == "y" || axis == "z")) {
    const Axis quantum_axis = parse_axis(axis);
    const std::uint64_t q_trials = std::min(report.trials, kMaxQuantumContrastTrials);
    const std::uint64_t q_seed = derive_seed(report.seed, 1);
    const Frame3 identity = Frame3::identity();
    std::uint64_t agree = 0;
    for (std::uint64_t t = 0; t < q_trials; ++t) {
      SeededRng rng = SeededRng::for_trial(q_seed, t);
      agree += ck_frame_axis_trial(identity, quantum_axis, rng).agree ? 1 : 0;
    }
    report.tests.push_back(bound_test("quantum_agreement",
                                      static_cast<double>(agree) / static_cast<double>(q_trials),
                                      1.0, 0.0));
  }
}

void run_dht(const Params& params, ExperimentReport& report) {
  const DhtVariant variant =
      checked("variant", [&] { return parse_dht_variant(params.get("variant")); });
  const DhtSteps steps = dht_prepare(variant);
  const DhtSteps expected = dht_expected_steps(variant);
  const std::vector<double> probs = born_probabilities(steps.reunited, dht_ancilla_projectors());

  Group g{"", {"A=0,B=0", "A=0,B=1", "A=1,B=0", "A=1,B=1"}, probs, {0, 0, 0, 0}, report.trials};
  double min_post_fidelity = 1.0;
  for (std::uint64_t t = 0; t < report.trials; ++t) {
    SeededRng rng = SeededRng::for_trial(report.seed, t);
    const DhtRun run = dht_finish(steps, variant, rng);
    ++g.counts[run.ancilla_outcome];
    min_post_fidelity = std::min(min_post_fidelity, run.post_state_fidelity);
  }
  add_groups(report, {g});

  report.tests.push_back(bound_test("step[attached]", fidelity(steps.attached, expected.attached),
                                    1.0, kAlgebraicTol));
  report.tests.push_back(
      bound_test("step[gated]", fidelity(steps.gated, expected.gated), 1.0, kAlgebraicTol));
  report.tests.push_back(bound_test("step[reunited]", fidelity(steps.reunited, expected.reunited),
                                    1.0, kAlgebraicTol));
  report.tests.push_back(
      bound_test("post_state_fidelity", min_post_fidelity, 1.0, kAlgebraicTol));
}

using Runner = std::function<void(const Params&, ExperimentReport&)>;

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table = {
      {"ks-color", run_ks_color},         {"ks-spin1-order", run_ks_spin1_order},
      {"bell-chsh", run_bell_chsh},       {"bell-original", run_bell_original},
      {"ck-singlet", run_ck_singlet},     {"ck-classical", run_ck_classical},
      {"dht", run_dht},
  };
  return table;
}

}  // namespace

double parse_number(const std::string& text) {
  const std::string t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string::npos) {
    return parse_decimal(t);
  }
  const double num = parse_decimal(trim(t.substr(0, slash)));
  const double den = parse_decimal(trim(t.substr(slash + 1)));
  if (den == 0.0) {
    throw InvalidParameterError("zero denominator: '" + text + "'");
  }
  return num / den;
}

std::vector<double> parse_number_list(const std::string& text, std::size_t count) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    out.push_back(parse_number(item));
  }
  if (!text.empty() && text.back() == ',') {
    throw InvalidParameterError("trailing comma in '" + text + "'");
  }
  if (out.empty() || (count != 0 && out.size() != count)) {
    throw InvalidParameterError("expected " + std::to_string(count) +
                                " comma-separated numbers: '" + text + "'");
  }
  return out;
}

ExperimentReport run(const RunConfig& config) {
  const ExperimentInfo* info = find_experiment(config.experiment);
  if (info == nullptr) {
    throw UnknownExperimentError("unknown experiment '" + config.experiment + "'");
  }
  const Params params(*info, config.params);
  const std::uint64_t trials = config.trials.value_or(info->default_trials);
  if (trials == 0) {
    throw InvalidParameterError("trials must be positive");
  }

  ExperimentReport report;
  report.experiment = info->name;
  report.seed = config.seed;
  report.trials = trials;
  report.parameters = params.resolved();
  runners().at(info->name)(params, report);
  return report;
}

int run_and_write(const RunConfig& config, std::ostream& out, std::ostream& err) {
  ExperimentReport report;
  std::optional<double> runtime_ms;
  try {
    const auto start = std::chrono::steady_clock::now();
    report = run(config);
    const auto stop = std::chrono::steady_clock::now();
    if (config.timing) {
      runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    }
  } catch (const UnknownExperimentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnknownExperiment;
  } catch (const InvalidParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidParams;
  } catch (const std::invalid_argument& e) {
    err << "error: invalid parameters: " << e.what() << "\n";
    return kExitInvalidParams;
  } catch (const std::domain_error& e) {
    err << "error: invalid parameters: " << e.what() << "\n";
    return kExitInvalidParams;
  }

  const std::string text =
      config.format == OutputFormat::json ? to_json(report, runtime_ms) : to_csv(report);
  if (config.out_path) {
    std::ofstream file(*config.out_path, std::ios::binary | std::ios::trunc);
    file << text;
    file.close();
    if (!file) {
      err << "error: cannot write " << *config.out_path << "\n";
      return kExitIoFailure;
    }
  } else {
    out << text;
    out.flush();
    if (!out) {
      err << "error: cannot write report\n";
      return kExitIoFailure;
    }
  }

  for (const TestResult& t : report.tests) {
    if (!t.pass) {
      err << "FAIL " << report.experiment << " " << t.name << ": value " << format_number(t.value)
          << ", expected " << format_number(t.expected) << ", statistic "
          << format_number(t.statistic) << " > " << format_number(t.threshold) << "\n";
    }
  }
  return report.all_pass() ? kExitPass : kExitTestFailed;
}

}  // namespace nogo::cli
