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

#include "nogo/cli/serialize.h"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "nogo/cli/catalog.h"

namespace nogo::cli {

using Json = nlohmann::ordered_json;

std::string format_number(double value) {
  if (!std::isfinite(value)) {
    return "null";
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

namespace {

// nlohmann's own dump prints the shortest round-trip form; reports pin 17
// significant digits instead, so floats are written here.
void write(std::ostream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out << ",\n";
        first = false;
        out << pad << Json(key).dump() << ": ";
        write(out, value, indent + 2);
      }
      out << "\n" << close << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      out << "[\n";
      bool first = true;
      for (const auto& value : j) {
        if (!first) out << ",\n";
        first = false;
        out << pad;
        write(out, value, indent + 2);
      }
      out << "\n" << close << "]";
      return;
    }
    case Json::value_t::number_float:
      out << format_number(j.get<double>());
      return;
    default:
      out << j.dump();
      return;
  }
}

std::string render(const Json& j) {
  std::ostringstream out;
  write(out, j, 0);
  out << "\n";
  return out.str();
}

}  // namespace

std::string to_json(const ExperimentReport& report, std::optional<double> runtime_ms) {
  Json j;
  j["experiment"] = report.experiment;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  Json params = Json::object();
  for (const auto& [k, v] : report.parameters) params[k] = v;
  j["parameters"] = params;
  Json analytic = Json::object();
  for (const auto& [k, v] : report.analytic) analytic[k] = v;
  j["analytic"] = analytic;
  Json empirical = Json::object();
  for (const auto& [k, v] : report.empirical) empirical[k] = v;
  j["empirical"] = empirical;
  Json tests = Json::array();
  for (const TestResult& t : report.tests) {
    Json row;
    row["name"] = t.name;
    row["value"] = t.value;
    row["expected"] = t.expected;
    row["statistic"] = t.statistic;
    row["threshold"] = t.threshold;
    row["pass"] = t.pass;
    tests.push_back(row);
  }
  j["tests"] = tests;
  j["runtime_ms"] = runtime_ms ? Json(*runtime_ms) : Json(nullptr);
  j["version"] = kVersion;
  return render(j);
}

std::string to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "label,analytic,empirical\n";
  for (const auto& [label, p] : report.analytic) {
    std::string empirical = "";
    for (const auto& [elabel, f] : report.empirical) {
      if (elabel == label) {
        empirical = format_number(f);
        break;
      }
    }
    out << label << "," << format_number(p) << "," << empirical << "\n";
  }
  return out.str();
}

std::string catalog_json() {
  Json list = Json::array();
  for (const ExperimentInfo& e : list_experiments()) {
    Json entry;
    entry["name"] = e.name;
    entry["description"] = e.description;
    entry["default_trials"] = e.default_trials;
    Json params = Json::array();
    for (const ParamSpec& p : e.params) {
      params.push_back(Json{{"name", p.name}, {"default", p.default_value},
                            {"description", p.description}});
    }
    entry["params"] = params;
    list.push_back(entry);
  }
  return render(list);
}

}  // namespace nogo::cli
