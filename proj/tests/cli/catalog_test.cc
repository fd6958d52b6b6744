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

#include "nogo/cli/catalog.h"

#include <set>

#include <gtest/gtest.h>

namespace nogo::cli {
namespace {

TEST(Catalog, StableNames) {
  std::vector<std::string> names;
  for (const ExperimentInfo& e : list_experiments()) names.push_back(e.name);
  EXPECT_EQ(names, (std::vector<std::string>{"ks-color", "ks-spin1-order", "bell-chsh",
                                             "bell-original", "ck-singlet", "ck-classical",
                                             "dht"}));
}

TEST(Catalog, EntriesAreComplete) {
  for (const ExperimentInfo& e : list_experiments()) {
    EXPECT_FALSE(e.description.empty()) << e.name;
    EXPECT_GT(e.default_trials, 0u) << e.name;
    std::set<std::string> seen;
    for (const ParamSpec& p : e.params) {
      EXPECT_FALSE(p.default_value.empty()) << e.name << " " << p.name;
      EXPECT_TRUE(seen.insert(p.name).second) << e.name << " " << p.name;
    }
  }
}

TEST(Catalog, Find) {
  ASSERT_NE(find_experiment("dht"), nullptr);
  EXPECT_EQ(find_experiment("dht")->name, "dht");
  EXPECT_EQ(find_experiment("DHT"), nullptr);
  EXPECT_EQ(find_experiment(""), nullptr);
}

}  // namespace
}  // namespace nogo::cli
