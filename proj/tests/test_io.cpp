// Copyright 2026 The qcut authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "qcut/io.hpp"
#include "qcut/rng.hpp"

using namespace qcut;

TEST_CASE("doubles render losslessly") {
  Rng rng = make_rng(9);
  for (int i = 0; i < 20000; ++i) {
    double x = (uniform_unit(rng) - 0.5) *
               std::pow(10.0, static_cast<double>(uniform_below(rng, 40)) - 20.0);
    const std::string s = format_double(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.5) == "0.5");
  CHECK(std::strtod(format_double(1.0 / 3.0).c_str(), nullptr) == 1.0 / 3.0);
}

TEST_CASE("csv tables round-trip") {
  CsvTable table;
  table.header = {"a", "b", "c"};
  table.rows = {{"x", format_double(1.0 / 7.0), "3"},
                {"y", format_double(-2.5e-17), "4"}};
  const std::string text = table.to_string();
  const CsvTable back = parse_csv(text);
  CHECK(back.header == table.header);
  CHECK(back.rows == table.rows);
  CHECK(back.to_string() == text);
}
