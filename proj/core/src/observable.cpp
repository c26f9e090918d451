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

#include "qcut/observable.hpp"

#include <bit>
#include <cmath>

#include "qcut/config.hpp"

namespace qcut {

void check_observable_range(const DiagonalObservable& obs, int num_qubits) {
  if (num_qubits > kMaxStatevectorQubits)
    throw ValidationError("observable range check limited to the statevector cap");
  const std::uint64_t n = std::uint64_t{1} << num_qubits;
  for (std::uint64_t x = 0; x < n; ++x) {
    double v = obs.evaluate(x);
    if (!(std::abs(v) <= 1.0 + 1e-15))
      throw ValidationError("observable value out of [-1, 1] at x = " +
                            std::to_string(x));
  }
}

DiagonalObservable parity_observable() {
  return DiagonalObservable{
      [](std::uint64_t x) { return std::popcount(x) % 2 == 0 ? 1.0 : -1.0; },
      "none"};
}

}  // namespace qcut
