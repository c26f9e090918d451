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

#ifndef QCUT_OBSERVABLE_HPP
#define QCUT_OBSERVABLE_HPP

#include <cstdint>
#include <functional>
#include <string>

namespace qcut {

/// Diagonal observable given by a bitstring cost function with values in
/// [-1, 1]. `rescale_note` documents any normalization baked into `evaluate`
/// (e.g. "divided by edge count").
struct DiagonalObservable {
  std::function<double(std::uint64_t)> evaluate;
  std::string rescale_note;
};

/// Exhaustively checks |evaluate(x)| <= 1 for all x. Only usable up to the
/// statevector cap; throws ValidationError on the first violation.
void check_observable_range(const DiagonalObservable& obs, int num_qubits);

/// Parity of all bits, as a +/-1 observable.
DiagonalObservable parity_observable();

}  // namespace qcut

#endif  // QCUT_OBSERVABLE_HPP
