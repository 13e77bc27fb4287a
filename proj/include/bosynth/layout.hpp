// Copyright 2026 The bosynth Authors
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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace bosynth {

enum class FactorKind { Qubit, Mode };

struct Factor {
  FactorKind kind;
  std::size_t dim;

  bool operator==(const Factor&) const = default;
};

// Ordered tensor factors. Basis index is mixed radix with the leftmost
// factor most significant.
class HilbertLayout {
 public:
  HilbertLayout() = default;
  explicit HilbertLayout(std::vector<Factor> factors);

  static HilbertLayout qubit();
  static HilbertLayout mode(std::size_t cutoff);
  static HilbertLayout plain(std::size_t dim);
  // One qubit followed by one mode per cutoff.
  static HilbertLayout qubit_modes(std::initializer_list<std::size_t> cutoffs);
  static HilbertLayout qubit_modes(const std::vector<std::size_t>& cutoffs);

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  std::size_t dim() const;
  std::size_t factor_dim(std::size_t at) const;
  bool empty() const { return factors_.empty(); }

  HilbertLayout concat(const HilbertLayout& other) const;
  HilbertLayout tail(std::size_t from) const;

  std::size_t index_of(const std::vector<std::size_t>& digits) const;
  std::vector<std::size_t> digits_of(std::size_t index) const;

  std::string describe() const;

  bool operator==(const HilbertLayout&) const = default;

 private:
  std::vector<Factor> factors_;
};

}  // namespace bosynth
