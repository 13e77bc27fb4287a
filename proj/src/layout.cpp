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

#include "bosynth/layout.hpp"

#include <sstream>

#include "bosynth/config.hpp"

namespace bosynth {

HilbertLayout::HilbertLayout(std::vector<Factor> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw LayoutError("layout needs at least one factor");
  for (const auto& f : factors_) {
    if (f.dim < 2) throw LayoutError("factor dimension must be at least 2");
    if (f.kind == FactorKind::Qubit && f.dim != 2)
      throw LayoutError("qubit factor must have dimension 2");
  }
}

HilbertLayout HilbertLayout::qubit() {
  return HilbertLayout({{FactorKind::Qubit, 2}});
}

HilbertLayout HilbertLayout::mode(std::size_t cutoff) {
  if (cutoff < 1) throw LayoutError("mode cutoff must be at least 1");
  return HilbertLayout({{FactorKind::Mode, cutoff + 1}});
}

HilbertLayout HilbertLayout::plain(std::size_t dim) {
  if (dim == 2) return qubit();
  return HilbertLayout({{FactorKind::Mode, dim}});
}

HilbertLayout HilbertLayout::qubit_modes(
    std::initializer_list<std::size_t> cutoffs) {
  return qubit_modes(std::vector<std::size_t>(cutoffs));
}

HilbertLayout HilbertLayout::qubit_modes(
    const std::vector<std::size_t>& cutoffs) {
  std::vector<Factor> f{{FactorKind::Qubit, 2}};
  for (auto c : cutoffs) {
    if (c < 1) throw LayoutError("mode cutoff must be at least 1");
    f.push_back({FactorKind::Mode, c + 1});
  }
  return HilbertLayout(std::move(f));
}

std::size_t HilbertLayout::dim() const {
  std::size_t d = 1;
  for (const auto& f : factors_) d *= f.dim;
  return d;
}

std::size_t HilbertLayout::factor_dim(std::size_t at) const {
  if (at >= factors_.size()) throw LayoutError("factor address out of range");
  return factors_[at].dim;
}

HilbertLayout HilbertLayout::concat(const HilbertLayout& other) const {
  std::vector<Factor> f = factors_;
  f.insert(f.end(), other.factors_.begin(), other.factors_.end());
  return HilbertLayout(std::move(f));
}

HilbertLayout HilbertLayout::tail(std::size_t from) const {
  if (from >= factors_.size()) throw LayoutError("tail out of range");
  return HilbertLayout(
      std::vector<Factor>(factors_.begin() + from, factors_.end()));
}

std::size_t HilbertLayout::index_of(
    const std::vector<std::size_t>& digits) const {
  if (digits.size() != factors_.size())
    throw LayoutError("digit count does not match layout");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= factors_[i].dim) throw LayoutError("digit out of range");
    idx = idx * factors_[i].dim + digits[i];
  }
  return idx;
}

std::vector<std::size_t> HilbertLayout::digits_of(std::size_t index) const {
  std::vector<std::size_t> d(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    d[i] = index % factors_[i].dim;
    index /= factors_[i].dim;
  }
  if (index != 0) throw LayoutError("index out of range");
  return d;
}

std::string HilbertLayout::describe() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << ", ";
    if (factors_[i].kind == FactorKind::Qubit)
      os << "qubit";
    else
      os << "mode(" << factors_[i].dim - 1 << ")";
  }
  os << "]";
  return os.str();
}

}  // namespace bosynth
