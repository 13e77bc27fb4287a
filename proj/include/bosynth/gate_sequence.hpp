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

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bosynth/linalg.hpp"

namespace bosynth {

// Primitive invocation tally, total and per primitive kind.
struct GateCount {
  std::uint64_t total = 0;
  std::map<std::string, std::uint64_t> by_kind;

  GateCount& operator+=(const GateCount& o);
  GateCount times(std::uint64_t m) const;
  bool operator==(const GateCount&) const = default;
};

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);

// A primitive e^{iθH}. H is split into the connected components of its
// nonzero pattern and each block is diagonalised once.
class Generator {
 public:
  Generator(std::string kind, std::string label, Operator h,
            std::vector<std::size_t> support = {});

  const std::string& kind() const { return kind_; }
  const std::string& label() const { return label_; }
  const Operator& hermitian() const { return h_; }
  const std::vector<std::size_t>& support() const { return support_; }
  const HilbertLayout& layout() const { return h_.layout(); }

  Matrix unitary(double theta) const;
  // acc ← acc·e^{iθH}, touching only the columns of each invariant block.
  void right_multiply(Matrix& acc, double theta) const;
  // True when every invariant block is small compared with the full space.
  bool local() const { return local_; }
  std::shared_ptr<const Generator> conjugated(const Matrix& w,
                                              const std::string& tag) const;

 private:
  Generator() = default;
  void decompose();

  // Connected component of the nonzero pattern of H with its spectrum.
  struct Block {
    std::vector<Eigen::Index> index;
    Matrix vectors;
    Eigen::VectorXd values;
  };

  std::string kind_;
  std::string label_;
  Operator h_;
  std::vector<Block> blocks_;
  bool local_ = false;
  std::vector<std::size_t> support_;
};

using GeneratorPtr = std::shared_ptr<const Generator>;

struct GateCall {
  GeneratorPtr gen;
  double theta;
};

// Ordered primitive list. calls[0] is the leftmost factor of the operator
// product, so the last call acts first on a ket.
class GateSequence {
 public:
  explicit GateSequence(HilbertLayout layout);

  void push(GeneratorPtr g, double theta);
  void append(const GateSequence& other);
  void append_adjoint(const GateSequence& other);

  GateSequence adjoint() const;
  GateSequence reversed() const;

  const HilbertLayout& layout() const { return layout_; }
  const std::vector<GateCall>& calls() const { return calls_; }
  std::size_t size() const { return calls_.size(); }
  std::uint64_t total_cost() const { return calls_.size(); }
  GateCount count() const;

  // Adjacent calls of the same generator are merged before multiplying.
  Operator evaluate() const;

 private:
  HilbertLayout layout_;
  std::vector<GateCall> calls_;
};

}  // namespace bosynth
