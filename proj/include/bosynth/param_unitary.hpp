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
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "bosynth/gate_sequence.hpp"

namespace bosynth {

class EvalContext;
class Transform;

// Node of a product-formula expression. natural(s) is the raw formula at a
// signed argument; eval(t) returns natural(t) for t >= 0 and natural(-t)†
// otherwise, so every node satisfies eval(-t) = eval(t)†.
class Node {
 public:
  Node(HilbertLayout layout, std::string label, int time_power);
  virtual ~Node() = default;

  const HilbertLayout& layout() const { return layout_; }
  const std::string& label() const { return label_; }
  // m such that eval(t) ≈ exp(t^m G).
  int time_power() const { return time_power_; }
  const GateCount& count() const { return count_; }
  // Built from block-local primitives only, so flattening beats memoisation.
  bool local() const { return local_; }

  Matrix eval(double t, EvalContext& ctx) const;
  // Raw formula at a signed argument, memoised.
  Matrix signed_natural(double s, EvalContext& ctx) const;
  void emit(double t, GateSequence& out) const;
  // acc ← acc·eval(t).
  virtual void right_multiply(Matrix& acc, double t, EvalContext& ctx) const;

  virtual Matrix natural(double s, EvalContext& ctx) const = 0;
  virtual void emit_natural(double s, GateSequence& out) const = 0;
  virtual std::shared_ptr<const Node> transform(Transform& tr) const = 0;

 protected:
  GateCount count_;
  bool local_ = false;

 private:
  HilbertLayout layout_;
  std::string label_;
  int time_power_;
};

using NodePtr = std::shared_ptr<const Node>;

// Memo table for one top-level evaluation.
class EvalContext {
 public:
  const Matrix* find(const void* node, int tag, double s) const;
  const Matrix& store(const void* node, int tag, double s, Matrix m);
  std::size_t size() const { return table_.size(); }

 private:
  struct Key {
    const void* node;
    int tag;
    double s;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };
  std::unordered_map<Key, Matrix, KeyHash> table_;
};

// Structural rewrite applied to every leaf: conjugation W·H·W† or reversal of
// the primitive order. Shared subtrees stay shared.
class Transform {
 public:
  enum class Mode { Conjugate, Reverse };

  static Transform conjugation(Matrix w, std::string tag);
  static Transform reversal();

  Mode mode() const { return mode_; }
  const Matrix& w() const { return w_; }
  const std::string& tag() const { return tag_; }

  NodePtr apply(const NodePtr& n);
  GeneratorPtr apply(const GeneratorPtr& g);

 private:
  Mode mode_ = Mode::Reverse;
  Matrix w_;
  std::string tag_;
  std::unordered_map<const Node*, NodePtr> nodes_;
  std::unordered_map<const Generator*, GeneratorPtr> gens_;
};

// Parameterised unitary t ↦ U(t) with exact primitive accounting.
class ParamUnitary {
 public:
  ParamUnitary() = default;
  explicit ParamUnitary(NodePtr node) : node_(std::move(node)) {}

  Operator eval(double t) const;
  Matrix matrix(double t) const;
  Matrix matrix(double t, EvalContext& ctx) const;
  // Flattened primitive list; throws ResourceError past max_calls.
  GateSequence compile(double t, std::uint64_t max_calls = 50'000'000) const;

  const GateCount& cost() const { return node_->count(); }
  std::uint64_t cost(double) const { return node_->count().total; }
  const std::string& label() const { return node_->label(); }
  const HilbertLayout& layout() const { return node_->layout(); }
  int time_power() const { return node_->time_power(); }
  const NodePtr& node() const { return node_; }
  explicit operator bool() const { return static_cast<bool>(node_); }

 private:
  NodePtr node_;
};

ParamUnitary primitive(GeneratorPtr g);
ParamUnitary primitive(std::string kind, std::string label, Operator h);
// Constant factor e^{iθH} inside a product; counts one primitive.
ParamUnitary fixed_primitive(GeneratorPtr g, double theta);
// t ↦ U(c·t).
ParamUnitary scale(const ParamUnitary& u, double c);
// h ↦ U(sign(h)|h|^{1/m}) for U of time power m; approximates e^{hG}.
ParamUnitary linearize(const ParamUnitary& u);
// t ↦ U_0(t)·U_1(t)···U_n(t).
ParamUnitary product(const std::vector<ParamUnitary>& factors,
                     std::string label = "product");
// t ↦ W·U(t)·W†; leaves are rewritten so conjugations cost nothing.
ParamUnitary conjugate(const ParamUnitary& u, const Operator& w,
                       const std::string& tag);
// Primitive order reversed, parameters unchanged.
ParamUnitary reverse(const ParamUnitary& u);
// t ↦ U(t/r)^r.
ParamUnitary repeat(const ParamUnitary& u, std::size_t r);

struct BchConstants {
  double r;
  double beta;
  double gamma;
};
BchConstants bch_constants(int p, int k);

// BCH_{p,k}(At, Bt^k) ≈ exp([A,B] t^{k+1}) for U_A(t) = e^{At}, U_B(t) = e^{Bt}.
ParamUnitary bch(int p, int k, const ParamUnitary& ua, const ParamUnitary& ub);

// Suzuki formula of even order over linear terms, step t/r applied r times.
// merge_middle fuses the two adjacent half steps of the last term inside
// each second-order block.
ParamUnitary trotter(int order, const std::vector<ParamUnitary>& terms,
                     std::size_t slices = 1, bool merge_middle = false);

// Odd time power: U(t/2)·reverse(U)(t/2). Even time power m:
// U(c t)·U(-c t) with c = 2^{-1/m}, which keeps the leading term and
// cancels the next one.
ParamUnitary symmetrize(const ParamUnitary& u);

}  // namespace bosynth
