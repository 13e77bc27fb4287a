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

#include "bosynth/param_unitary.hpp"

#include <bit>
#include <cmath>
#include <functional>

namespace bosynth {

namespace {

double clean(double s) { return s == 0.0 ? 0.0 : s; }

Matrix identity_of(const HilbertLayout& l) {
  const auto d = static_cast<Eigen::Index>(l.dim());
  return Matrix::Identity(d, d);
}

Matrix matrix_power(Matrix m, std::size_t r) {
  Matrix acc = Matrix::Identity(m.rows(), m.cols());
  while (r) {
    if (r & 1u) acc = acc * m;
    r >>= 1u;
    if (r) m = m * m;
  }
  return acc;
}

double signed_root(double h, int m) {
  if (m == 1) return h;
  const double a = std::pow(std::abs(h), 1.0 / m);
  return h < 0 ? -a : a;
}

double signed_power(double s, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= s;
  return r;
}

std::uint64_t pow_u64(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r = saturating_mul(r, b);
  return r;
}

class PrimitiveNode final : public Node {
 public:
  explicit PrimitiveNode(GeneratorPtr g)
      : Node(g->layout(), g->label(), 1), gen_(std::move(g)) {
    local_ = gen_->local();
    count_.total = 1;
    count_.by_kind[gen_->kind()] = 1;
  }
  Matrix natural(double s, EvalContext&) const override { return gen_->unitary(s); }
  void right_multiply(Matrix& acc, double t, EvalContext&) const override {
    gen_->right_multiply(acc, clean(t));
  }
  void emit_natural(double s, GateSequence& out) const override { out.push(gen_, s); }
  NodePtr transform(Transform& tr) const override {
    return std::make_shared<PrimitiveNode>(tr.apply(gen_));
  }

 private:
  GeneratorPtr gen_;
};

class FixedNode final : public Node {
 public:
  FixedNode(GeneratorPtr g, double theta)
      : Node(g->layout(), g->label(), 1), gen_(std::move(g)), theta_(theta) {
    local_ = gen_->local();
    count_.total = 1;
    count_.by_kind[gen_->kind()] = 1;
  }
  Matrix natural(double, EvalContext&) const override { return gen_->unitary(theta_); }
  void right_multiply(Matrix& acc, double t, EvalContext&) const override {
    gen_->right_multiply(acc, t < 0 ? -theta_ : theta_);
  }
  void emit_natural(double, GateSequence& out) const override {
    out.push(gen_, theta_);
  }
  NodePtr transform(Transform& tr) const override {
    return std::make_shared<FixedNode>(tr.apply(gen_), theta_);
  }

 private:
  GeneratorPtr gen_;
  double theta_;
};

class ScaleNode final : public Node {
 public:
  ScaleNode(NodePtr child, double c)
      : Node(child->layout(), child->label(), child->time_power()),
        child_(std::move(child)),
        c_(c) {
    count_ = child_->count();
    local_ = child_->local();
  }
  Matrix natural(double s, EvalContext& ctx) const override {
    return child_->eval(c_ * s, ctx);
  }
  void right_multiply(Matrix& acc, double t, EvalContext& ctx) const override {
    child_->right_multiply(acc, c_ * t, ctx);
  }
  void emit_natural(double s, GateSequence& out) const override {
    child_->emit(c_ * s, out);
  }
  NodePtr transform(Transform& tr) const override {
    return std::make_shared<ScaleNode>(tr.apply(child_), c_);
  }

 private:
  NodePtr child_;
  double c_;
};

class LinearizeNode final : public Node {
 public:
  explicit LinearizeNode(NodePtr child)
      : Node(child->layout(), "lin(" + child->label() + ")", 1),
        child_(std::move(child)) {
    count_ = child_->count();
    local_ = child_->local();
  }
  Matrix natural(double h, EvalContext& ctx) const override {
    return child_->eval(signed_root(h, child_->time_power()), ctx);
  }
  void right_multiply(Matrix& acc, double h, EvalContext& ctx) const override {
    child_->right_multiply(acc, signed_root(h, child_->time_power()), ctx);
  }
  void emit_natural(double h, GateSequence& out) const override {
    child_->emit(signed_root(h, child_->time_power()), out);
  }
  NodePtr transform(Transform& tr) const override {
    return std::make_shared<LinearizeNode>(tr.apply(child_));
  }

 private:
  NodePtr child_;
};

class ProductNode final : public Node {
 public:
  ProductNode(std::vector<NodePtr> children, std::string label)
      : Node(children.front()->layout(), std::move(label),
             children.front()->time_power()),
        children_(std::move(children)) {
    local_ = true;
    for (const auto& c : children_) {
      local_ = local_ && c->local();
      if (!(c->layout() == layout())) throw LayoutError("product layout mismatch");
      if (c->time_power() != time_power())
        throw std::invalid_argument("product factors differ in time power");
      count_ += c->count();
    }
  }
  Matrix natural(double s, EvalContext& ctx) const override {
    Matrix acc = identity_of(layout());
    for (const auto& c : children_) c->right_multiply(acc, s, ctx);
    return acc;
  }
  void emit_natural(double s, GateSequence& out) const override {
    for (const auto& c : children_) c->emit(s, out);
  }
  NodePtr transform(Transform& tr) const override {
    std::vector<NodePtr> kids;
    for (const auto& c : children_) kids.push_back(tr.apply(c));
    if (tr.mode() == Transform::Mode::Reverse)
      std::reverse(kids.begin(), kids.end());
    return std::make_shared<ProductNode>(std::move(kids), label());
  }

 private:
  std::vector<NodePtr> children_;
};

class RepeatNode final : public Node {
 public:
  RepeatNode(NodePtr child, std::size_t r)
      : Node(child->layout(),
             child->label() + "^" + std::to_string(r), child->time_power()),
        child_(std::move(child)),
        r_(r) {
    if (r_ == 0) throw std::invalid_argument("slice count must be positive");
    if (time_power() != 1)
      throw std::invalid_argument("time slicing needs a linear formula");
    count_ = child_->count().times(r_);
  }
  Matrix natural(double s, EvalContext& ctx) const override {
    return matrix_power(child_->eval(s / static_cast<double>(r_), ctx), r_);
  }
  void emit_natural(double s, GateSequence& out) const override {
    GateSequence step(layout());
    child_->emit(s / static_cast<double>(r_), step);
    for (std::size_t i = 0; i < r_; ++i) out.append(step);
  }
  NodePtr transform(Transform& tr) const override {
    return std::make_shared<RepeatNode>(tr.apply(child_), r_);
  }

 private:
  NodePtr child_;
  std::size_t r_;
};

class BchNode final : public Node {
 public:
  BchNode(int p, int k, NodePtr a, NodePtr b, bool reversed)
      : Node(a->layout(),
             "BCH_{" + std::to_string(p) + "," + std::to_string(k) + "}(" +
                 a->label() + ", " + b->label() + ")",
             k + 1),
        p_(p),
        k_(k),
        a_(std::move(a)),
        b_(std::move(b)),
        reversed_(reversed) {
    if (!(a_->layout() == b_->layout())) throw LayoutError("BCH layout mismatch");
    if (a_->time_power() != 1 || b_->time_power() != 1)
      throw std::invalid_argument("BCH operands must be linear in t");
    for (int l = 1; l < p_; ++l) consts_.push_back(bch_constants(l, k_));
    local_ = a_->local() && b_->local();
    GateCount pair = a_->count();
    pair += b_->count();
    count_ = pair.times(saturating_mul(2, pow_u64(6, p_ - 1)));
  }

  Matrix natural(double s, EvalContext& ctx) const override {
    return level(p_, s, ctx);
  }
  void right_multiply(Matrix& acc, double t, EvalContext& ctx) const override {
    if (!local()) {
      Node::right_multiply(acc, t, ctx);
      return;
    }
    if (t >= 0) {
      apply_level(p_, clean(t), false, acc, ctx);
    } else {
      apply_level(p_, clean(-t), true, acc, ctx);
    }
  }
  void emit_natural(double s, GateSequence& out) const override {
    emit_level(p_, s, out);
  }
  NodePtr transform(Transform& tr) const override {
    const bool rev = tr.mode() == Transform::Mode::Reverse ? !reversed_ : reversed_;
    return std::make_shared<BchNode>(p_, k_, tr.apply(a_), tr.apply(b_), rev);
  }

 private:
  // Factor schedule of one recursion level: (argument multiplier, inverse).
  struct Factor {
    double mult;
    bool inverse;
  };

  std::vector<Factor> schedule(int lvl) const {
    const auto& c = consts_[static_cast<std::size_t>(lvl - 2)];
    std::vector<Factor> f{{c.gamma, false}, {-c.gamma, false}, {c.beta, true},
                          {-c.beta, true},  {c.gamma, false},  {-c.gamma, false}};
    if (reversed_) {
      std::reverse(f.begin(), f.end());
    }
    return f;
  }

  Matrix level(int lvl, double s, EvalContext& ctx) const {
    s = clean(s);
    if (const Matrix* m = ctx.find(this, lvl, s)) return *m;
    Matrix out;
    if (lvl == 1) {
      const double sk = signed_power(s, k_);
      out = identity_of(layout());
      if (!reversed_) {
        a_->right_multiply(out, s, ctx);
        b_->right_multiply(out, sk, ctx);
        a_->right_multiply(out, -s, ctx);
        b_->right_multiply(out, -sk, ctx);
      } else {
        b_->right_multiply(out, -sk, ctx);
        a_->right_multiply(out, -s, ctx);
        b_->right_multiply(out, sk, ctx);
        a_->right_multiply(out, s, ctx);
      }
    } else {
      out = identity_of(layout());
      for (const auto& f : schedule(lvl)) {
        Matrix m = level(lvl - 1, f.mult * s, ctx);
        out = f.inverse ? Matrix(out * m.adjoint()) : Matrix(out * m);
      }
    }
    return ctx.store(this, lvl, s, std::move(out));
  }

  // acc ← acc·level(lvl, s), or acc·level(lvl, s)† when adjoint is set.
  void apply_level(int lvl, double s, bool adjoint, Matrix& acc, EvalContext& ctx) const {
    if (lvl == 1) {
      const double sk = signed_power(s, k_);
      std::vector<std::pair<const Node*, double>> f;
      if (!reversed_)
        f = {{a_.get(), s}, {b_.get(), sk}, {a_.get(), -s}, {b_.get(), -sk}};
      else
        f = {{b_.get(), -sk}, {a_.get(), -s}, {b_.get(), sk}, {a_.get(), s}};
      if (adjoint) {
        std::reverse(f.begin(), f.end());
        for (auto& x : f) x.second = -x.second;
      }
      for (const auto& [n, arg] : f) n->right_multiply(acc, arg, ctx);
      return;
    }
    auto sched = schedule(lvl);
    if (adjoint) std::reverse(sched.begin(), sched.end());
    for (const auto& f : sched) apply_level(lvl - 1, f.mult * s, adjoint != f.inverse, acc, ctx);
  }

  void emit_level(int lvl, double s, GateSequence& out) const {
    if (lvl == 1) {
      const double sk = signed_power(s, k_);
      if (!reversed_) {
        a_->emit(s, out);
        b_->emit(sk, out);
        a_->emit(-s, out);
        b_->emit(-sk, out);
      } else {
        b_->emit(-sk, out);
        a_->emit(-s, out);
        b_->emit(sk, out);
        a_->emit(s, out);
      }
      return;
    }
    for (const auto& f : schedule(lvl)) {
      if (!f.inverse) {
        emit_level(lvl - 1, f.mult * s, out);
      } else {
        GateSequence tmp(layout());
        emit_level(lvl - 1, f.mult * s, tmp);
        out.append_adjoint(tmp);
      }
    }
  }

  int p_, k_;
  NodePtr a_, b_;
  bool reversed_;
  std::vector<BchConstants> consts_;
};

class TrotterNode final : public Node {
 public:
  TrotterNode(int order, std::vector<NodePtr> terms, std::size_t slices, bool merge)
      : Node(terms.front()->layout(), make_label(order, terms, slices), 1),
        k_(order / 2),
        terms_(std::move(terms)),
        r_(slices),
        merge_(merge) {
    GateCount block;
    for (std::size_t j = 0; j < terms_.size(); ++j) {
      const auto& t = terms_[j];
      if (!(t->layout() == layout())) throw LayoutError("Trotter layout mismatch");
      if (t->time_power() != 1)
        throw std::invalid_argument("Trotter terms must be linear in t");
      const bool merged = merge_ && j + 1 == terms_.size();
      block += t->count().times(merged ? 1 : 2);
    }
    count_ = block.times(saturating_mul(pow_u64(5, k_ - 1), r_));
    for (int j = 2; j <= k_; ++j)
      p_.push_back(1.0 / (4.0 - std::pow(4.0, 1.0 / (2.0 * j - 1.0))));
  }

  Matrix natural(double s, EvalContext& ctx) const override {
    const double h = s / static_cast<double>(r_);
    return matrix_power(suzuki(k_, h, ctx), r_);
  }
  void emit_natural(double s, GateSequence& out) const override {
    const double h = s / static_cast<double>(r_);
    GateSequence step(layout());
    emit_suzuki(k_, h, step);
    for (std::size_t i = 0; i < r_; ++i) out.append(step);
  }
  NodePtr transform(Transform& tr) const override {
    std::vector<NodePtr> kids;
    for (const auto& c : terms_) kids.push_back(tr.apply(c));
    return std::make_shared<TrotterNode>(2 * k_, std::move(kids), r_, merge_);
  }

 private:
  static std::string make_label(int order, const std::vector<NodePtr>& terms,
                                std::size_t r) {
    std::string s = "Trotter_" + std::to_string(order) + "(";
    for (std::size_t i = 0; i < terms.size(); ++i)
      s += (i ? ", " : "") + terms[i]->label();
    s += ")";
    if (r > 1) s += "^" + std::to_string(r);
    return s;
  }

  Matrix suzuki(int j, double lam, EvalContext& ctx) const {
    lam = clean(lam);
    if (const Matrix* m = ctx.find(this, j, lam)) return *m;
    Matrix out;
    if (j == 1) {
      const std::size_t m = terms_.size();
      out = identity_of(layout());
      for (std::size_t i = 0; i < m; ++i) {
        if (merge_ && i + 1 == m) break;
        terms_[i]->right_multiply(out, lam / 2, ctx);
      }
      if (merge_) terms_[m - 1]->right_multiply(out, lam, ctx);
      for (std::size_t i = m; i-- > 0;) {
        if (merge_ && i + 1 == m) continue;
        terms_[i]->right_multiply(out, lam / 2, ctx);
      }
    } else {
      const double pj = p_[static_cast<std::size_t>(j - 2)];
      const Matrix outer = suzuki(j - 1, pj * lam, ctx);
      const Matrix inner = suzuki(j - 1, (1 - 4 * pj) * lam, ctx);
      const Matrix two = outer * outer;
      out = two * inner * two;
    }
    return ctx.store(this, j, lam, std::move(out));
  }

  void emit_suzuki(int j, double lam, GateSequence& out) const {
    if (j == 1) {
      const std::size_t m = terms_.size();
      for (std::size_t i = 0; i < m; ++i) {
        if (merge_ && i + 1 == m) break;
        terms_[i]->emit(lam / 2, out);
      }
      if (merge_) terms_[m - 1]->emit(lam, out);
      for (std::size_t i = m; i-- > 0;) {
        if (merge_ && i + 1 == m) continue;
        terms_[i]->emit(lam / 2, out);
      }
      return;
    }
    const double pj = p_[static_cast<std::size_t>(j - 2)];
    emit_suzuki(j - 1, pj * lam, out);
    emit_suzuki(j - 1, pj * lam, out);
    emit_suzuki(j - 1, (1 - 4 * pj) * lam, out);
    emit_suzuki(j - 1, pj * lam, out);
    emit_suzuki(j - 1, pj * lam, out);
  }

  int k_;
  std::vector<NodePtr> terms_;
  std::size_t r_;
  bool merge_;
  std::vector<double> p_;
};

class SymmetrizeNode final : public Node {
 public:
  SymmetrizeNode(NodePtr child, NodePtr rev_child, double sign)
      : Node(child->layout(), "sym(" + child->label() + ")", child->time_power()),
        child_(std::move(child)),
        rev_(std::move(rev_child)),
        sign_(sign) {
    count_ = child_->count().times(2);
    c_ = std::pow(2.0, -1.0 / time_power());
  }

  Matrix natural(double s, EvalContext& ctx) const override {
    if (odd()) return child_->eval(s / 2, ctx) * rev_->eval(s / 2, ctx);
    return child_->signed_natural(sign_ * c_ * s, ctx) *
           child_->signed_natural(-sign_ * c_ * s, ctx);
  }
  void emit_natural(double s, GateSequence& out) const override {
    if (odd()) {
      child_->emit(s / 2, out);
      rev_->emit(s / 2, out);
      return;
    }
    child_->emit_natural(sign_ * c_ * s, out);
    child_->emit_natural(-sign_ * c_ * s, out);
  }
  NodePtr transform(Transform& tr) const override {
    if (tr.mode() == Transform::Mode::Reverse) {
      if (odd()) return std::make_shared<SymmetrizeNode>(child_, rev_, sign_);
      auto r = tr.apply(child_);
      return std::make_shared<SymmetrizeNode>(r, r, -sign_);
    }
    return std::make_shared<SymmetrizeNode>(tr.apply(child_), tr.apply(rev_), sign_);
  }

 private:
  bool odd() const { return time_power() % 2 == 1; }

  NodePtr child_, rev_;
  double sign_;
  double c_;
};

}  // namespace

Node::Node(HilbertLayout layout, std::string label, int time_power)
    : layout_(std::move(layout)), label_(std::move(label)), time_power_(time_power) {}

Matrix Node::eval(double t, EvalContext& ctx) const {
  const double s = clean(std::abs(t));
  const Matrix* m = ctx.find(this, -1, s);
  if (!m) m = &ctx.store(this, -1, s, natural(s, ctx));
  if (t < 0) return m->adjoint();
  return *m;
}

Matrix Node::signed_natural(double s, EvalContext& ctx) const {
  s = clean(s);
  if (const Matrix* m = ctx.find(this, -2, s)) return *m;
  return ctx.store(this, -2, s, natural(s, ctx));
}

void Node::right_multiply(Matrix& acc, double t, EvalContext& ctx) const {
  acc = acc * eval(t, ctx);
}

void Node::emit(double t, GateSequence& out) const {
  if (t >= 0) {
    emit_natural(clean(t), out);
    return;
  }
  GateSequence tmp(layout_);
  emit_natural(-t, tmp);
  out.append_adjoint(tmp);
}

std::size_t EvalContext::KeyHash::operator()(const Key& k) const {
  std::size_t h = std::hash<const void*>{}(k.node);
  h ^= std::hash<int>{}(k.tag) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= std::hash<std::uint64_t>{}(std::bit_cast<std::uint64_t>(k.s)) +
       0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

const Matrix* EvalContext::find(const void* node, int tag, double s) const {
  auto it = table_.find(Key{node, tag, s});
  return it == table_.end() ? nullptr : &it->second;
}

const Matrix& EvalContext::store(const void* node, int tag, double s, Matrix m) {
  return table_.insert_or_assign(Key{node, tag, s}, std::move(m)).first->second;
}

Transform Transform::conjugation(Matrix w, std::string tag) {
  Transform t;
  t.mode_ = Mode::Conjugate;
  t.w_ = std::move(w);
  t.tag_ = std::move(tag);
  return t;
}

Transform Transform::reversal() { return Transform(); }

NodePtr Transform::apply(const NodePtr& n) {
  auto it = nodes_.find(n.get());
  if (it != nodes_.end()) return it->second;
  NodePtr out = n->transform(*this);
  nodes_.emplace(n.get(), out);
  return out;
}

GeneratorPtr Transform::apply(const GeneratorPtr& g) {
  if (mode_ == Mode::Reverse) return g;
  auto it = gens_.find(g.get());
  if (it != gens_.end()) return it->second;
  auto out = g->conjugated(w_, tag_);
  gens_.emplace(g.get(), out);
  return out;
}

Operator ParamUnitary::eval(double t) const {
  return Operator(layout(), matrix(t));
}

Matrix ParamUnitary::matrix(double t) const {
  EvalContext ctx;
  return node_->eval(t, ctx);
}

Matrix ParamUnitary::matrix(double t, EvalContext& ctx) const {
  return node_->eval(t, ctx);
}

GateSequence ParamUnitary::compile(double t, std::uint64_t max_calls) const {
  if (cost().total > max_calls)
    throw ResourceError("gate sequence of " + std::to_string(cost().total) +
                        " calls exceeds cap " + std::to_string(max_calls));
  GateSequence s(layout());
  node_->emit(t, s);
  return s;
}

ParamUnitary primitive(GeneratorPtr g) {
  return ParamUnitary(std::make_shared<PrimitiveNode>(std::move(g)));
}

ParamUnitary primitive(std::string kind, std::string label, Operator h) {
  return primitive(std::make_shared<Generator>(std::move(kind), std::move(label),
                                               std::move(h)));
}

ParamUnitary fixed_primitive(GeneratorPtr g, double theta) {
  return ParamUnitary(std::make_shared<FixedNode>(std::move(g), theta));
}

ParamUnitary scale(const ParamUnitary& u, double c) {
  return ParamUnitary(std::make_shared<ScaleNode>(u.node(), c));
}

ParamUnitary linearize(const ParamUnitary& u) {
  if (u.time_power() == 1) return u;
  return ParamUnitary(std::make_shared<LinearizeNode>(u.node()));
}

ParamUnitary product(const std::vector<ParamUnitary>& factors, std::string label) {
  if (factors.empty()) throw std::invalid_argument("empty product");
  std::vector<NodePtr> kids;
  for (const auto& f : factors) kids.push_back(f.node());
  return ParamUnitary(std::make_shared<ProductNode>(std::move(kids), std::move(label)));
}

ParamUnitary conjugate(const ParamUnitary& u, const Operator& w,
                       const std::string& tag) {
  if (!(w.layout() == u.layout())) throw LayoutError("conjugator layout mismatch");
  auto tr = Transform::conjugation(w.data(), tag);
  return ParamUnitary(tr.apply(u.node()));
}

ParamUnitary reverse(const ParamUnitary& u) {
  auto tr = Transform::reversal();
  return ParamUnitary(tr.apply(u.node()));
}

ParamUnitary repeat(const ParamUnitary& u, std::size_t r) {
  if (r == 1) return u;
  return ParamUnitary(std::make_shared<RepeatNode>(u.node(), r));
}

BchConstants bch_constants(int p, int k) {
  const double e = (k + 1.0) / (2.0 * p + k + 1.0);
  const double two_e = std::pow(2.0, e);
  BchConstants c{};
  c.r = two_e / (4.0 * (2.0 - two_e));
  c.beta = std::pow(2.0 * c.r, 1.0 / (k + 1.0));
  c.gamma = std::pow(0.25 + c.r, 1.0 / (k + 1.0));
  return c;
}

ParamUnitary bch(int p, int k, const ParamUnitary& ua, const ParamUnitary& ub) {
  if (p < 1) throw std::invalid_argument("BCH order must be at least 1");
  if (k < 1 || k % 2 == 0) throw std::invalid_argument("BCH weight k must be odd");
  return ParamUnitary(std::make_shared<BchNode>(p, k, ua.node(), ub.node(), false));
}

ParamUnitary trotter(int order, const std::vector<ParamUnitary>& terms,
                     std::size_t slices, bool merge_middle) {
  if (order < 2 || order % 2 != 0)
    throw std::invalid_argument("Trotter order must be even and at least 2");
  if (terms.empty()) throw std::invalid_argument("Trotter needs at least one term");
  if (slices == 0) throw std::invalid_argument("slice count must be positive");
  std::vector<NodePtr> kids;
  for (const auto& t : terms) kids.push_back(t.node());
  return ParamUnitary(
      std::make_shared<TrotterNode>(order, std::move(kids), slices, merge_middle));
}

ParamUnitary symmetrize(const ParamUnitary& u) {
  NodePtr rev = u.time_power() % 2 == 1 ? reverse(u).node() : u.node();
  return ParamUnitary(std::make_shared<SymmetrizeNode>(u.node(), rev, 1.0));
}

}  // namespace bosynth
