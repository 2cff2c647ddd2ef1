#include "k3fock/ops/expr.hpp"

#include <stdexcept>

namespace k3fock::ops {

using fock::FockVector;
using fock::Operator;
using taut::SurfaceClass;

struct OpExpr::Node {
  enum class Kind { kWords, kSum, kCompose, kContract };
  Kind kind = Kind::kWords;
  int weight = 0;
  int external = 0;
  bool shaped = false;
  Operator words;                                  // leaf, or the merged leaf part of a sum
  std::vector<std::pair<Rational, OpExpr>> parts;  // sum
  std::shared_ptr<const Node> a;  // compose: a ∘ b; contract: a
  std::shared_ptr<const Node> b;
  SurfaceClass gamma;
};

OpExpr::OpExpr() : node_(std::make_shared<Node>()) {}

OpExpr::OpExpr(Operator words) {
  auto n = std::make_shared<Node>();
  n->shaped = words.shaped();
  n->weight = words.weight();
  n->external = words.external();
  n->words = std::move(words);
  node_ = std::move(n);
}

OpExpr::OpExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

OpExpr OpExpr::identity() { return OpExpr(Operator::identity()); }

int OpExpr::weight() const { return node_->weight; }
int OpExpr::external() const { return node_->external; }

bool OpExpr::is_trivially_zero() const {
  return node_->kind == Node::Kind::kWords && node_->words.is_zero();
}

namespace {

void check_shapes(int wa, int ea, int wb, int eb) {
  if (wa != wb) throw std::invalid_argument("op mixes target weights");
  if (ea != eb) throw std::invalid_argument("op mixes external slot counts");
}

}  // namespace

OpExpr operator+(const OpExpr& a, const OpExpr& b) {
  if (!b.node_->shaped) return a;
  if (!a.node_->shaped) return b;
  check_shapes(a.weight(), a.external(), b.weight(), b.external());
  using Kind = OpExpr::Node::Kind;
  auto n = std::make_shared<OpExpr::Node>();
  n->kind = Kind::kSum;
  n->shaped = true;
  n->weight = a.weight();
  n->external = a.external();
  n->words = Operator(n->weight, n->external);
  for (const OpExpr* e : {&a, &b}) {
    const auto& src = *e->node_;
    if (src.kind == Kind::kWords || src.kind == Kind::kSum) {
      n->words += src.words;
      n->parts.insert(n->parts.end(), src.parts.begin(), src.parts.end());
    } else {
      n->parts.emplace_back(1, *e);
    }
  }
  if (n->parts.empty()) return OpExpr(std::move(n->words));
  return OpExpr(std::shared_ptr<const OpExpr::Node>(std::move(n)));
}

OpExpr operator*(const Rational& s, const OpExpr& a) {
  using Kind = OpExpr::Node::Kind;
  if (a.node_->kind == Kind::kWords) return OpExpr(s * a.node_->words);
  auto n = std::make_shared<OpExpr::Node>();
  n->kind = Kind::kSum;
  n->shaped = true;
  n->weight = a.weight();
  n->external = a.external();
  n->words = Operator(n->weight, n->external);
  if (s != 0) n->parts.emplace_back(s, a);
  return OpExpr(std::shared_ptr<const OpExpr::Node>(std::move(n)));
}

OpExpr operator-(const OpExpr& a, const OpExpr& b) { return a + Rational(-1) * b; }

OpExpr compose(const OpExpr& a, const OpExpr& b) {
  auto n = std::make_shared<OpExpr::Node>();
  n->kind = OpExpr::Node::Kind::kCompose;
  n->shaped = true;
  n->weight = a.weight() + b.weight();
  n->external = a.external() + b.external();
  n->a = a.node_;
  n->b = b.node_;
  return OpExpr(std::shared_ptr<const OpExpr::Node>(std::move(n)));
}

OpExpr OpExpr::contract(const taut::TautRing& ring, const SurfaceClass& gamma) const {
  if (gamma.arity() != external()) throw std::invalid_argument("contraction class arity differs from external slots");
  if (node_->kind == Node::Kind::kWords) return OpExpr(node_->words.contract_external(ring, gamma));
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::kContract;
  n->shaped = true;
  n->weight = weight();
  n->external = 0;
  n->a = node_;
  n->gamma = gamma;
  return OpExpr(std::shared_ptr<const Node>(std::move(n)));
}

FockVector OpExpr::apply(const taut::TautRing& ring, const FockVector& v) const {
  const Node& nd = *node_;
  FockVector out(v.n() + nd.weight, v.slots() + nd.external);
  if (out.n() < 0 || !nd.shaped) return out;
  switch (nd.kind) {
    case Node::Kind::kWords:
      return nd.words.apply(ring, v);
    case Node::Kind::kSum:
      if (!nd.words.is_zero()) out += nd.words.apply(ring, v);
      for (const auto& [c, e] : nd.parts) out += c * e.apply(ring, v);
      return out;
    case Node::Kind::kCompose: {
      const FockVector inner = OpExpr(nd.b).apply(ring, v);
      if (inner.is_zero()) return out;
      FockVector outer = OpExpr(nd.a).apply(ring, inner);
      const int s0 = v.slots();
      const int ea = nd.a->external;
      const int eb = nd.b->external;
      if (ea == 0 || eb == 0) return outer;
      // Slots come out as [v][b][a]; reorder to [v][a][b].
      std::vector<int> perm(s0 + ea + eb);
      for (int j = 0; j < s0; ++j) perm[j] = j;
      for (int t = 0; t < eb; ++t) perm[s0 + t] = s0 + ea + t;
      for (int t = 0; t < ea; ++t) perm[s0 + eb + t] = s0 + t;
      return fock::permute_slots(outer, perm);
    }
    case Node::Kind::kContract:
      return fock::contract_trailing_slots(ring, OpExpr(nd.a).apply(ring, v), nd.gamma);
  }
  return out;
}

std::string OpExpr::to_string() const {
  const Node& nd = *node_;
  switch (nd.kind) {
    case Node::Kind::kWords:
      return nd.words.to_string();
    case Node::Kind::kSum: {
      std::string out = nd.words.is_zero() ? "" : nd.words.to_string();
      for (const auto& [c, e] : nd.parts) {
        if (!out.empty()) out += " + ";
        out += c.get_str() + "*(" + e.to_string() + ")";
      }
      return out.empty() ? "0" : out;
    }
    case Node::Kind::kCompose:
      return "(" + OpExpr(nd.a).to_string() + ") o (" + OpExpr(nd.b).to_string() + ")";
    case Node::Kind::kContract:
      return "contract(" + OpExpr(nd.a).to_string() + "; " + taut::to_string(nd.gamma) + ")";
  }
  return "";
}

fock::Matrix matrix_of(const fock::FockSpace& space, const OpExpr& op, int n) {
  fock::Matrix m = fock::zero_matrix(space, n, n + op.weight(), op.external());
  if (m.target_n < 0) return m;
  const int cols = m.cols();
  const auto& ring = space.ring();
#pragma omp parallel for schedule(dynamic)
  for (int j = 0; j < cols; ++j) {
    m.columns[j] = op.apply(ring, FockVector::unit(m.source->keys[j]));
  }
  return m;
}

fock::Matrix matrix_of_serial(const fock::FockSpace& space, const OpExpr& op, int n) {
  fock::Matrix m = fock::zero_matrix(space, n, n + op.weight(), op.external());
  if (m.target_n < 0) return m;
  for (int j = 0; j < m.cols(); ++j) {
    m.columns[j] = op.apply(space.ring(), FockVector::unit(m.source->keys[j]));
  }
  return m;
}

Operator normal_order(const Operator& op) {
  Operator out(op.weight(), op.external());
  for (const auto& [w, cls] : op.terms()) {
    auto [nw, ncls] = fock::normal_ordered(w, cls);
    out.add_term(nw, ncls);
  }
  return out;
}

Operator truncate(const Operator& op, int n) {
  Operator out(op.weight(), op.external());
  for (const auto& [w, cls] : op.terms()) {
    int ann = 0;
    for (int x : w) ann += x < 0 ? -x : 0;
    if (ann <= n) out.add_term(w, cls);
  }
  return out;
}

Operator times_external(const taut::TautRing& ring, const Operator& op, const SurfaceClass& cls) {
  const int e = op.external();
  if (cls.arity() != e) throw std::invalid_argument("slot class arity differs from external slots");
  Operator out(op.weight(), e);
  for (const auto& [w, c] : op.terms()) {
    const int t = static_cast<int>(w.size());
    std::vector<int> map(e);
    for (int j = 0; j < e; ++j) map[j] = t + j;
    out.add_term(w, ring.mul(c, pullback(cls, map, t + e)));
  }
  return out;
}

}  // namespace k3fock::ops
