// Copyright 2026 The qoc Authors
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

#include "qoc/ad/tape.hpp"

#include <algorithm>

#include "qoc/error.hpp"

namespace qoc::ad {

const Value& Var::value() const { return tape_->node(id_).value; }

bool Var::requires_grad() const { return tape_->node(id_).requires_grad; }

Var Tape::leaf(Value value, bool requires_grad) {
  Node n;
  n.value = std::move(value);
  n.requires_grad = requires_grad;
  nodes_.push_back(std::move(n));
  return Var(this, nodes_.size() - 1);
}

Var Tape::record(std::shared_ptr<Op> op, std::span<const Var> operands) {
  Node n;
  n.operands.reserve(operands.size());
  std::vector<const Value*> inputs;
  inputs.reserve(operands.size());
  for (const Var& v : operands) {
    if (&v.tape() != this) throw Error(Errc::ShapeMismatch, "operand recorded on another tape");
    n.operands.push_back(v.id());
    inputs.push_back(&nodes_[v.id()].value);
    n.requires_grad = n.requires_grad || nodes_[v.id()].requires_grad;
  }
  n.value = op->forward(inputs);
  n.op = std::move(op);
  nodes_.push_back(std::move(n));
  return Var(this, nodes_.size() - 1);
}

void Tape::set_leaf(Var leaf, Value value) {
  Node& n = nodes_.at(leaf.id());
  if (n.op) throw Error(Errc::ShapeMismatch, "set_leaf on a non-leaf node");
  if (!n.value.same_shape(value)) throw Error(Errc::ShapeMismatch, "set_leaf changes the leaf shape");
  n.value = std::move(value);
}

void Tape::replay() {
  std::vector<const Value*> inputs;
  for (Node& n : nodes_) {
    if (!n.op) continue;
    inputs.clear();
    for (NodeId id : n.operands) inputs.push_back(&nodes_[id].value);
    n.value = n.op->forward(inputs);
  }
}

const Value& GradientMap::at(Var leaf) const { return at(leaf.id()); }

const Value& GradientMap::at(NodeId leaf) const {
  auto it = grads_.find(leaf);
  if (it == grads_.end()) throw Error(Errc::ShapeMismatch, "leaf has no gradient entry");
  return it->second;
}

GradientMap backward(const Tape& tape, Var output) {
  if (&output.tape() != &tape) throw Error(Errc::NonScalarOutput, "output recorded on another tape");
  const Value& out = output.value();
  if (!out.is_real() || !out.is_scalar()) {
    throw Error(Errc::NonScalarOutput, "backward requires a real scalar output");
  }

  std::vector<Value> adjoint(output.id() + 1);
  adjoint[output.id()] = Value::scalar(1.0);

  std::vector<const Value*> inputs;
  std::vector<Value*> grad_inputs;
  for (NodeId id = output.id() + 1; id-- > 0;) {
    const Tape::Node& n = tape.node(id);
    if (!n.op || !n.requires_grad || adjoint[id].empty()) continue;
    inputs.clear();
    grad_inputs.clear();
    for (NodeId operand : n.operands) {
      const Tape::Node& src = tape.node(operand);
      inputs.push_back(&src.value);
      if (src.requires_grad) {
        if (adjoint[operand].empty()) adjoint[operand] = src.value.zeros_like();
        grad_inputs.push_back(&adjoint[operand]);
      } else {
        grad_inputs.push_back(nullptr);
      }
    }
    n.op->backward(inputs, n.value, adjoint[id], grad_inputs);
  }

  GradientMap result;
  for (NodeId id = 0; id < tape.size(); ++id) {
    const Tape::Node& n = tape.node(id);
    if (n.op || !n.requires_grad) continue;
    if (id <= output.id() && !adjoint[id].empty()) {
      result.grads_.emplace(id, std::move(adjoint[id]));
    } else {
      result.grads_.emplace(id, n.value.zeros_like());
    }
  }
  return result;
}

}  // namespace qoc::ad
