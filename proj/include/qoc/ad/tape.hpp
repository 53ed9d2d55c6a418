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

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "qoc/ad/value.hpp"

namespace qoc::ad {

using NodeId = std::size_t;

/// A differentiable primitive. forward() may cache intermediates that
/// backward() reads; backward() must not modify the op.
class Op {
 public:
  virtual ~Op() = default;
  virtual std::string_view name() const = 0;
  virtual Value forward(std::span<const Value* const> inputs) = 0;
  // Accumulates dL/d(input) into grad_inputs[i] (null for inputs that do not
  // require a gradient). grad_output follows the real-composite convention.
  virtual void backward(std::span<const Value* const> inputs, const Value& output,
                        const Value& grad_output, std::span<Value* const> grad_inputs) const = 0;
};

class Tape;

/// Handle to a node recorded on a tape.
class Var {
 public:
  Var() = default;
  Var(Tape* tape, NodeId id) : tape_(tape), id_(id) {}

  Tape& tape() const { return *tape_; }
  NodeId id() const noexcept { return id_; }
  bool valid() const noexcept { return tape_ != nullptr; }
  const Value& value() const;
  bool requires_grad() const;

 private:
  Tape* tape_ = nullptr;
  NodeId id_ = 0;
};

/// Linear record of a computation. Nodes are appended in evaluation order, so
/// every operand precedes its consumer.
class Tape {
 public:
  struct Node {
    std::shared_ptr<Op> op;  // null for leaves and constants
    std::vector<NodeId> operands;
    Value value;
    bool requires_grad = false;
  };

  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  Var leaf(Value value, bool requires_grad = true);
  Var constant(Value value) { return leaf(std::move(value), false); }
  Var record(std::shared_ptr<Op> op, std::span<const Var> operands);

  const Node& node(NodeId id) const { return nodes_.at(id); }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool is_leaf(NodeId id) const { return nodes_.at(id).op == nullptr; }

  // Replaces the payload of a leaf; call replay() afterwards to refresh
  // downstream values.
  void set_leaf(Var leaf, Value value);
  // Re-evaluates every recorded op in order from the current leaf values.
  void replay();

 private:
  std::vector<Node> nodes_;
};

/// Partial derivatives of a scalar output with respect to every leaf that
/// requires a gradient (leaves not reached by the output hold zeros).
class GradientMap {
 public:
  const Value& at(Var leaf) const;
  const Value& at(NodeId leaf) const;
  bool contains(NodeId leaf) const { return grads_.contains(leaf); }
  std::size_t size() const noexcept { return grads_.size(); }
  auto begin() const { return grads_.begin(); }
  auto end() const { return grads_.end(); }

 private:
  friend GradientMap backward(const Tape& tape, Var output);
  std::map<NodeId, Value> grads_;
};

/// Reverse sweep from a real scalar output. Does not modify the tape.
GradientMap backward(const Tape& tape, Var output);

}  // namespace qoc::ad
