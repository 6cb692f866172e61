// Copyright 2026 The Pointer Suite Authors
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

#ifndef POINTER_SUITE_TRACE_H_
#define POINTER_SUITE_TRACE_H_

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "pointer_suite/sample.h"

namespace pointer_suite {

// The computation behind a sample's target as a DAG of intermediate values.
// Node 0 is the input; the last node is the answer. Edge labels name the
// primitive that produced the target value: start, left, match, right,
// emit, identity, reverse, multicount, dp_step, digit_mul, add.
struct TraceGraph {
  struct Node {
    std::string label;
  };
  struct Edge {
    std::size_t from;
    std::size_t to;
    std::string op;
  };

  std::vector<Node> nodes;
  std::vector<Edge> edges;

  std::size_t AddNode(std::string label);
  void AddEdge(std::size_t from, std::size_t to, std::string op);

  std::vector<std::size_t> Sources() const;
  std::vector<std::size_t> Sinks() const;
  bool IsAcyclic() const;
  bool IsWeaklyConnected() const;

  std::string ToDot() const;
  nlohmann::json ToJson() const;
};

// Re-executes the task's oracle step by step. Throws Error(kUnsupportedTask)
// for an unknown task id and the oracle's errors for malformed input.
TraceGraph ExportTraceGraph(const Sample& sample);

}  // namespace pointer_suite

#endif  // POINTER_SUITE_TRACE_H_
