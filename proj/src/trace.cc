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

#include "pointer_suite/trace.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "pointer_suite/error.h"
#include "pointer_suite/numeric.h"
#include "pointer_suite/pen.h"
#include "pointer_suite/perm.h"
#include "pointer_suite/seq.h"

namespace pointer_suite {
namespace {

std::string DotEscape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// PEN family. The answer path is y_0 = right(start), then
// y_j = right(match(left(y_{j-1}))). PE emits the matched words, PEV both.
void TracePenFamily(const Sample& sample, TraceGraph& g, std::size_t input) {
  const Seq seq = Seq::Parse(sample.input);
  const std::vector<std::size_t> chain = TracePenChain(seq);
  const bool emit_green = sample.task != TaskId::kPen;
  const bool emit_yellow = sample.task != TaskId::kPe;

  std::vector<std::pair<std::size_t, std::string>> emitted;
  std::size_t green = g.AddNode(seq.token(chain[0]));
  g.AddEdge(input, green, "start");
  for (std::size_t j = 0; j < chain.size(); ++j) {
    if (j > 0) {
      const std::size_t next = g.AddNode(seq.token(chain[j]));
      g.AddEdge(green, next, "match");
      green = next;
    }
    if (emit_green) emitted.push_back({green, "emit"});
    if (!emit_yellow) continue;
    const std::size_t yellow = g.AddNode(seq.token(chain[j] + 1));
    g.AddEdge(green, yellow, "right");
    emitted.push_back({yellow, "emit"});
    // The next green is reached from this yellow through its left
    // neighbor, which is a fresh value node in the trace.
    if (j + 1 < chain.size()) {
      const std::size_t left = g.AddNode(seq.token(chain[j]));
      g.AddEdge(yellow, left, "left");
      green = left;
    }
  }
  const std::size_t answer = g.AddNode(sample.target);
  for (const auto& [node, op] : emitted) g.AddEdge(node, answer, op);
}

void TracePermFamily(const Sample& sample, TraceGraph& g, std::size_t input) {
  const PermInput in = ParsePermInput(sample.input);
  const std::vector<MulticountStep> steps = TracePerm(in.seq, in.start);
  std::vector<std::size_t> words;
  std::size_t prev = input;
  for (std::size_t j = 0; j < steps.size(); ++j) {
    const std::size_t node = g.AddNode(in.seq.token(steps[j].position));
    g.AddEdge(prev, node, j == 0 ? "start" : "match");
    words.push_back(node);
    prev = node;
  }
  std::vector<std::size_t> items = words;
  if (sample.task != TaskId::kPer) {
    for (std::size_t j = 0; j < steps.size(); ++j) {
      items[j] = g.AddNode(in.seq.token(steps[j].position) + "." +
                           std::to_string(steps[j].value));
      g.AddEdge(words[j], items[j], "multicount");
      // The count depends on every earlier step.
      if (j > 0) g.AddEdge(items[j - 1], items[j], "multicount");
    }
  }
  if (sample.task == TaskId::kPem) {
    const std::size_t answer = g.AddNode(sample.target);
    for (std::size_t node : items) g.AddEdge(node, answer, "emit");
    return;
  }
  // Reversal: the last word is the head of the answer.
  std::size_t head = items.back();
  for (std::size_t j = items.size() - 1; j-- > 0;) {
    const std::size_t node = g.AddNode(g.nodes[items[j]].label);
    g.AddEdge(items[j], node, "identity");
    g.AddEdge(head, node, "reverse");
    head = node;
  }
  const std::size_t answer = g.AddNode(sample.target);
  g.AddEdge(head, answer, "emit");
}

void TraceCopy(const Sample& sample, TraceGraph& g, std::size_t input) {
  std::vector<std::string> tokens = OracleCpy(Seq::Parse(sample.input));
  const bool reverse = sample.task == TaskId::kRcpy;
  if (reverse) std::reverse(tokens.begin(), tokens.end());
  const char* op = reverse ? "reverse" : "identity";
  std::size_t prev = input;
  for (const std::string& t : tokens) {
    const std::size_t node = g.AddNode(t);
    g.AddEdge(prev, node, op);
    prev = node;
  }
  g.AddEdge(prev, g.AddNode(sample.target), op);
}

void TraceDp(const Sample& sample, TraceGraph& g, std::size_t input) {
  const std::vector<int64_t> numbers = ParseNumberList(sample.input);
  const std::vector<DpStep> steps = HssTrace(numbers);
  const bool sse = sample.task == TaskId::kSse;
  std::vector<std::size_t> nodes;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    std::string label = std::to_string(steps[i].dp);
    if (sse) label += steps[i].taken ? ":T" : ":S";
    const std::size_t node = g.AddNode(label);
    g.AddEdge(i == 0 ? input : nodes[i - 1], node, "dp_step");
    if (i >= 2) g.AddEdge(nodes[i - 2], node, "dp_step");
    nodes.push_back(node);
  }
  const std::size_t answer = g.AddNode(sample.target);
  if (sse) {
    for (std::size_t node : nodes) g.AddEdge(node, answer, "emit");
  } else {
    g.AddEdge(nodes.back(), answer, "emit");
  }
}

void TraceArithmetic(const Sample& sample, TraceGraph& g, std::size_t input) {
  if (sample.task == TaskId::kAdd) {
    const std::vector<Decimal> addends = ParseInfix(sample.input, '+');
    Decimal acc;
    std::size_t prev = input;
    for (const Decimal& x : addends) {
      acc = ShiftedAdd(acc, x);
      const std::size_t node = g.AddNode(acc.ToString());
      g.AddEdge(prev, node, "add");
      prev = node;
    }
    g.AddEdge(prev, g.AddNode(sample.target), "emit");
    return;
  }
  const std::vector<Decimal> ops = ParseInfix(sample.input, '*');
  if (ops.size() != 2) {
    throw Error(ErrorCode::kMalformedRecord, "expected two operands");
  }
  if (sample.task == TaskId::kDmul) {
    const std::size_t product =
        g.AddNode(DigitMul(ops[0], ops[1].digit(0)).ToString());
    g.AddEdge(input, product, "digit_mul");
    g.AddEdge(product, g.AddNode(sample.target), "emit");
    return;
  }
  Decimal acc;
  std::size_t acc_node = input;
  for (std::size_t i = 0; i < ops[1].num_digits(); ++i) {
    const Decimal part = DigitMul(ops[0], ops[1].digit(i));
    const std::size_t part_node = g.AddNode(part.ToString());
    g.AddEdge(input, part_node, "digit_mul");
    acc = ShiftedAdd(acc, part, i);
    const std::size_t next = g.AddNode(acc.ToString());
    g.AddEdge(part_node, next, "add");
    if (i > 0) g.AddEdge(acc_node, next, "add");
    acc_node = next;
  }
  g.AddEdge(acc_node, g.AddNode(sample.target), "emit");
}

}  // namespace

std::size_t TraceGraph::AddNode(std::string label) {
  nodes.push_back({std::move(label)});
  return nodes.size() - 1;
}

void TraceGraph::AddEdge(std::size_t from, std::size_t to, std::string op) {
  edges.push_back({from, to, std::move(op)});
}

std::vector<std::size_t> TraceGraph::Sources() const {
  std::vector<bool> has_in(nodes.size(), false);
  for (const Edge& e : edges) has_in[e.to] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!has_in[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> TraceGraph::Sinks() const {
  std::vector<bool> has_out(nodes.size(), false);
  for (const Edge& e : edges) has_out[e.from] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!has_out[i]) out.push_back(i);
  }
  return out;
}

bool TraceGraph::IsAcyclic() const {
  // Kahn's algorithm.
  std::vector<int> indegree(nodes.size(), 0);
  std::vector<std::vector<std::size_t>> succ(nodes.size());
  for (const Edge& e : edges) {
    ++indegree[e.to];
    succ[e.from].push_back(e.to);
  }
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t n = ready.back();
    ready.pop_back();
    ++seen;
    for (std::size_t s : succ[n]) {
      if (--indegree[s] == 0) ready.push_back(s);
    }
  }
  return seen == nodes.size();
}

bool TraceGraph::IsWeaklyConnected() const {
  if (nodes.empty()) return false;
  std::vector<std::size_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges) parent[find(e.from)] = find(e.to);
  const std::size_t root = find(0);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (find(i) != root) return false;
  }
  return true;
}

std::string TraceGraph::ToDot() const {
  std::string out = "digraph trace {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" +
           DotEscape(nodes[i].label) + "\"];\n";
  }
  for (const Edge& e : edges) {
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) +
           " [label=\"" + e.op + "\"];\n";
  }
  out += "}\n";
  return out;
}

nlohmann::json TraceGraph::ToJson() const {
  nlohmann::json out = {{"nodes", nlohmann::json::array()},
                        {"edges", nlohmann::json::array()}};
  for (const Node& n : nodes) out["nodes"].push_back(n.label);
  for (const Edge& e : edges) {
    out["edges"].push_back({{"from", e.from}, {"to", e.to}, {"op", e.op}});
  }
  return out;
}

TraceGraph ExportTraceGraph(const Sample& sample) {
  TraceGraph g;
  const std::size_t input = g.AddNode(sample.input);
  switch (sample.task) {
    case TaskId::kPen:
    case TaskId::kPe:
    case TaskId::kPev:
      TracePenFamily(sample, g, input);
      break;
    case TaskId::kPerm:
    case TaskId::kPer:
    case TaskId::kPem:
      TracePermFamily(sample, g, input);
      break;
    case TaskId::kCpy:
    case TaskId::kRcpy:
      TraceCopy(sample, g, input);
      break;
    case TaskId::kHss:
    case TaskId::kSse:
      TraceDp(sample, g, input);
      break;
    case TaskId::kMul:
    case TaskId::kDmul:
    case TaskId::kAdd:
      TraceArithmetic(sample, g, input);
      break;
    default:
      throw Error(ErrorCode::kUnsupportedTask, "no trace for this task");
  }
  return g;
}

}  // namespace pointer_suite
