#pragma once

#include <string>
#include <vector>

namespace tflm {

/// Parse-tree node. Nodes live in ParsedProgram::nodes with node_id equal to
/// the vector index; ids are assigned in pre-order, so a subtree occupies a
/// contiguous id range.
struct AstNode {
  std::string symbol;
  int rule_index = -1;        // index into Grammar::rules
  std::vector<int> children;  // node ids, one per nonterminal in the rhs
  int first_line = 0;         // 1-based, inclusive
  int last_line = 0;
  int node_id = -1;
};

struct ParsedProgram {
  std::vector<AstNode> nodes;  // nodes[0] is the root
  std::string source;
  std::vector<int> executable_lines;  // sorted, 1-based
  int line_count = 0;

  const AstNode& root() const { return nodes.front(); }
  int node_count() const { return static_cast<int>(nodes.size()); }

  bool is_executable(int line) const {
    for (int l : executable_lines)
      if (l == line) return true;
    return false;
  }
};

}  // namespace tflm
