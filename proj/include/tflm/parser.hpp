#pragma once

#include <map>
#include <string>

#include "tflm/ast.hpp"
#include "tflm/grammar.hpp"

namespace tflm {

/// Parses MiniC source into its unique parse tree. Throws SyntaxError with
/// line/column on malformed input, EmptyProgram on blank input.
ParsedProgram parse_program(const std::string& source, const Grammar& grammar);

/// Maps every executable line to the deepest node whose span contains it.
/// When siblings at the same depth share a line (e.g. the pieces of a `for`
/// header) the lowest node_id — the leftmost in pre-order — wins.
std::map<int, int> finest_enclosing_nodes(const ParsedProgram& program);

/// Depth of each node (root = 0), indexed by node_id.
std::vector<int> node_depths(const ParsedProgram& program);

}  // namespace tflm
