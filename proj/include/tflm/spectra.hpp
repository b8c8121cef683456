#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tflm/ast.hpp"

namespace tflm {

struct TestRecord {
  std::string test_id;
  bool passed = false;
  std::set<int> covered_lines;  // 1-based
};

struct CoverageMatrix {
  std::vector<TestRecord> tests;

  int total_passed() const {
    int n = 0;
    for (const auto& t : tests) n += t.passed ? 1 : 0;
    return n;
  }
  int total_failed() const { return static_cast<int>(tests.size()) - total_passed(); }
};

/// Per-line suspiciousness, values in [0,1]. Keys are executable lines.
using ScoreVector = std::map<int, double>;

/// Tarantula: (F/TF) / (P/TP + F/TF). Degenerate cases: TF=0 -> all zero;
/// TP=0 -> 1 for lines with failing coverage, else 0; uncovered lines -> 0.
ScoreVector tarantula_scores(const CoverageMatrix& matrix,
                             const std::set<int>& executable_lines);

/// Statement-level SBI: F / (F + P); uncovered lines score 0.
ScoreVector sbi_scores(const CoverageMatrix& matrix,
                       const std::set<int>& executable_lines);

/// Per-node suspiciousness: max line score over the node's span; 0 when the
/// span holds no scored line.
std::map<int, double> node_suspiciousness(const ScoreVector& scores,
                                          const ParsedProgram& program);

/// Coverage file: {"tests": [{"id", "outcome": "pass"|"fail", "lines": [..]}]}
CoverageMatrix parse_coverage_json(const std::string& json_text);
CoverageMatrix load_coverage_file(const std::string& path);
std::string coverage_to_json(const CoverageMatrix& matrix);

}  // namespace tflm
