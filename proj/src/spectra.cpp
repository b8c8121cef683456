#include "tflm/spectra.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tflm/errors.hpp"

namespace tflm {

namespace {

struct LineCounts {
  int failed = 0;
  int passed = 0;
};

std::map<int, LineCounts> count_coverage(const CoverageMatrix& matrix,
                                         const std::set<int>& executable_lines) {
  if (matrix.tests.empty())
    fail(ErrorCode::NoTests, "coverage matrix has no tests");
  std::map<int, LineCounts> counts;
  for (int line : executable_lines) counts[line] = {};
  for (const auto& test : matrix.tests)
    for (int line : test.covered_lines) {
      auto it = counts.find(line);
      if (it == counts.end()) continue;  // non-executable noise is ignored
      if (test.passed)
        ++it->second.passed;
      else
        ++it->second.failed;
    }
  return counts;
}

}  // namespace

ScoreVector tarantula_scores(const CoverageMatrix& matrix,
                             const std::set<int>& executable_lines) {
  const auto counts = count_coverage(matrix, executable_lines);
  const int tp = matrix.total_passed();
  const int tf = matrix.total_failed();
  ScoreVector scores;
  for (const auto& [line, c] : counts) {
    double s = 0.0;
    if (tf == 0) {
      s = 0.0;  // no failure signal at all
    } else if (tp == 0) {
      s = c.failed > 0 ? 1.0 : 0.0;
    } else if (c.failed == 0 && c.passed == 0) {
      s = 0.0;  // never executed
    } else {
      const double fr = static_cast<double>(c.failed) / tf;
      const double pr = static_cast<double>(c.passed) / tp;
      s = fr / (pr + fr);
    }
    scores[line] = s;
  }
  return scores;
}

ScoreVector sbi_scores(const CoverageMatrix& matrix,
                       const std::set<int>& executable_lines) {
  const auto counts = count_coverage(matrix, executable_lines);
  ScoreVector scores;
  for (const auto& [line, c] : counts) {
    const int total = c.failed + c.passed;
    scores[line] = total == 0 ? 0.0 : static_cast<double>(c.failed) / total;
  }
  return scores;
}

std::map<int, double> node_suspiciousness(const ScoreVector& scores,
                                          const ParsedProgram& program) {
  std::map<int, double> out;
  for (const auto& node : program.nodes) {
    double best = 0.0;
    auto it = scores.lower_bound(node.first_line);
    for (; it != scores.end() && it->first <= node.last_line; ++it)
      if (it->second > best) best = it->second;
    out[node.node_id] = best;
  }
  return out;
}

CoverageMatrix parse_coverage_json(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::BadInput, std::string("coverage JSON: ") + e.what());
  }
  if (!doc.contains("tests") || !doc["tests"].is_array())
    fail(ErrorCode::BadInput, "coverage JSON: missing `tests` array");
  CoverageMatrix matrix;
  for (const auto& t : doc["tests"]) {
    TestRecord record;
    record.test_id = t.value("id", "");
    const std::string outcome = t.value("outcome", "");
    if (outcome == "pass")
      record.passed = true;
    else if (outcome == "fail")
      record.passed = false;
    else
      fail(ErrorCode::BadInput,
           "coverage JSON: outcome must be \"pass\" or \"fail\"");
    if (!t.contains("lines") || !t["lines"].is_array())
      fail(ErrorCode::BadInput, "coverage JSON: test missing `lines` array");
    for (const auto& l : t["lines"]) record.covered_lines.insert(l.get<int>());
    matrix.tests.push_back(std::move(record));
  }
  return matrix;
}

CoverageMatrix load_coverage_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::FileNotFound, "coverage file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_coverage_json(buf.str());
}

std::string coverage_to_json(const CoverageMatrix& matrix) {
  nlohmann::json tests = nlohmann::json::array();
  for (const auto& t : matrix.tests) {
    nlohmann::json lines = nlohmann::json::array();
    for (int l : t.covered_lines) lines.push_back(l);
    tests.push_back({{"id", t.test_id},
                     {"outcome", t.passed ? "pass" : "fail"},
                     {"lines", lines}});
  }
  return nlohmann::json{{"tests", tests}}.dump(2);
}

}  // namespace tflm
