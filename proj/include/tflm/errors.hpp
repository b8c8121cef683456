#pragma once

#include <stdexcept>
#include <string>

namespace tflm {

enum class ErrorCode {
  // grammar / parsing
  UnknownSymbol,
  NoRuleForNonterminal,
  DuplicateRuleId,
  SyntaxError,
  EmptyProgram,
  // spectra
  NoTests,
  // spn
  CycleDetected,
  IncompleteSum,
  NonDecomposableProduct,
  NonPositiveWeight,
  DomainMismatch,
  QueryInEvidence,
  InvalidLeaf,
  // model
  MissingDistribution,
  UnnormalizedDistribution,
  SubclassCountZero,
  UnknownAttribute,
  GrammarMismatch,
  IncompleteAssignment,
  BuggyObserved,
  // learning
  EmptyCorpus,
  MissingSubclassLabel,
  // evaluation
  InsufficientVersions,
  MissingPosterior,
  NoBuggyLine,
  // corpus
  FileNotFound,
  BuggyLineNotExecutable,
  DepthExceeded,
  BadInput,
};

const char* error_code_name(ErrorCode code);

/// All library failures surface as TflmError; `code()` identifies the
/// condition so callers can branch without parsing messages.
class TflmError : public std::runtime_error {
 public:
  TflmError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw TflmError(code, message);
}

}  // namespace tflm
