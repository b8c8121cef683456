#include "tflm/errors.hpp"

namespace tflm {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::NoRuleForNonterminal: return "NoRuleForNonterminal";
    case ErrorCode::DuplicateRuleId: return "DuplicateRuleId";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::EmptyProgram: return "EmptyProgram";
    case ErrorCode::NoTests: return "NoTests";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::IncompleteSum: return "IncompleteSum";
    case ErrorCode::NonDecomposableProduct: return "NonDecomposableProduct";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::QueryInEvidence: return "QueryInEvidence";
    case ErrorCode::InvalidLeaf: return "InvalidLeaf";
    case ErrorCode::MissingDistribution: return "MissingDistribution";
    case ErrorCode::UnnormalizedDistribution: return "UnnormalizedDistribution";
    case ErrorCode::SubclassCountZero: return "SubclassCountZero";
    case ErrorCode::UnknownAttribute: return "UnknownAttribute";
    case ErrorCode::GrammarMismatch: return "GrammarMismatch";
    case ErrorCode::IncompleteAssignment: return "IncompleteAssignment";
    case ErrorCode::BuggyObserved: return "BuggyObserved";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::MissingSubclassLabel: return "MissingSubclassLabel";
    case ErrorCode::InsufficientVersions: return "InsufficientVersions";
    case ErrorCode::MissingPosterior: return "MissingPosterior";
    case ErrorCode::NoBuggyLine: return "NoBuggyLine";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::BuggyLineNotExecutable: return "BuggyLineNotExecutable";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "UnknownError";
}

}  // namespace tflm
