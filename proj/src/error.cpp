#include "primedfa/error.hpp"

namespace primedfa {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidDfa: return "InvalidDfa";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotMlsAdfaPlus: return "NotMlsAdfaPlus";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::WordNotMaxVisiting: return "WordNotMaxVisiting";
    case ErrorCode::NoPumpablePair: return "NoPumpablePair";
    case ErrorCode::EqualPumpSymbols: return "EqualPumpSymbols";
    case ErrorCode::UnaryPowerWord: return "UnaryPowerWord";
    case ErrorCode::IsPrime: return "IsPrime";
    case ErrorCode::Inconclusive: return "Inconclusive";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::LiteralOutOfRange: return "LiteralOutOfRange";
    case ErrorCode::ClauseCountMismatch: return "ClauseCountMismatch";
    case ErrorCode::NoVariables: return "NoVariables";
    case ErrorCode::VariableOutOfRange: return "VariableOutOfRange";
    case ErrorCode::TriviallySat: return "TriviallySat";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::ModeUnsound: return "ModeUnsound";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace primedfa
