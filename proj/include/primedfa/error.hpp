#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace primedfa {

enum class ErrorCode {
  InvalidDfa,
  MalformedInput,
  UnknownSymbol,
  AlphabetMismatch,
  BudgetExceeded,
  NotMlsAdfaPlus,
  IndexOutOfRange,
  WordNotMaxVisiting,
  NoPumpablePair,
  EqualPumpSymbols,
  UnaryPowerWord,
  IsPrime,
  Inconclusive,
  MalformedHeader,
  LiteralOutOfRange,
  ClauseCountMismatch,
  NoVariables,
  VariableOutOfRange,
  TriviallySat,
  RetriesExhausted,
  ModeUnsound,
  InternalInconsistency,
  Io,
};

std::string_view to_string(ErrorCode code);

// Every failure surfaced by the library. `position` is a symbol offset for
// word errors and a 1-based line number for text-format errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace primedfa
