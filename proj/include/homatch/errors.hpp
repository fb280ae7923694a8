#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homatch {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text input rejected; position is a byte offset into the input.
struct ParseError : Error {
  ParseError(std::string message, std::size_t position)
      : Error(std::move(message) + " at offset " + std::to_string(position)),
        position(position) {}
  std::size_t position;
};

struct EmptyRuleSetError : Error {
  EmptyRuleSetError() : Error("rule set is empty") {}
};

struct DegenerateSystemError : Error {
  DegenerateSystemError() : Error("system has no rules") {}
};

struct SymbolOutOfRangeError : Error {
  using Error::Error;
};

struct ResourceLimitError : Error {
  using Error::Error;
};

struct StepOutOfRangeError : Error {
  using Error::Error;
};

struct InvalidWitnessError : Error {
  using Error::Error;
};

struct TypeFailError : Error {
  using Error::Error;
};

struct NotNormalError : Error {
  NotNormalError() : Error("judgment subject is not beta-normal") {}
};

}  // namespace homatch
