// Copyright 2026 The atlkf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace atlk {

enum class ErrorKind {
  Syntax,
  UndeclaredSymbol,
  EmptyProtocol,
  EnabledConsistencyViolation,
  NonSerialState,
  ProtocolMismatch,
  EmptyCoalition,
  UnknownAgent,
  CapExceeded,
  Validation,
};

const char* errorKindName(ErrorKind k);

// All library failures are reported through this exception. line/col are
// 1-based and only meaningful for parse errors (-1 otherwise).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, int line = -1, int col = -1)
      : std::runtime_error(std::move(message)), kind(kind), line(line), col(col) {}

  ErrorKind kind;
  int line;
  int col;
};

}  // namespace atlk
