// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zonoset {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Shape or index mismatch between operands (wrong direction length, bad column, ...).
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// Operation applied to a value it is not defined on (bottom/top, empty interval, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line),
          column_(column) {}

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

/// Raised by the analyzer for well-formed programs it cannot interpret (uninitialized reads, ...).
class AnalysisError : public Error {
  public:
    using Error::Error;
};

} // namespace zonoset
