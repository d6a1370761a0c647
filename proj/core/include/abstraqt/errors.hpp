// Copyright 2026 The Abstraqt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ABSTRAQT_ERRORS_HPP
#define ABSTRAQT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abstraqt {

/// Caller violated a precondition (mismatched sizes, bad indices, ...).
class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A gate was routed to the Clifford path but does not map Paulis to Paulis.
class NotCliffordError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// A size or term budget was exceeded (dense oracle qubit bound, sum term cap).
class CapacityError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// An internal invariant failed; indicates a bug rather than bad input.
class InvariantError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

enum class ParseErrorKind {
    Syntax,
    UnknownGate,
    IndexOutOfRange,
    Arity,
    DuplicateTarget,
};

const char *parse_error_code(ParseErrorKind kind);

/// Circuit text could not be parsed. Carries a 1-based source position.
class ParseError : public std::runtime_error {
   public:
    ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string &message);

    ParseErrorKind kind() const {
        return kind_;
    }
    std::size_t line() const {
        return line_;
    }
    std::size_t column() const {
        return column_;
    }
    const char *code() const {
        return parse_error_code(kind_);
    }

   private:
    ParseErrorKind kind_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace abstraqt

#endif
