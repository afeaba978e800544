// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rdft {

/// Base class for all errors raised by tensor value operations.
class TensorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Incompatible shapes: broadcast failure, rank mismatch, bad axis, bad range.
class ShapeMismatchError : public TensorError {
public:
    using TensorError::TensorError;
};

/// Operation applied to a tensor of the wrong dtype class.
class DtypeMismatchError : public TensorError {
public:
    using TensorError::TensorError;
};

/// Integer result does not fit the result dtype, or a fold is undefined
/// (min/max over an empty axis, cosine similarity with a zero-norm operand).
class EvaluationError : public TensorError {
public:
    using TensorError::TensorError;
};

/// Lexical form violates the tensor datatype rules. Carries the first
/// violated rule; surfaces in SPARQL as an expression evaluation error.
class IllTypedLiteralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Serialization refused: NaN or infinity cannot appear in a lexical form.
class NonFiniteValueError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Turtle syntax error with source position.
class TurtleParseError : public std::runtime_error {
public:
    TurtleParseError(std::string message, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(column) +
                             ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A prefixed name uses a prefix that was never declared.
class UnknownPrefixError : public TurtleParseError {
public:
    using TurtleParseError::TurtleParseError;
};

/// SPARQL syntax error with character offset.
class QueryParseError : public std::runtime_error {
public:
    QueryParseError(std::string message, std::size_t offset)
        : std::runtime_error("offset " + std::to_string(offset) + ": " + message),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Recognized SPARQL construct outside the supported subset.
class UnsupportedFeatureError : public QueryParseError {
public:
    using QueryParseError::QueryParseError;
};

/// Query-level evaluation failure that aborts the whole query,
/// e.g. a call to a function IRI that was never registered.
class QueryEvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rdft
