#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leibniz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MixedFieldError : public Error {
public:
    MixedFieldError() : Error("operands belong to different scalar fields") {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// The indeterminate `a` was used while parsing under field Q.
class FieldMismatch : public ParseError {
public:
    explicit FieldMismatch(std::size_t position)
        : ParseError("indeterminate 'a' is not allowed over Q", position) {}
};

/// Evaluating a rational function at a root of its denominator.
class PoleError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("matrix is singular") {}
};

class NotLie : public Error {
public:
    using Error::Error;
};

class NotDifferential : public Error {
public:
    using Error::Error;
};

class NotDerivation : public Error {
public:
    using Error::Error;
};

class NotIsomorphism : public Error {
public:
    using Error::Error;
};

class InvalidAction : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class UnknownName : public Error {
public:
    explicit UnknownName(const std::string& name) : Error("unknown catalog entry '" + name + "'") {}
};

class ExcludedParameter : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class DocumentError : public Error {
public:
    using Error::Error;
};

}  // namespace leibniz
