#pragma once

#include <stdexcept>
#include <string>

namespace derham {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ArityMismatch : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class ZeroModulus : public Error {
public:
    using Error::Error;
};

class BothZero : public Error {
public:
    using Error::Error;
};

class SingularChange : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

class UnknownVariable : public ParseError {
public:
    using ParseError::ParseError;
};

class ConstantInput : public Error {
public:
    using Error::Error;
};

class DegreeCapExceeded : public Error {
public:
    using Error::Error;
};

class VariableAbsent : public Error {
public:
    using Error::Error;
};

class NotGeneric : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class UnsolvableColumn : public Error {
public:
    using Error::Error;
};

class CertificateFailure : public Error {
public:
    using Error::Error;
};

class DegeneratePlane : public Error {
public:
    using Error::Error;
};

class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace derham
