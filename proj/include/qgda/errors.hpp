#pragma once

#include <stdexcept>
#include <string>

namespace qgda {

// Errors that indicate misuse of an operation (wrong field, wrong algebra,
// zero divisor, non-homogeneous argument). Recoverable conditions that a
// caller is expected to branch on (singular element, missing grade) are
// reported through std::optional return values instead.

class Error : public std::domain_error {
public:
    explicit Error(const std::string& what) : std::domain_error(what) {}
};

class FieldMismatchError : public Error {
public:
    explicit FieldMismatchError(const std::string& what) : Error(what) {}
};

class AlgebraMismatchError : public Error {
public:
    explicit AlgebraMismatchError(const std::string& what) : Error(what) {}
};

class DivisionByZeroError : public Error {
public:
    explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

class NotHomogeneousError : public Error {
public:
    explicit NotHomogeneousError(const std::string& what) : Error(what) {}
};

class NotInvertibleError : public Error {
public:
    explicit NotInvertibleError(const std::string& what) : Error(what) {}
};

class EvalError : public Error {
public:
    explicit EvalError(const std::string& what) : Error(what) {}
};

}  // namespace qgda
