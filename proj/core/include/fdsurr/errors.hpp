#pragma once

#include <stdexcept>
#include <string>

namespace fdsurr {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The oracle refused a query because its evaluation budget is spent.
class BudgetExhausted : public Error {
public:
    BudgetExhausted() : Error("evaluation budget exhausted") {}
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(long expected, long got)
        : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                std::to_string(got)) {}
};

class NonPositiveInput : public Error {
public:
    using Error::Error;
};

class EmptyValueDataset : public Error {
public:
    EmptyValueDataset() : Error("value dataset is empty") {}
};

class EmptyTrace : public Error {
public:
    EmptyTrace() : Error("trace has no completed outer iterations") {}
};

class MismatchedProblemSets : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace fdsurr
