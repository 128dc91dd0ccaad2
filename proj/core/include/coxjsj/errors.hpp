#pragma once

#include <stdexcept>
#include <string>

namespace coxjsj {

// Malformed user input: bad diagram files, unknown generator names, labels < 2,
// shapes a construction cannot accept. Parse errors carry a 1-based line/column.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
    InputError(const std::string& what, int line, int column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_ = 0;
    int column_ = 0;
};

// A documented precondition of an operation was violated by the caller.
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// An exhaustive oracle was asked to run beyond its size cap.
class OracleRefusal : public std::runtime_error {
public:
    explicit OracleRefusal(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace coxjsj
