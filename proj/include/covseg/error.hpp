#pragma once

#include <stdexcept>
#include <string>

namespace covseg {

/* Domain errors report misuse: inputs outside an operation's contract.
   Integrity errors report facts the theory guarantees failing to hold at
   runtime; any throw of IntegrityError is a bug in this library or an
   arithmetic overflow, never a property of valid input data. */

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

struct IntegrityError : Error {
    explicit IntegrityError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    int line;
    int col;
    ParseError(int line_, int col_, const std::string& reason)
        : Error("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + reason),
          line(line_), col(col_) {}
};

} // namespace covseg
