#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dvfactor {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid parameters: non-prime modulus, family constraints, kind mismatch.
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Undefined valuation arithmetic such as infinity - infinity.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

// The brute-force oracle refused to run past one of its limits.
class ResourceError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column, std::string token)
        : Error(format(message, line, column, token)), line_(line), column_(column), token_(std::move(token)) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& token() const { return token_; }

private:
    static std::string format(const std::string& message, std::size_t line, std::size_t column,
                              const std::string& token) {
        std::string out = "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
        if (!token.empty()) out += " (at '" + token + "')";
        return out;
    }

    std::size_t line_;
    std::size_t column_;
    std::string token_;
};

}  // namespace dvfactor
