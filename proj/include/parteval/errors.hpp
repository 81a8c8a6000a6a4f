#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace parteval {

// Input that cannot be tokenized or read (bad syntax, missing columns).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
    ParseError(std::size_t line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg) {}
};

// Well-formed input that violates a domain invariant: self-loops,
// overlapping or incomplete partitions, infeasible sampling requests.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace parteval
