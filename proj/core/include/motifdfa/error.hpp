#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace motifdfa {

/// Base of all errors caused by malformed user input. Precondition
/// violations by callers are reported as std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Pattern syntax error; offset is the 0-based character index in the pattern.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// A character outside the automaton's alphabet. position is 0-based.
class ForeignSymbolError : public Error {
public:
    ForeignSymbolError(std::size_t position, char symbol);
    std::size_t position() const { return position_; }
    char symbol() const { return symbol_; }

private:
    std::size_t position_;
    char symbol_;
};

/// Malformed FASTA, motif-set, or automaton table input; line is 1-based.
class FormatError : public Error {
public:
    FormatError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace motifdfa
