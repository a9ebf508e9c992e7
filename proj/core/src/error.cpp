#include "motifdfa/error.hpp"

namespace motifdfa {

ParseError::ParseError(std::size_t offset, const std::string& what)
    : Error("pattern offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

ForeignSymbolError::ForeignSymbolError(std::size_t position, char symbol)
    : Error("character '" + std::string(1, symbol) + "' at position " + std::to_string(position) +
            " is not in the alphabet"),
      position_(position),
      symbol_(symbol) {}

FormatError::FormatError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

}  // namespace motifdfa
