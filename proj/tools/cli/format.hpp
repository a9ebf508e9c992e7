#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "motifdfa/automaton.hpp"

namespace motifdfa::cli {

// Line-oriented automaton tables:
//
//   DFA v1 | NFA v1
//   alphabet:<symbols in rank order>
//   states:<n>
//   start:<i>            (DFA)   starts:<i j ...>   (NFA)
//   accepting:<i j ...>
//   n rows of |alphabet| space-separated entries: a target index (DFA) or
//   a comma-separated target list, "-" when empty (NFA).
//
// Output is LF-terminated and byte-stable. State labels are not stored.

std::string format_table(const Dfa& dfa);
std::string format_table(const Nfa& nfa);

/// Throw FormatError naming the offending line.
Dfa parse_dfa_table(std::string_view text);
Nfa parse_nfa_table(std::string_view text);
std::variant<Nfa, Dfa> parse_table(std::string_view text);

}  // namespace motifdfa::cli
