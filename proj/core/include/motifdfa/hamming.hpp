#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "motifdfa/automaton.hpp"
#include "motifdfa/genstring.hpp"

namespace motifdfa {

/// Grid position (e, k): k characters consumed, exactly e mismatches still
/// to be spent on the remaining |g| - k characters.
struct GridState {
    std::size_t errors_left = 0;
    std::size_t consumed = 0;

    bool operator==(const GridState&) const = default;
};

/// Number of positions i with s[i] not in g[i]. Throws std::invalid_argument
/// on a length mismatch and ForeignSymbolError for foreign characters.
std::size_t hamming_distance(std::string_view s, const GeneralizedString& g);

struct HammingAutomaton {
    Nfa nfa;
    /// Grid coordinates of each NFA state.
    std::vector<GridState> states;
};

/// Grid automaton accepting exactly the strings of length |g| within Hamming
/// distance d_max of g. States are ordered by k, then e. Starts are the k = 0
/// row, the only accepting state is (0, |g|). d_max larger than |g| behaves
/// like d_max = |g|. Throws std::invalid_argument for an empty g.
HammingAutomaton build_hamming_automaton(const GeneralizedString& g, std::size_t d_max);

Nfa nfa_from_hamming(const GeneralizedString& g, std::size_t d_max);

/// Size of the grid: sum over k = 0..length of min(d_max, length - k) + 1.
std::size_t hamming_state_count(std::size_t length, std::size_t d_max);

}  // namespace motifdfa
