#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "motifdfa/alphabet.hpp"
#include "motifdfa/automaton.hpp"

namespace motifdfa {

/// A sequence of non-empty symbol sets. A string matches it when it has the
/// same length and each character lies in the set at its position.
class GeneralizedString {
public:
    /// Throws std::invalid_argument for an empty position set or a set
    /// that names ranks outside the alphabet.
    GeneralizedString(Alphabet alphabet, std::vector<SymbolSet> positions);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return positions_.size(); }
    /// 0-based position.
    SymbolSet at(std::size_t i) const { return positions_[i]; }
    const std::vector<SymbolSet>& positions() const { return positions_; }

    /// Brace notation, e.g. "{A}{A,B}{B}{A,C}".
    std::string to_string() const;

    bool operator==(const GeneralizedString&) const = default;

private:
    Alphabet alphabet_;
    std::vector<SymbolSet> positions_;
};

enum class PatternMode {
    Literal,   ///< bare symbols and [..] groups over a declared alphabet
    IupacDna,  ///< IUPAC nucleotide codes over ACGT, case-insensitive
};

/// Parses pattern syntax. Literal mode: a bare symbol c denotes {c}, a group
/// [c1c2..] denotes {c1,c2,..}. IUPAC mode ignores `alphabet`, uses ACGT and
/// expands degenerate codes (also inside groups). ASCII whitespace between
/// positions is ignored. Throws ParseError with the offending offset.
GeneralizedString parse_generalized_string(std::string_view text, const Alphabet& alphabet,
                                           PatternMode mode);

/// Throws ForeignSymbolError for characters outside the alphabet.
bool matches(std::string_view s, const GeneralizedString& g);

/// Chain automaton 0 -> 1 -> ... -> |g| with start {0} and accepting {|g|}.
/// Throws std::invalid_argument for an empty generalized string.
Nfa nfa_from_genstring(const GeneralizedString& g);

/// Bitmask of indices into the (deduplicated) pattern list.
using PatternMask = std::uint32_t;

/// (H, k): the last k characters read match the first k positions of every
/// pattern in H.
struct LevelState {
    PatternMask patterns = 0;
    std::size_t level = 0;

    bool operator==(const LevelState&) const = default;
};

/// Parent of a level-0 state: it sits in the top level.
struct TopLevel {
    bool operator==(const TopLevel&) const = default;
};
/// No pattern of H admits the symbol at this level.
struct NoParent {
    bool operator==(const NoParent&) const = default;
};

using ParentResult = std::variant<TopLevel, NoParent, LevelState>;

/// Parent of state (H, k) under `symbol`: (H', k-1) with
/// H' = {h in H | symbol in h[k]} (1-based k), NoParent when H' is empty,
/// TopLevel when k = 0.
ParentResult parent(const LevelState& state, std::size_t symbol, std::span<const GeneralizedString> patterns);

/// Levelwise automaton for a set of equal-length generalized strings, with
/// the bookkeeping the construction produces.
struct GenstringSetAutomaton {
    Nfa nfa;
    /// Patterns after removing duplicates; indices refer to this list.
    std::vector<GeneralizedString> patterns;
    /// LevelState behind each NFA state.
    std::vector<LevelState> states;
    /// Number of states per level k = 0..l.
    std::vector<std::size_t> level_sizes;
    /// Executed (node, symbol) iterations of the level loop.
    std::uint64_t iterations = 0;
};

inline constexpr std::size_t max_pattern_set_size = 20;

/// Builds levels l, l-1, ..., 0 top-down from the single accepting state
/// (G, l). Starts are level 0. No self-loops are added; compose with
/// add_start_self_loops for suffix matching. NFA states are numbered level
/// by level from 0 to l, in discovery order within a level.
/// Throws std::invalid_argument for an empty set, mixed lengths or
/// alphabets, length 0, or more than max_pattern_set_size distinct patterns.
GenstringSetAutomaton build_genstring_set_automaton(std::span<const GeneralizedString> patterns);

Nfa nfa_from_genstring_set(std::span<const GeneralizedString> patterns);

/// Reads a motif-set file: one pattern per line, blank lines and lines
/// starting with '#' skipped, all patterns of equal length. Throws
/// FormatError naming the line.
std::vector<GeneralizedString> read_motif_set(std::istream& in, const Alphabet& alphabet, PatternMode mode);

}  // namespace motifdfa
