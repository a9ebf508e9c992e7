#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "motifdfa/automaton.hpp"

namespace motifdfa {

/// States reachable from some start state.
StateSet accessible_states(const Nfa& nfa);

/// States whose language is non-empty, i.e. that reach an accepting state.
StateSet coaccessible_states(const Nfa& nfa);

/// Restriction to states that are both accessible and coaccessible.
/// Surviving states keep their relative order.
Nfa trim(const Nfa& nfa);

/// Two distinct states p < q and a shortest string in L(p) ∩ L(q).
struct LanguageOverlap {
    StateId first;
    StateId second;
    std::string witness;

    bool operator==(const LanguageOverlap&) const = default;
};

/// Result of checking that all state languages are pairwise disjoint.
struct DisjointnessReport {
    std::optional<LanguageOverlap> overlap;

    bool disjoint() const { return !overlap.has_value(); }
};

/// Decides pairwise disjointness of state languages by backward reachability
/// of F×F in the ordered-pair product automaton. On failure reports the
/// least pair (p, q) in index order together with the lexicographically
/// least shortest shared string. Expects a trim automaton.
DisjointnessReport languages_disjointness_report(const Nfa& nfa);

struct SimplicityReport {
    bool all_accessible = false;
    bool all_coaccessible = false;
    DisjointnessReport disjointness;

    bool simple() const { return all_accessible && all_coaccessible && disjointness.disjoint(); }
    explicit operator bool() const { return simple(); }
};

/// Checks the three conditions of a simple NFA: every state accessible,
/// every state language non-empty, state languages pairwise disjoint.
/// Disjointness is only evaluated on trim automata; otherwise it is left
/// reported as disjoint and the failing flag tells the story.
SimplicityReport is_simple(const Nfa& nfa);

/// Adds a self-transition on every symbol to each start state.
Nfa add_start_self_loops(const Nfa& nfa);

/// Image of a state set under one symbol.
StateSet nfa_step(const Nfa& nfa, const StateSet& current, std::size_t symbol);

/// Throws ForeignSymbolError for characters outside the alphabet.
bool nfa_accepts(const Nfa& nfa, std::string_view s);
bool dfa_accepts(const Dfa& dfa, std::string_view s);

/// Breadth-first subset construction over accessible subsets only.
/// State 0 is the start subset; further states are numbered in discovery
/// order with symbols expanded in rank order. A reached empty subset becomes
/// an explicit dead state. Throws std::invalid_argument when the NFA has no
/// start state.
Dfa subset_construction(const Nfa& nfa);

/// Exhaustive bounded language: all strings of length <= max_len accepted
/// from `from` (default: the start set / start state). Guarded by
/// max_len <= 12 and |alphabet|^max_len <= 2^24; violations throw
/// std::invalid_argument.
std::set<std::string> enumerate_language(const Nfa& nfa, std::size_t max_len,
                                         std::optional<StateId> from = std::nullopt);
std::set<std::string> enumerate_language(const Dfa& dfa, std::size_t max_len,
                                         std::optional<StateId> from = std::nullopt);

}  // namespace motifdfa
