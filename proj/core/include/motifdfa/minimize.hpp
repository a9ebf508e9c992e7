#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "motifdfa/automaton.hpp"

namespace motifdfa {

/// Partition of DFA states into blocks of language-equivalent states.
struct StatePartition {
    std::vector<std::size_t> block_of;
    std::vector<StateSet> blocks;
};

/// Coarsest partition of all states of `dfa` that separates accepting from
/// non-accepting states and is compatible with the transitions (Hopcroft).
/// Blocks are ordered by their smallest member; members are sorted.
StatePartition coarsest_partition(const Dfa& dfa);

/// Minimal total DFA for the same language, numbered breadth-first from
/// the start state.
Dfa minimize(const Dfa& dfa);

struct EquivalenceResult {
    bool equivalent = true;
    /// Shortest string accepted by exactly one side; ties broken by rank.
    std::optional<std::string> witness;

    explicit operator bool() const { return equivalent; }
};

/// Language equivalence by union-find merging of synchronized state pairs.
/// Throws std::invalid_argument when the alphabets differ.
EquivalenceResult equivalent(const Dfa& a, const Dfa& b);

/// True iff a bijection of states maps start to start and preserves
/// acceptance and transitions. Throws std::invalid_argument when the
/// alphabets differ.
bool isomorphic(const Dfa& a, const Dfa& b);

/// All states accessible and pairwise non-equivalent.
bool is_minimal(const Dfa& dfa);

/// States reachable from the start state, ascending.
StateSet accessible_states(const Dfa& dfa);

}  // namespace motifdfa
