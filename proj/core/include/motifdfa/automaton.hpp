#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "motifdfa/alphabet.hpp"

namespace motifdfa {

using StateId = std::uint32_t;

/// Sorted, duplicate-free list of state indices.
using StateSet = std::vector<StateId>;

/// Non-deterministic automaton without epsilon transitions, with a set of
/// start states. Transitions are stored as one sorted successor list per
/// (state, symbol rank) pair.
class Nfa {
public:
    Nfa(Alphabet alphabet, std::size_t n_states);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return n_states_; }

    std::span<const StateId> successors(StateId q, std::size_t symbol) const {
        return delta_[index(q, symbol)];
    }

    const StateSet& starts() const { return starts_; }
    const StateSet& accepting() const { return accepting_; }
    bool is_start(StateId q) const;
    bool is_accepting(StateId q) const { return accepting_flag_[q]; }

    /// Number of (state, symbol, successor) triples.
    std::size_t transition_count() const;

    bool has_labels() const { return !labels_.empty(); }
    /// Display label, or the decimal index when no label was set.
    std::string label(StateId q) const;

    void add_transition(StateId from, std::size_t symbol, StateId to);
    void add_start(StateId q);
    void add_accepting(StateId q);
    void set_label(StateId q, std::string label);

    bool operator==(const Nfa&) const = default;

private:
    std::size_t index(StateId q, std::size_t symbol) const { return q * alphabet_.size() + symbol; }
    void check_state(StateId q) const;

    Alphabet alphabet_;
    std::size_t n_states_;
    std::vector<StateSet> delta_;
    StateSet starts_;
    StateSet accepting_;
    std::vector<bool> accepting_flag_;
    std::vector<std::string> labels_;
};

/// Deterministic automaton with a total transition table.
class Dfa {
public:
    /// table holds n_states * |alphabet| targets in row-major (state, rank)
    /// order. Throws std::invalid_argument when the table is not total or
    /// references a state out of range.
    Dfa(Alphabet alphabet, std::vector<StateId> table, StateId start, std::vector<bool> accepting);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return accepting_.size(); }
    StateId start() const { return start_; }
    StateId next(StateId q, std::size_t symbol) const { return table_[q * alphabet_.size() + symbol]; }
    bool is_accepting(StateId q) const { return accepting_[q]; }
    StateSet accepting_states() const;
    const std::vector<StateId>& table() const { return table_; }

    /// For subset-construction output: the NFA subset behind each state.
    const std::vector<StateSet>& subset_labels() const { return subset_labels_; }
    void set_subset_labels(std::vector<StateSet> labels);

    bool operator==(const Dfa&) const = default;

private:
    Alphabet alphabet_;
    std::vector<StateId> table_;
    StateId start_;
    std::vector<bool> accepting_;
    std::vector<StateSet> subset_labels_;
};

}  // namespace motifdfa
