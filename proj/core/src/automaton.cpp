#include "motifdfa/automaton.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace motifdfa {

namespace {

void insert_sorted(StateSet& set, StateId q) {
    auto it = std::lower_bound(set.begin(), set.end(), q);
    if (it == set.end() || *it != q) {
        set.insert(it, q);
    }
}

}  // namespace

Nfa::Nfa(Alphabet alphabet, std::size_t n_states)
    : alphabet_(std::move(alphabet)),
      n_states_(n_states),
      delta_(n_states * alphabet_.size()),
      accepting_flag_(n_states, false) {}

void Nfa::check_state(StateId q) const {
    if (q >= n_states_) {
        throw std::invalid_argument("state " + std::to_string(q) + " out of range (" +
                                    std::to_string(n_states_) + " states)");
    }
}

bool Nfa::is_start(StateId q) const { return std::binary_search(starts_.begin(), starts_.end(), q); }

std::size_t Nfa::transition_count() const {
    std::size_t n = 0;
    for (const auto& targets : delta_) {
        n += targets.size();
    }
    return n;
}

std::string Nfa::label(StateId q) const {
    if (q < labels_.size() && !labels_[q].empty()) {
        return labels_[q];
    }
    return std::to_string(q);
}

void Nfa::add_transition(StateId from, std::size_t symbol, StateId to) {
    check_state(from);
    check_state(to);
    if (symbol >= alphabet_.size()) {
        throw std::invalid_argument("symbol rank " + std::to_string(symbol) + " out of range");
    }
    insert_sorted(delta_[index(from, symbol)], to);
}

void Nfa::add_start(StateId q) {
    check_state(q);
    insert_sorted(starts_, q);
}

void Nfa::add_accepting(StateId q) {
    check_state(q);
    insert_sorted(accepting_, q);
    accepting_flag_[q] = true;
}

void Nfa::set_label(StateId q, std::string label) {
    check_state(q);
    if (labels_.empty()) {
        labels_.resize(n_states_);
    }
    labels_[q] = std::move(label);
}

Dfa::Dfa(Alphabet alphabet, std::vector<StateId> table, StateId start, std::vector<bool> accepting)
    : alphabet_(std::move(alphabet)), table_(std::move(table)), start_(start), accepting_(std::move(accepting)) {
    const std::size_t n = accepting_.size();
    if (table_.size() != n * alphabet_.size()) {
        throw std::invalid_argument("transition table has " + std::to_string(table_.size()) + " entries, expected " +
                                    std::to_string(n * alphabet_.size()));
    }
    if (n == 0 || start_ >= n) {
        throw std::invalid_argument("start state out of range");
    }
    for (const StateId t : table_) {
        if (t >= n) {
            throw std::invalid_argument("transition target " + std::to_string(t) + " out of range");
        }
    }
}

StateSet Dfa::accepting_states() const {
    StateSet out;
    for (StateId q = 0; q < size(); ++q) {
        if (accepting_[q]) {
            out.push_back(q);
        }
    }
    return out;
}

void Dfa::set_subset_labels(std::vector<StateSet> labels) {
    if (!labels.empty() && labels.size() != size()) {
        throw std::invalid_argument("subset label count does not match state count");
    }
    subset_labels_ = std::move(labels);
}

}  // namespace motifdfa
