#include "motifdfa/hamming.hpp"

#include <algorithm>
#include <stdexcept>

#include "motifdfa/error.hpp"

namespace motifdfa {

std::size_t hamming_distance(std::string_view s, const GeneralizedString& g) {
    if (s.size() != g.size()) {
        throw std::invalid_argument("hamming_distance: length " + std::to_string(s.size()) + " differs from " +
                                    std::to_string(g.size()));
    }
    std::size_t d = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto r = g.alphabet().rank(s[i]);
        if (!r) {
            throw ForeignSymbolError(i, s[i]);
        }
        d += g.at(i).contains(*r) ? 0 : 1;
    }
    return d;
}

std::size_t hamming_state_count(std::size_t length, std::size_t d_max) {
    std::size_t n = 0;
    for (std::size_t k = 0; k <= length; ++k) {
        n += std::min(d_max, length - k) + 1;
    }
    return n;
}

HammingAutomaton build_hamming_automaton(const GeneralizedString& g, std::size_t d_max) {
    if (g.size() == 0) {
        throw std::invalid_argument("nfa_from_hamming: consensus must not be empty");
    }
    const std::size_t length = g.size();
    const std::size_t k = g.alphabet().size();

    // Row k holds e = 0..min(d_max, length - k); row_start[k] is its first id.
    std::vector<std::size_t> row_start(length + 2, 0);
    for (std::size_t col = 0; col <= length; ++col) {
        row_start[col + 1] = row_start[col] + std::min(d_max, length - col) + 1;
    }
    auto id_of = [&](std::size_t e, std::size_t col) -> std::optional<StateId> {
        if (col > length || e > d_max || e > length - col) {
            return std::nullopt;
        }
        return static_cast<StateId>(row_start[col] + e);
    };

    HammingAutomaton result{Nfa(g.alphabet(), row_start[length + 1]), {}};
    Nfa& nfa = result.nfa;
    for (std::size_t col = 0; col <= length; ++col) {
        for (std::size_t e = 0; e <= std::min(d_max, length - col); ++e) {
            const StateId q = *id_of(e, col);
            result.states.push_back({e, col});
            nfa.set_label(q, "(" + std::to_string(e) + "," + std::to_string(col) + ")");
            if (col == length) {
                continue;
            }
            const SymbolSet expected = g.at(col);
            for (std::size_t r = 0; r < k; ++r) {
                // A mismatch with no errors left falls off the grid.
                std::optional<StateId> target;
                if (expected.contains(r)) {
                    target = id_of(e, col + 1);
                } else if (e > 0) {
                    target = id_of(e - 1, col + 1);
                }
                if (target) {
                    nfa.add_transition(q, r, *target);
                }
            }
        }
    }
    for (std::size_t e = 0; e <= std::min(d_max, length); ++e) {
        nfa.add_start(*id_of(e, 0));
    }
    nfa.add_accepting(*id_of(0, length));
    return result;
}

Nfa nfa_from_hamming(const GeneralizedString& g, std::size_t d_max) { return build_hamming_automaton(g, d_max).nfa; }

}  // namespace motifdfa
