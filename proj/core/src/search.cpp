#include "motifdfa/search.hpp"

#include <cctype>
#include <deque>
#include <stdexcept>
#include <utility>

#include "motifdfa/error.hpp"
#include "motifdfa/minimize.hpp"

namespace motifdfa {

CompiledMotif::CompiledMotif(Dfa dfa, std::size_t motif_length, std::string description, bool case_fold)
    : dfa_(std::move(dfa)), motif_length_(motif_length), description_(std::move(description)), case_fold_(case_fold) {
    if (motif_length_ == 0) {
        throw std::invalid_argument("motif length must be at least 1");
    }
}

CompiledMotif CompiledMotif::from_dfa(Dfa dfa, std::string description, bool case_fold) {
    const auto length = shortest_accepted_length(dfa);
    if (length < 1) {
        throw std::invalid_argument(length < 0 ? "automaton accepts nothing" : "automaton accepts the empty string");
    }
    if (!has_suffix_semantics(dfa)) {
        throw std::invalid_argument("automaton does not accept all strings ending in a match; compile it with "
                                    "--suffix-loop");
    }
    return CompiledMotif(std::move(dfa), static_cast<std::size_t>(length), std::move(description), case_fold);
}

bool has_suffix_semantics(const Dfa& dfa) {
    const std::size_t n = dfa.size();
    const std::size_t k = dfa.alphabet().size();
    std::vector<bool> seen(n * n, false);
    std::deque<std::pair<StateId, StateId>> queue;
    for (const StateId q : accessible_states(dfa)) {
        seen[dfa.start() * n + q] = true;
        queue.emplace_back(dfa.start(), q);
    }
    while (!queue.empty()) {
        const auto [a, b] = queue.front();
        queue.pop_front();
        if (dfa.is_accepting(a) && !dfa.is_accepting(b)) {
            return false;
        }
        for (std::size_t r = 0; r < k; ++r) {
            const StateId a2 = dfa.next(a, r);
            const StateId b2 = dfa.next(b, r);
            if (!seen[a2 * n + b2]) {
                seen[a2 * n + b2] = true;
                queue.emplace_back(a2, b2);
            }
        }
    }
    return true;
}

std::ptrdiff_t shortest_accepted_length(const Dfa& dfa) {
    std::vector<std::ptrdiff_t> dist(dfa.size(), -1);
    std::deque<StateId> queue{dfa.start()};
    dist[dfa.start()] = 0;
    while (!queue.empty()) {
        const StateId q = queue.front();
        queue.pop_front();
        if (dfa.is_accepting(q)) {
            return dist[q];
        }
        for (std::size_t r = 0; r < dfa.alphabet().size(); ++r) {
            const StateId t = dfa.next(q, r);
            if (dist[t] < 0) {
                dist[t] = dist[q] + 1;
                queue.push_back(t);
            }
        }
    }
    return -1;
}

Scanner::Scanner(const CompiledMotif& motif, std::string sequence_id, SymbolPolicy policy)
    : motif_(&motif), sequence_id_(std::move(sequence_id)), policy_(policy), state_(motif.dfa().start()) {
    const Alphabet& alphabet = motif.dfa().alphabet();
    for (int c = 0; c < 256; ++c) {
        auto r = alphabet.rank(static_cast<char>(c));
        if (!r && motif.case_fold()) {
            r = alphabet.rank(static_cast<char>(std::toupper(c)));
        }
        rank_of_[static_cast<std::size_t>(c)] = r ? static_cast<std::int16_t>(*r) : std::int16_t{-1};
    }
}

void Scanner::feed(std::string_view chunk, const Sink& sink) {
    const Dfa& dfa = motif_->dfa();
    for (const char c : chunk) {
        ++stats_.characters;
        const std::int16_t r = rank_of_[static_cast<unsigned char>(c)];
        if (r < 0) {
            if (policy_ == SymbolPolicy::Strict) {
                throw ForeignSymbolError(stats_.characters - 1, c);
            }
            ++stats_.foreign_symbols;
            state_ = dfa.start();
            continue;
        }
        state_ = dfa.next(state_, static_cast<std::size_t>(r));
        if (dfa.is_accepting(state_)) {
            sink(Occurrence{sequence_id_, stats_.characters, motif_->motif_length()});
        }
    }
}

std::vector<Occurrence> stream_search(const CompiledMotif& motif, std::string_view text, std::string_view sequence_id,
                                      SymbolPolicy policy, ScanStats* stats) {
    std::vector<Occurrence> out;
    Scanner scanner(motif, std::string(sequence_id), policy);
    scanner.feed(text, [&](const Occurrence& o) { out.push_back(o); });
    if (stats != nullptr) {
        *stats = scanner.stats();
    }
    return out;
}

}  // namespace motifdfa
