#include "motifdfa/operations.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "motifdfa/error.hpp"

namespace motifdfa {

namespace {

// Reverse adjacency: predecessors[q * k + r] lists p with q in Δ(p, r).
std::vector<StateSet> reverse_delta(const Nfa& nfa) {
    const std::size_t k = nfa.alphabet().size();
    std::vector<StateSet> rev(nfa.size() * k);
    for (StateId p = 0; p < nfa.size(); ++p) {
        for (std::size_t r = 0; r < k; ++r) {
            for (const StateId q : nfa.successors(p, r)) {
                rev[q * k + r].push_back(p);  // p ascending, so stays sorted
            }
        }
    }
    return rev;
}

StateSet flags_to_set(const std::vector<bool>& flags) {
    StateSet out;
    for (StateId q = 0; q < flags.size(); ++q) {
        if (flags[q]) {
            out.push_back(q);
        }
    }
    return out;
}

std::size_t to_rank(const Alphabet& alphabet, std::string_view s, std::size_t i) {
    const auto r = alphabet.rank(s[i]);
    if (!r) {
        throw ForeignSymbolError(i, s[i]);
    }
    return *r;
}

void check_enumeration_guard(std::size_t alphabet_size, std::size_t max_len) {
    if (max_len > 12) {
        throw std::invalid_argument("enumerate_language: max_len " + std::to_string(max_len) + " exceeds 12");
    }
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < max_len; ++i) {
        total *= alphabet_size;
        if (total > (std::uint64_t{1} << 24)) {
            throw std::invalid_argument("enumerate_language: |alphabet|^max_len exceeds 2^24");
        }
    }
}

struct StateSetHash {
    std::size_t operator()(const StateSet& s) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (const StateId q : s) {
            h ^= q;
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

}  // namespace

StateSet accessible_states(const Nfa& nfa) {
    const std::size_t k = nfa.alphabet().size();
    std::vector<bool> seen(nfa.size(), false);
    std::deque<StateId> queue;
    for (const StateId s : nfa.starts()) {
        seen[s] = true;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        const StateId p = queue.front();
        queue.pop_front();
        for (std::size_t r = 0; r < k; ++r) {
            for (const StateId q : nfa.successors(p, r)) {
                if (!seen[q]) {
                    seen[q] = true;
                    queue.push_back(q);
                }
            }
        }
    }
    return flags_to_set(seen);
}

StateSet coaccessible_states(const Nfa& nfa) {
    const std::size_t k = nfa.alphabet().size();
    const auto rev = reverse_delta(nfa);
    std::vector<bool> seen(nfa.size(), false);
    std::deque<StateId> queue;
    for (const StateId f : nfa.accepting()) {
        seen[f] = true;
        queue.push_back(f);
    }
    while (!queue.empty()) {
        const StateId q = queue.front();
        queue.pop_front();
        for (std::size_t r = 0; r < k; ++r) {
            for (const StateId p : rev[q * k + r]) {
                if (!seen[p]) {
                    seen[p] = true;
                    queue.push_back(p);
                }
            }
        }
    }
    return flags_to_set(seen);
}

Nfa trim(const Nfa& nfa) {
    const StateSet acc = accessible_states(nfa);
    const StateSet coacc = coaccessible_states(nfa);
    StateSet keep;
    std::set_intersection(acc.begin(), acc.end(), coacc.begin(), coacc.end(), std::back_inserter(keep));

    constexpr StateId gone = ~StateId{0};
    std::vector<StateId> renumber(nfa.size(), gone);
    for (StateId i = 0; i < keep.size(); ++i) {
        renumber[keep[i]] = i;
    }

    const std::size_t k = nfa.alphabet().size();
    Nfa out(nfa.alphabet(), keep.size());
    for (const StateId p : keep) {
        for (std::size_t r = 0; r < k; ++r) {
            for (const StateId q : nfa.successors(p, r)) {
                if (renumber[q] != gone) {
                    out.add_transition(renumber[p], r, renumber[q]);
                }
            }
        }
        if (nfa.is_start(p)) {
            out.add_start(renumber[p]);
        }
        if (nfa.is_accepting(p)) {
            out.add_accepting(renumber[p]);
        }
        if (nfa.has_labels()) {
            out.set_label(renumber[p], nfa.label(p));
        }
    }
    return out;
}

DisjointnessReport languages_disjointness_report(const Nfa& nfa) {
    assert(accessible_states(nfa).size() == nfa.size() && coaccessible_states(nfa).size() == nfa.size());

    const std::size_t n = nfa.size();
    const std::size_t k = nfa.alphabet().size();
    if (n < 2) {
        return {};
    }
    const auto rev = reverse_delta(nfa);

    // dist[a * n + b]: length of a shortest string in L(a) ∩ L(b), -1 if none.
    std::vector<std::int32_t> dist(n * n, -1);
    std::deque<std::size_t> queue;
    for (const StateId f1 : nfa.accepting()) {
        for (const StateId f2 : nfa.accepting()) {
            dist[f1 * n + f2] = 0;
            queue.push_back(f1 * n + f2);
        }
    }
    while (!queue.empty()) {
        const std::size_t pair = queue.front();
        queue.pop_front();
        const std::size_t a2 = pair / n;
        const std::size_t b2 = pair % n;
        const std::int32_t d = dist[pair] + 1;
        for (std::size_t r = 0; r < k; ++r) {
            const auto& pa = rev[a2 * k + r];
            const auto& pb = rev[b2 * k + r];
            for (const StateId a : pa) {
                for (const StateId b : pb) {
                    const std::size_t idx = a * n + b;
                    if (dist[idx] < 0) {
                        dist[idx] = d;
                        queue.push_back(idx);
                    }
                }
            }
        }
    }

    for (StateId p = 0; p < n; ++p) {
        for (StateId q = p + 1; q < n; ++q) {
            if (dist[p * n + q] < 0) {
                continue;
            }
            // Walk forward along strictly decreasing distance, smallest rank first.
            LanguageOverlap overlap{p, q, {}};
            std::size_t a = p;
            std::size_t b = q;
            while (dist[a * n + b] > 0) {
                const std::int32_t want = dist[a * n + b] - 1;
                bool stepped = false;
                for (std::size_t r = 0; r < k && !stepped; ++r) {
                    for (const StateId a2 : nfa.successors(static_cast<StateId>(a), r)) {
                        for (const StateId b2 : nfa.successors(static_cast<StateId>(b), r)) {
                            if (dist[a2 * n + b2] == want) {
                                overlap.witness.push_back(nfa.alphabet().symbol(r));
                                a = a2;
                                b = b2;
                                stepped = true;
                                break;
                            }
                        }
                        if (stepped) {
                            break;
                        }
                    }
                }
                assert(stepped);
            }
            return {overlap};
        }
    }
    return {};
}

SimplicityReport is_simple(const Nfa& nfa) {
    SimplicityReport report;
    report.all_accessible = accessible_states(nfa).size() == nfa.size();
    report.all_coaccessible = coaccessible_states(nfa).size() == nfa.size();
    if (report.all_accessible && report.all_coaccessible) {
        report.disjointness = languages_disjointness_report(nfa);
    }
    return report;
}

Nfa add_start_self_loops(const Nfa& nfa) {
    Nfa out = nfa;
    for (const StateId s : nfa.starts()) {
        for (std::size_t r = 0; r < nfa.alphabet().size(); ++r) {
            out.add_transition(s, r, s);
        }
    }
    return out;
}

StateSet nfa_step(const Nfa& nfa, const StateSet& current, std::size_t symbol) {
    StateSet next;
    for (const StateId q : current) {
        const auto succ = nfa.successors(q, symbol);
        next.insert(next.end(), succ.begin(), succ.end());
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    return next;
}

namespace {

bool intersects_accepting(const Nfa& nfa, const StateSet& set) {
    return std::any_of(set.begin(), set.end(), [&](StateId q) { return nfa.is_accepting(q); });
}

}  // namespace

bool nfa_accepts(const Nfa& nfa, std::string_view s) {
    StateSet current = nfa.starts();
    for (std::size_t i = 0; i < s.size(); ++i) {
        current = nfa_step(nfa, current, to_rank(nfa.alphabet(), s, i));
    }
    return intersects_accepting(nfa, current);
}

bool dfa_accepts(const Dfa& dfa, std::string_view s) {
    StateId q = dfa.start();
    for (std::size_t i = 0; i < s.size(); ++i) {
        q = dfa.next(q, to_rank(dfa.alphabet(), s, i));
    }
    return dfa.is_accepting(q);
}

Dfa subset_construction(const Nfa& nfa) {
    if (nfa.starts().empty()) {
        throw std::invalid_argument("subset_construction: automaton has no start state");
    }
    const std::size_t k = nfa.alphabet().size();
    std::vector<StateSet> subsets;
    std::unordered_map<StateSet, StateId, StateSetHash> index;
    std::vector<StateId> table;

    // Marks for duplicate-free union; mark[q] == stamp means q is already in.
    std::vector<std::size_t> mark(nfa.size(), 0);
    std::size_t stamp = 0;

    subsets.push_back(nfa.starts());
    index.emplace(nfa.starts(), 0);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (std::size_t r = 0; r < k; ++r) {
            ++stamp;
            StateSet next;
            for (const StateId q : subsets[i]) {
                for (const StateId t : nfa.successors(q, r)) {
                    if (mark[t] != stamp) {
                        mark[t] = stamp;
                        next.push_back(t);
                    }
                }
            }
            std::sort(next.begin(), next.end());
            auto [it, inserted] = index.try_emplace(std::move(next), static_cast<StateId>(subsets.size()));
            if (inserted) {
                subsets.push_back(it->first);
            }
            table.push_back(it->second);
        }
    }

    std::vector<bool> accepting(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        accepting[i] = intersects_accepting(nfa, subsets[i]);
    }
    Dfa dfa(nfa.alphabet(), std::move(table), 0, std::move(accepting));
    dfa.set_subset_labels(std::move(subsets));
    return dfa;
}

namespace {

template <typename State, typename Step, typename Accepts>
void enumerate_from(const Alphabet& alphabet, std::size_t max_len, const State& state, std::string& prefix,
                    const Step& step, const Accepts& accepts, std::set<std::string>& out) {
    if (accepts(state)) {
        out.insert(prefix);
    }
    if (prefix.size() == max_len) {
        return;
    }
    for (std::size_t r = 0; r < alphabet.size(); ++r) {
        prefix.push_back(alphabet.symbol(r));
        enumerate_from(alphabet, max_len, step(state, r), prefix, step, accepts, out);
        prefix.pop_back();
    }
}

}  // namespace

std::set<std::string> enumerate_language(const Nfa& nfa, std::size_t max_len, std::optional<StateId> from) {
    check_enumeration_guard(nfa.alphabet().size(), max_len);
    std::set<std::string> out;
    StateSet start = from ? StateSet{*from} : nfa.starts();
    if (from && *from >= nfa.size()) {
        throw std::invalid_argument("enumerate_language: state out of range");
    }
    std::string prefix;
    enumerate_from(
        nfa.alphabet(), max_len, start, prefix,
        [&](const StateSet& s, std::size_t r) { return nfa_step(nfa, s, r); },
        [&](const StateSet& s) { return intersects_accepting(nfa, s); }, out);
    return out;
}

std::set<std::string> enumerate_language(const Dfa& dfa, std::size_t max_len, std::optional<StateId> from) {
    check_enumeration_guard(dfa.alphabet().size(), max_len);
    if (from && *from >= dfa.size()) {
        throw std::invalid_argument("enumerate_language: state out of range");
    }
    std::set<std::string> out;
    std::string prefix;
    enumerate_from(
        dfa.alphabet(), max_len, from.value_or(dfa.start()), prefix,
        [&](StateId q, std::size_t r) { return dfa.next(q, r); },
        [&](StateId q) { return dfa.is_accepting(q); }, out);
    return out;
}

}  // namespace motifdfa
