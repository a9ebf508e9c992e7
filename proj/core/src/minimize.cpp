#include "motifdfa/minimize.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace motifdfa {

namespace {

void require_same_alphabet(const Dfa& a, const Dfa& b) {
    if (!(a.alphabet() == b.alphabet())) {
        throw std::invalid_argument("automata are over different alphabets: \"" + a.alphabet().symbols() +
                                    "\" vs \"" + b.alphabet().symbols() + "\"");
    }
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

// Sub-automaton on the accessible states, renumbered breadth-first.
Dfa accessible_part(const Dfa& dfa) {
    const std::size_t k = dfa.alphabet().size();
    std::vector<StateId> order{dfa.start()};
    std::vector<StateId> renumber(dfa.size(), ~StateId{0});
    renumber[dfa.start()] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t r = 0; r < k; ++r) {
            const StateId t = dfa.next(order[i], r);
            if (renumber[t] == ~StateId{0}) {
                renumber[t] = static_cast<StateId>(order.size());
                order.push_back(t);
            }
        }
    }
    std::vector<StateId> table;
    table.reserve(order.size() * k);
    std::vector<bool> accepting;
    for (const StateId q : order) {
        for (std::size_t r = 0; r < k; ++r) {
            table.push_back(renumber[dfa.next(q, r)]);
        }
        accepting.push_back(dfa.is_accepting(q));
    }
    return Dfa(dfa.alphabet(), std::move(table), 0, std::move(accepting));
}

}  // namespace

StateSet accessible_states(const Dfa& dfa) {
    std::vector<bool> seen(dfa.size(), false);
    std::deque<StateId> queue{dfa.start()};
    seen[dfa.start()] = true;
    while (!queue.empty()) {
        const StateId q = queue.front();
        queue.pop_front();
        for (std::size_t r = 0; r < dfa.alphabet().size(); ++r) {
            const StateId t = dfa.next(q, r);
            if (!seen[t]) {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    StateSet out;
    for (StateId q = 0; q < dfa.size(); ++q) {
        if (seen[q]) {
            out.push_back(q);
        }
    }
    return out;
}

StatePartition coarsest_partition(const Dfa& dfa) {
    const std::size_t n = dfa.size();
    const std::size_t k = dfa.alphabet().size();

    // inverse[r][t]: states p with δ(p, r) = t.
    std::vector<std::vector<StateSet>> inverse(k, std::vector<StateSet>(n));
    for (StateId p = 0; p < n; ++p) {
        for (std::size_t r = 0; r < k; ++r) {
            inverse[r][dfa.next(p, r)].push_back(p);
        }
    }

    std::vector<StateSet> blocks;
    std::vector<std::size_t> block_of(n);
    {
        StateSet acc, rej;
        for (StateId q = 0; q < n; ++q) {
            (dfa.is_accepting(q) ? acc : rej).push_back(q);
        }
        for (auto* b : {&acc, &rej}) {
            if (!b->empty()) {
                for (const StateId q : *b) {
                    block_of[q] = blocks.size();
                }
                blocks.push_back(std::move(*b));
            }
        }
    }

    // Worklist of (block, symbol) splitters.
    std::deque<std::pair<std::size_t, std::size_t>> work;
    std::vector<std::vector<bool>> pending;
    auto push = [&](std::size_t block, std::size_t r) {
        if (pending.size() <= block) {
            pending.resize(block + 1, std::vector<bool>(k, false));
        }
        if (!pending[block][r]) {
            pending[block][r] = true;
            work.emplace_back(block, r);
        }
    };
    if (blocks.size() == 2) {
        const std::size_t smaller = blocks[0].size() <= blocks[1].size() ? 0 : 1;
        for (std::size_t r = 0; r < k; ++r) {
            push(smaller, r);
        }
    }

    std::vector<std::size_t> touched_count;
    std::vector<StateSet> touched_members;
    while (!work.empty()) {
        const auto [splitter, r] = work.front();
        work.pop_front();
        pending[splitter][r] = false;

        // Predecessors of the splitter under r, grouped by their block.
        std::vector<std::size_t> touched_blocks;
        touched_count.resize(blocks.size(), 0);
        touched_members.resize(blocks.size());
        const StateSet splitter_members = blocks[splitter];
        for (const StateId t : splitter_members) {
            for (const StateId p : inverse[r][t]) {
                const std::size_t b = block_of[p];
                if (touched_count[b]++ == 0) {
                    touched_blocks.push_back(b);
                }
                touched_members[b].push_back(p);
            }
        }

        for (const std::size_t b : touched_blocks) {
            if (touched_count[b] < blocks[b].size()) {
                // Split b into (touched, rest); touched moves to a new block.
                StateSet inside = std::move(touched_members[b]);
                std::sort(inside.begin(), inside.end());
                StateSet rest;
                std::set_difference(blocks[b].begin(), blocks[b].end(), inside.begin(), inside.end(),
                                    std::back_inserter(rest));
                const std::size_t fresh = blocks.size();
                for (const StateId q : inside) {
                    block_of[q] = fresh;
                }
                blocks[b] = std::move(rest);
                blocks.push_back(std::move(inside));
                touched_count.push_back(0);
                touched_members.emplace_back();
                for (std::size_t c = 0; c < k; ++c) {
                    if (pending.size() > b && pending[b][c]) {
                        push(fresh, c);
                    } else {
                        push(blocks[b].size() <= blocks[fresh].size() ? b : fresh, c);
                    }
                }
            }
            touched_count[b] = 0;
            touched_members[b].clear();
        }
    }

    // Canonical order: blocks sorted by smallest member.
    std::sort(blocks.begin(), blocks.end(), [](const StateSet& x, const StateSet& y) { return x.front() < y.front(); });
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (const StateId q : blocks[b]) {
            block_of[q] = b;
        }
    }
    return {std::move(block_of), std::move(blocks)};
}

Dfa minimize(const Dfa& dfa) {
    const Dfa reachable = accessible_part(dfa);
    const StatePartition partition = coarsest_partition(reachable);
    const std::size_t k = reachable.alphabet().size();

    std::vector<StateId> quotient_table;
    std::vector<bool> accepting;
    for (const StateSet& block : partition.blocks) {
        const StateId rep = block.front();
        for (std::size_t r = 0; r < k; ++r) {
            quotient_table.push_back(static_cast<StateId>(partition.block_of[reachable.next(rep, r)]));
        }
        accepting.push_back(reachable.is_accepting(rep));
    }
    const auto start = static_cast<StateId>(partition.block_of[reachable.start()]);
    return accessible_part(Dfa(reachable.alphabet(), std::move(quotient_table), start, std::move(accepting)));
}

EquivalenceResult equivalent(const Dfa& a, const Dfa& b) {
    require_same_alphabet(a, b);
    const std::size_t k = a.alphabet().size();
    const std::size_t na = a.size();

    // Hopcroft-Karp: merge synchronized pairs; a pair with differing
    // acceptance refutes equivalence.
    UnionFind classes(na + b.size());
    std::deque<std::pair<StateId, StateId>> queue{{a.start(), b.start()}};
    classes.unite(a.start(), na + b.start());
    bool same = true;
    while (!queue.empty() && same) {
        const auto [p, q] = queue.front();
        queue.pop_front();
        if (a.is_accepting(p) != b.is_accepting(q)) {
            same = false;
            break;
        }
        for (std::size_t r = 0; r < k; ++r) {
            const StateId p2 = a.next(p, r);
            const StateId q2 = b.next(q, r);
            if (classes.unite(p2, na + q2)) {
                queue.emplace_back(p2, q2);
            }
        }
    }
    if (same) {
        return {};
    }

    // Shortest witness by plain product BFS; expansion in rank order makes
    // the first differing pair found carry the least such string.
    const std::size_t nb = b.size();
    std::vector<std::size_t> from(na * nb, SIZE_MAX);
    std::vector<char> via(na * nb, 0);
    const std::size_t origin = a.start() * nb + b.start();
    from[origin] = origin;
    std::deque<std::size_t> bfs{origin};
    while (!bfs.empty()) {
        const std::size_t pair = bfs.front();
        bfs.pop_front();
        const auto p = static_cast<StateId>(pair / nb);
        const auto q = static_cast<StateId>(pair % nb);
        if (a.is_accepting(p) != b.is_accepting(q)) {
            std::string witness;
            for (std::size_t cur = pair; cur != origin; cur = from[cur]) {
                witness.push_back(via[cur]);
            }
            std::reverse(witness.begin(), witness.end());
            return {false, std::move(witness)};
        }
        for (std::size_t r = 0; r < k; ++r) {
            const std::size_t next = a.next(p, r) * nb + b.next(q, r);
            if (from[next] == SIZE_MAX) {
                from[next] = pair;
                via[next] = a.alphabet().symbol(r);
                bfs.push_back(next);
            }
        }
    }
    return {false, std::nullopt};  // unreachable: union-find found a difference
}

bool isomorphic(const Dfa& a, const Dfa& b) {
    require_same_alphabet(a, b);
    if (a.size() != b.size()) {
        return false;
    }
    const std::size_t k = a.alphabet().size();
    constexpr StateId unset = ~StateId{0};
    std::vector<StateId> a_to_b(a.size(), unset);
    std::vector<StateId> b_to_a(b.size(), unset);
    std::deque<StateId> queue{a.start()};
    a_to_b[a.start()] = b.start();
    b_to_a[b.start()] = a.start();
    std::size_t mapped = 1;
    while (!queue.empty()) {
        const StateId p = queue.front();
        queue.pop_front();
        const StateId q = a_to_b[p];
        if (a.is_accepting(p) != b.is_accepting(q)) {
            return false;
        }
        for (std::size_t r = 0; r < k; ++r) {
            const StateId p2 = a.next(p, r);
            const StateId q2 = b.next(q, r);
            if (a_to_b[p2] == unset && b_to_a[q2] == unset) {
                a_to_b[p2] = q2;
                b_to_a[q2] = p2;
                ++mapped;
                queue.push_back(p2);
            } else if (a_to_b[p2] != q2 || b_to_a[q2] != p2) {
                return false;
            }
        }
    }
    return mapped == a.size();
}

bool is_minimal(const Dfa& dfa) {
    if (accessible_states(dfa).size() != dfa.size()) {
        return false;
    }
    return coarsest_partition(dfa).blocks.size() == dfa.size();
}

}  // namespace motifdfa
