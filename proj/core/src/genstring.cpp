#include "motifdfa/genstring.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "motifdfa/error.hpp"

namespace motifdfa {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

// IUPAC nucleotide code over the rank order A=0, C=1, G=2, T=3.
std::optional<SymbolSet> iupac_code(char c) {
    constexpr std::uint64_t A = 1, C = 2, G = 4, T = 8;
    switch (std::toupper(static_cast<unsigned char>(c))) {
        case 'A': return SymbolSet{A};
        case 'C': return SymbolSet{C};
        case 'G': return SymbolSet{G};
        case 'T': return SymbolSet{T};
        case 'R': return SymbolSet{A | G};
        case 'Y': return SymbolSet{C | T};
        case 'S': return SymbolSet{C | G};
        case 'W': return SymbolSet{A | T};
        case 'K': return SymbolSet{G | T};
        case 'M': return SymbolSet{A | C};
        case 'B': return SymbolSet{C | G | T};
        case 'D': return SymbolSet{A | G | T};
        case 'H': return SymbolSet{A | C | T};
        case 'V': return SymbolSet{A | C | G};
        case 'N': return SymbolSet{A | C | G | T};
        default: return std::nullopt;
    }
}

std::string set_label(PatternMask mask, std::size_t level) {
    std::string out = "({";
    bool first = true;
    for (std::size_t i = 0; i < 32; ++i) {
        if ((mask >> i) & 1U) {
            if (!first) {
                out += ',';
            }
            out += std::to_string(i);
            first = false;
        }
    }
    out += "}," + std::to_string(level) + ")";
    return out;
}

}  // namespace

GeneralizedString::GeneralizedString(Alphabet alphabet, std::vector<SymbolSet> positions)
    : alphabet_(std::move(alphabet)), positions_(std::move(positions)) {
    const SymbolSet all = alphabet_.all();
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        if (positions_[i].empty()) {
            throw std::invalid_argument("position " + std::to_string(i + 1) + " has an empty symbol set");
        }
        if ((positions_[i] & ~all) != SymbolSet{}) {
            throw std::invalid_argument("position " + std::to_string(i + 1) + " names symbols outside the alphabet");
        }
    }
}

std::string GeneralizedString::to_string() const {
    std::string out;
    for (const SymbolSet set : positions_) {
        out += '{';
        bool first = true;
        set.for_each([&](std::size_t r) {
            if (!first) {
                out += ',';
            }
            out += alphabet_.symbol(r);
            first = false;
        });
        out += '}';
    }
    return out;
}

GeneralizedString parse_generalized_string(std::string_view text, const Alphabet& alphabet, PatternMode mode) {
    const Alphabet effective = mode == PatternMode::IupacDna ? Alphabet::dna() : alphabet;

    auto symbol_at = [&](std::size_t i) -> SymbolSet {
        if (mode == PatternMode::IupacDna) {
            if (auto code = iupac_code(text[i])) {
                return *code;
            }
            throw ParseError(i, std::string("unknown IUPAC code '") + text[i] + "'");
        }
        if (const auto r = effective.rank(text[i])) {
            return SymbolSet::single(*r);
        }
        throw ParseError(i, std::string("symbol '") + text[i] + "' is not in the alphabet \"" + effective.symbols() +
                                "\"");
    };

    std::vector<SymbolSet> positions;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (is_blank(c)) {
            continue;
        }
        if (c == ']') {
            throw ParseError(i, "unbalanced ']'");
        }
        if (c != '[') {
            positions.push_back(symbol_at(i));
            continue;
        }
        const std::size_t open = i;
        SymbolSet group;
        std::string seen;
        for (++i; i < text.size() && text[i] != ']'; ++i) {
            if (is_blank(text[i])) {
                continue;
            }
            if (text[i] == '[') {
                throw ParseError(i, "nested '['");
            }
            const char key = mode == PatternMode::IupacDna
                                 ? static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])))
                                 : text[i];
            if (seen.find(key) != std::string::npos) {
                throw ParseError(i, std::string("duplicate symbol '") + text[i] + "' in group");
            }
            seen.push_back(key);
            group = group | symbol_at(i);
        }
        if (i == text.size()) {
            throw ParseError(open, "unbalanced '['");
        }
        if (group.empty()) {
            throw ParseError(open, "empty group");
        }
        positions.push_back(group);
    }
    if (positions.empty()) {
        throw ParseError(0, "empty pattern");
    }
    return GeneralizedString(effective, std::move(positions));
}

bool matches(std::string_view s, const GeneralizedString& g) {
    bool ok = s.size() == g.size();
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto r = g.alphabet().rank(s[i]);
        if (!r) {
            throw ForeignSymbolError(i, s[i]);
        }
        ok = ok && g.at(i).contains(*r);
    }
    return ok;
}

Nfa nfa_from_genstring(const GeneralizedString& g) {
    if (g.size() == 0) {
        throw std::invalid_argument("nfa_from_genstring: generalized string must not be empty");
    }
    Nfa nfa(g.alphabet(), g.size() + 1);
    for (StateId q = 0; q < g.size(); ++q) {
        g.at(q).for_each([&](std::size_t r) { nfa.add_transition(q, r, q + 1); });
    }
    for (StateId q = 0; q <= g.size(); ++q) {
        nfa.set_label(q, std::to_string(q));
    }
    nfa.add_start(0);
    nfa.add_accepting(static_cast<StateId>(g.size()));
    return nfa;
}

ParentResult parent(const LevelState& state, std::size_t symbol, std::span<const GeneralizedString> patterns) {
    if (state.level == 0) {
        return TopLevel{};
    }
    PatternMask kept = 0;
    for (std::size_t h = 0; h < patterns.size(); ++h) {
        if (((state.patterns >> h) & 1U) == 0) {
            continue;
        }
        if (state.level > patterns[h].size()) {
            throw std::invalid_argument("parent: level exceeds pattern length");
        }
        if (patterns[h].at(state.level - 1).contains(symbol)) {
            kept |= PatternMask{1} << h;
        }
    }
    if (kept == 0) {
        return NoParent{};
    }
    return LevelState{kept, state.level - 1};
}

GenstringSetAutomaton build_genstring_set_automaton(std::span<const GeneralizedString> input) {
    if (input.empty()) {
        throw std::invalid_argument("pattern set must not be empty");
    }
    std::vector<GeneralizedString> patterns;
    for (const auto& g : input) {
        if (!(g.alphabet() == input.front().alphabet())) {
            throw std::invalid_argument("patterns use different alphabets");
        }
        if (g.size() != input.front().size()) {
            throw std::invalid_argument("patterns have different lengths (" + std::to_string(input.front().size()) +
                                        " and " + std::to_string(g.size()) + ")");
        }
        if (std::find(patterns.begin(), patterns.end(), g) == patterns.end()) {
            patterns.push_back(g);
        }
    }
    const std::size_t length = patterns.front().size();
    if (length == 0) {
        throw std::invalid_argument("patterns must have length >= 1");
    }
    if (patterns.size() > max_pattern_set_size) {
        throw std::invalid_argument("at most " + std::to_string(max_pattern_set_size) +
                                    " distinct patterns are supported, got " + std::to_string(patterns.size()));
    }
    const Alphabet& alphabet = patterns.front().alphabet();
    const std::size_t k = alphabet.size();

    // allow[p * k + r]: patterns having symbol r at 0-based position p.
    std::vector<PatternMask> allow(length * k, 0);
    for (std::size_t h = 0; h < patterns.size(); ++h) {
        for (std::size_t p = 0; p < length; ++p) {
            patterns[h].at(p).for_each([&](std::size_t r) { allow[p * k + r] |= PatternMask{1} << h; });
        }
    }

    struct Edge {
        std::size_t from_index;  // in level
        std::size_t symbol;
        std::size_t to_index;  // in level + 1
    };
    std::vector<std::vector<PatternMask>> levels(length + 1);
    std::vector<std::vector<Edge>> edges(length);  // edges[k]: level k -> k + 1
    const PatternMask all = patterns.size() == 32 ? ~PatternMask{0} : (PatternMask{1} << patterns.size()) - 1;
    levels[length].push_back(all);

    GenstringSetAutomaton result{Nfa(alphabet, 0), patterns, {}, {}, 0};
    for (std::size_t level = length; level-- > 0;) {
        std::unordered_map<PatternMask, std::size_t> interned;
        const auto& below = levels[level + 1];
        for (std::size_t j = 0; j < below.size(); ++j) {
            for (std::size_t r = 0; r < k; ++r) {
                ++result.iterations;
                const PatternMask h = below[j] & allow[level * k + r];
                if (h == 0) {
                    continue;
                }
                auto [it, inserted] = interned.try_emplace(h, levels[level].size());
                if (inserted) {
                    levels[level].push_back(h);
                }
                edges[level].push_back({it->second, r, j});
            }
        }
    }

    std::vector<std::size_t> offset(length + 1, 0);
    std::size_t total = 0;
    for (std::size_t level = 0; level <= length; ++level) {
        offset[level] = total;
        total += levels[level].size();
        result.level_sizes.push_back(levels[level].size());
        for (const PatternMask h : levels[level]) {
            result.states.push_back({h, level});
        }
    }

    Nfa nfa(alphabet, total);
    for (std::size_t level = 0; level < length; ++level) {
        for (const Edge& e : edges[level]) {
            nfa.add_transition(static_cast<StateId>(offset[level] + e.from_index), e.symbol,
                               static_cast<StateId>(offset[level + 1] + e.to_index));
        }
    }
    for (std::size_t i = 0; i < levels[0].size(); ++i) {
        nfa.add_start(static_cast<StateId>(i));
    }
    nfa.add_accepting(static_cast<StateId>(offset[length]));
    for (StateId q = 0; q < total; ++q) {
        nfa.set_label(q, set_label(result.states[q].patterns, result.states[q].level));
    }
    result.nfa = std::move(nfa);
    return result;
}

Nfa nfa_from_genstring_set(std::span<const GeneralizedString> patterns) {
    return build_genstring_set_automaton(patterns).nfa;
}

std::vector<GeneralizedString> read_motif_set(std::istream& in, const Alphabet& alphabet, PatternMode mode) {
    std::vector<GeneralizedString> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = std::find_if_not(line.begin(), line.end(), is_blank);
        if (first == line.end() || *first == '#') {
            continue;
        }
        try {
            out.push_back(parse_generalized_string(line, alphabet, mode));
        } catch (const ParseError& e) {
            throw FormatError(line_no, e.what());
        }
        if (out.back().size() != out.front().size()) {
            throw FormatError(line_no, "pattern length " + std::to_string(out.back().size()) +
                                           " differs from the first pattern's length " +
                                           std::to_string(out.front().size()));
        }
    }
    if (out.empty()) {
        throw FormatError(line_no, "motif set contains no patterns");
    }
    return out;
}

}  // namespace motifdfa
