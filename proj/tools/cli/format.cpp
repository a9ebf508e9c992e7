#include "format.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "motifdfa/error.hpp"

namespace motifdfa::cli {

namespace {

std::string join(const StateSet& states, char sep) {
    std::string out;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += std::to_string(states[i]);
    }
    return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.push_back(line);
        if (nl == std::string_view::npos) {
            break;
        }
        text.remove_prefix(nl + 1);
    }
    while (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    return lines;
}

std::vector<std::string_view> split_words(std::string_view s) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
            ++i;
        }
        const std::size_t begin = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') {
            ++i;
        }
        if (i > begin) {
            words.push_back(s.substr(begin, i - begin));
        }
    }
    return words;
}

class TableReader {
public:
    explicit TableReader(std::string_view text) : lines_(split_lines(text)) {}

    std::string_view line(std::size_t i) const {
        if (i >= lines_.size()) {
            throw FormatError(i + 1, "unexpected end of table");
        }
        return lines_[i];
    }
    std::size_t line_count() const { return lines_.size(); }

    std::string_view field(std::size_t i, std::string_view key) const {
        const std::string_view l = line(i);
        if (l.substr(0, key.size()) != key) {
            throw FormatError(i + 1, "expected \"" + std::string(key) + "\"");
        }
        return l.substr(key.size());
    }

    static StateId number(std::string_view word, std::size_t line_no, std::size_t bound) {
        StateId value = 0;
        const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
        if (ec != std::errc{} || ptr != word.data() + word.size()) {
            throw FormatError(line_no, "expected a state index, got \"" + std::string(word) + "\"");
        }
        if (value >= bound) {
            throw FormatError(line_no, "state index " + std::to_string(value) + " out of range");
        }
        return value;
    }

    StateSet numbers(std::string_view s, std::size_t line_no, std::size_t bound) const {
        StateSet out;
        for (const auto word : split_words(s)) {
            out.push_back(number(word, line_no, bound));
        }
        return out;
    }

private:
    std::vector<std::string_view> lines_;
};

Alphabet read_alphabet(const TableReader& table) {
    try {
        return Alphabet(table.field(1, "alphabet:"));
    } catch (const std::invalid_argument& e) {
        throw FormatError(2, e.what());
    }
}

std::size_t read_state_count(const TableReader& table) {
    const auto text = table.field(2, "states:");
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw FormatError(3, "expected a state count");
    }
    return n;
}

void check_row_count(const TableReader& table, std::size_t n) {
    if (table.line_count() > 5 + n) {
        throw FormatError(6 + n, "unexpected content after the transition rows");
    }
}

}  // namespace

std::string format_table(const Dfa& dfa) {
    std::ostringstream out;
    out << "DFA v1\n"
        << "alphabet:" << dfa.alphabet().symbols() << '\n'
        << "states:" << dfa.size() << '\n'
        << "start:" << dfa.start() << '\n'
        << "accepting:" << join(dfa.accepting_states(), ' ') << '\n';
    for (StateId q = 0; q < dfa.size(); ++q) {
        for (std::size_t r = 0; r < dfa.alphabet().size(); ++r) {
            out << (r > 0 ? " " : "") << dfa.next(q, r);
        }
        out << '\n';
    }
    return out.str();
}

std::string format_table(const Nfa& nfa) {
    std::ostringstream out;
    out << "NFA v1\n"
        << "alphabet:" << nfa.alphabet().symbols() << '\n'
        << "states:" << nfa.size() << '\n'
        << "starts:" << join(nfa.starts(), ' ') << '\n'
        << "accepting:" << join(nfa.accepting(), ' ') << '\n';
    for (StateId q = 0; q < nfa.size(); ++q) {
        for (std::size_t r = 0; r < nfa.alphabet().size(); ++r) {
            const auto succ = nfa.successors(q, r);
            out << (r > 0 ? " " : "") << (succ.empty() ? "-" : join(StateSet(succ.begin(), succ.end()), ','));
        }
        out << '\n';
    }
    return out.str();
}

Dfa parse_dfa_table(std::string_view text) {
    const TableReader table(text);
    if (table.line(0) != "DFA v1") {
        throw FormatError(1, "expected \"DFA v1\"");
    }
    const Alphabet alphabet = read_alphabet(table);
    const std::size_t n = read_state_count(table);
    if (n == 0) {
        throw FormatError(3, "a DFA needs at least one state");
    }
    const StateSet start = table.numbers(table.field(3, "start:"), 4, n);
    if (start.size() != 1) {
        throw FormatError(4, "expected exactly one start state");
    }
    std::vector<bool> accepting(n, false);
    for (const StateId q : table.numbers(table.field(4, "accepting:"), 5, n)) {
        accepting[q] = true;
    }
    std::vector<StateId> delta;
    delta.reserve(n * alphabet.size());
    for (std::size_t q = 0; q < n; ++q) {
        const auto words = split_words(table.line(5 + q));
        if (words.size() != alphabet.size()) {
            throw FormatError(6 + q, "expected " + std::to_string(alphabet.size()) + " entries");
        }
        for (const auto w : words) {
            delta.push_back(TableReader::number(w, 6 + q, n));
        }
    }
    check_row_count(table, n);
    return Dfa(alphabet, std::move(delta), start.front(), std::move(accepting));
}

Nfa parse_nfa_table(std::string_view text) {
    const TableReader table(text);
    if (table.line(0) != "NFA v1") {
        throw FormatError(1, "expected \"NFA v1\"");
    }
    const Alphabet alphabet = read_alphabet(table);
    const std::size_t n = read_state_count(table);
    Nfa nfa(alphabet, n);
    for (const StateId q : table.numbers(table.field(3, "starts:"), 4, n)) {
        nfa.add_start(q);
    }
    for (const StateId q : table.numbers(table.field(4, "accepting:"), 5, n)) {
        nfa.add_accepting(q);
    }
    for (std::size_t q = 0; q < n; ++q) {
        const auto words = split_words(table.line(5 + q));
        if (words.size() != alphabet.size()) {
            throw FormatError(6 + q, "expected " + std::to_string(alphabet.size()) + " entries");
        }
        for (std::size_t r = 0; r < words.size(); ++r) {
            if (words[r] == "-") {
                continue;
            }
            std::string_view rest = words[r];
            while (true) {
                const auto comma = rest.find(',');
                nfa.add_transition(static_cast<StateId>(q), r,
                                   TableReader::number(rest.substr(0, comma), 6 + q, n));
                if (comma == std::string_view::npos) {
                    break;
                }
                rest.remove_prefix(comma + 1);
            }
        }
    }
    check_row_count(table, n);
    return nfa;
}

std::variant<Nfa, Dfa> parse_table(std::string_view text) {
    if (text.substr(0, 6) == "NFA v1") {
        return parse_nfa_table(text);
    }
    return parse_dfa_table(text);
}

}  // namespace motifdfa::cli
