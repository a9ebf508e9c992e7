#include "dot.hpp"

#include <map>
#include <sstream>

namespace motifdfa::cli {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (const char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

std::string symbol_list(const Alphabet& alphabet, SymbolSet set) {
    std::string out;
    set.for_each([&](std::size_t r) {
        if (!out.empty()) {
            out += ',';
        }
        out += alphabet.symbol(r);
    });
    return out;
}

void write_node(std::ostream& out, StateId q, const std::string& label, bool accepting) {
    out << "  q" << q << " [label=\"" << escape(label) << "\"" << (accepting ? ", shape=doublecircle" : "")
        << "];\n";
}

void write_start(std::ostream& out, StateId q) {
    out << "  start" << q << " [shape=point];\n"
        << "  start" << q << " -> q" << q << ";\n";
}

}  // namespace

std::string to_dot(const Nfa& nfa, const DotOptions& options) {
    const Alphabet& alphabet = nfa.alphabet();
    std::ostringstream out;
    out << "digraph " << options.graph_name << " {\n"
        << "  rankdir=LR;\n"
        << "  node [shape=circle];\n";
    for (StateId q = 0; q < nfa.size(); ++q) {
        write_node(out, q, nfa.label(q), nfa.is_accepting(q));
    }
    for (const StateId q : nfa.starts()) {
        write_start(out, q);
    }
    for (StateId q = 0; q < nfa.size(); ++q) {
        std::map<StateId, SymbolSet> grouped;
        for (std::size_t r = 0; r < alphabet.size(); ++r) {
            for (const StateId t : nfa.successors(q, r)) {
                grouped[t].insert(r);
            }
        }
        const SymbolSet* hint = nullptr;
        if (q < options.complement_hint.size() && options.complement_hint[q]) {
            hint = &*options.complement_hint[q];
        }
        for (const auto& [t, symbols] : grouped) {
            std::string label;
            if (hint && !hint->empty() && symbols == (alphabet.all() & ~*hint)) {
                label = "not:" + symbol_list(alphabet, *hint);
            } else {
                label = symbol_list(alphabet, symbols);
            }
            out << "  q" << q << " -> q" << t << " [label=\"" << escape(label) << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const Dfa& dfa) {
    const Alphabet& alphabet = dfa.alphabet();
    std::ostringstream out;
    out << "digraph dfa {\n"
        << "  rankdir=LR;\n"
        << "  node [shape=circle];\n";
    for (StateId q = 0; q < dfa.size(); ++q) {
        std::string label = std::to_string(q);
        if (!dfa.subset_labels().empty()) {
            label = "{";
            const auto& subset = dfa.subset_labels()[q];
            for (std::size_t i = 0; i < subset.size(); ++i) {
                label += (i > 0 ? "," : "") + std::to_string(subset[i]);
            }
            label += "}";
        }
        write_node(out, q, label, dfa.is_accepting(q));
    }
    write_start(out, dfa.start());
    for (StateId q = 0; q < dfa.size(); ++q) {
        std::map<StateId, SymbolSet> grouped;
        for (std::size_t r = 0; r < alphabet.size(); ++r) {
            grouped[dfa.next(q, r)].insert(r);
        }
        for (const auto& [t, symbols] : grouped) {
            out << "  q" << q << " -> q" << t << " [label=\"" << escape(symbol_list(alphabet, symbols)) << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace motifdfa::cli
