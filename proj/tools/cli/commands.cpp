#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "format.hpp"
#include "motifdfa/error.hpp"
#include "motifdfa/fasta.hpp"
#include "motifdfa/hamming.hpp"
#include "motifdfa/minimize.hpp"
#include "motifdfa/operations.hpp"
#include "motifdfa/search.hpp"

namespace motifdfa::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content) || !out.flush()) {
        throw IoError("cannot write '" + path + "'");
    }
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

Alphabet spec_alphabet(const MotifSpec& spec) {
    if (spec.mode == PatternMode::IupacDna) {
        if (!spec.alphabet.empty()) {
            throw std::invalid_argument("--alphabet cannot be combined with --mode iupac (the alphabet is ACGT)");
        }
        return Alphabet::dna();
    }
    if (spec.alphabet.empty()) {
        throw std::invalid_argument("--alphabet is required in literal mode");
    }
    return Alphabet(spec.alphabet);
}

CompiledMotif compile_for_search(const BuiltMotif& built) {
    Dfa dfa = subset_construction(built.nfa);
    if (built.motif_length > 0) {
        return CompiledMotif(std::move(dfa), built.motif_length, built.description, built.case_fold);
    }
    return CompiledMotif::from_dfa(std::move(dfa), built.description, built.case_fold);
}

void scan_input(const CompiledMotif& motif, std::istream& in, const std::string& text_id, SymbolPolicy policy,
                std::ostream& out, std::size_t& foreign) {
    const auto emit = [&](const Occurrence& o) {
        out << o.sequence_id << '\t' << o.start_pos() << '\t' << o.end_pos << '\n';
    };
    while (in.peek() == '\n' || in.peek() == '\r') {
        in.get();
    }
    if (in.peek() == '>') {
        FastaReader reader(in);
        FastaRecord record;
        while (reader.next(record)) {
            Scanner scanner(motif, record.id, policy);
            scanner.feed(record.sequence, emit);
            foreign += scanner.stats().foreign_symbols;
        }
        return;
    }
    Scanner scanner(motif, text_id, policy);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        scanner.feed(line, emit);
    }
    foreign += scanner.stats().foreign_symbols;
}

}  // namespace

BuiltMotif build_motif(const MotifSpec& spec) {
    BuiltMotif built{Nfa(Alphabet::dna(), 0), 0, {}, {}, spec.mode == PatternMode::IupacDna};
    switch (spec.kind) {
        case MotifKind::Genstring: {
            const auto g = parse_generalized_string(spec.pattern, spec_alphabet(spec), spec.mode);
            built.nfa = nfa_from_genstring(g);
            built.motif_length = g.size();
            built.description = "genstring " + g.to_string();
            break;
        }
        case MotifKind::Hamming: {
            const auto g = parse_generalized_string(spec.pattern, spec_alphabet(spec), spec.mode);
            auto hamming = build_hamming_automaton(g, spec.d_max);
            // A position admitting every symbol leaves no room for a mismatch,
            // so grid states that must spend one there have empty languages.
            // Trimming them restores simplicity; trim keeps relative order.
            const StateSet coaccessible = coaccessible_states(hamming.nfa);
            for (const StateId q : coaccessible) {
                const GridState cell = hamming.states[q];
                built.dot.complement_hint.push_back(cell.consumed < g.size() ? std::optional(g.at(cell.consumed))
                                                                             : std::nullopt);
            }
            built.nfa = coaccessible.size() == hamming.nfa.size() ? std::move(hamming.nfa) : trim(hamming.nfa);
            built.motif_length = g.size();
            built.description = "hamming " + g.to_string() + " d_max=" + std::to_string(spec.d_max);
            break;
        }
        case MotifKind::GenstringSet: {
            const Alphabet alphabet = spec_alphabet(spec);
            std::istringstream in(read_file(spec.patterns_file));
            const auto patterns = read_motif_set(in, alphabet, spec.mode);
            built.nfa = nfa_from_genstring_set(patterns);
            built.motif_length = patterns.front().size();
            built.description = "genstring-set " + spec.patterns_file;
            break;
        }
        case MotifKind::NfaFile:
            built.nfa = parse_nfa_table(read_file(spec.nfa_file));
            built.description = "nfa " + spec.nfa_file;
            break;
    }
    if (spec.suffix_loop) {
        built.nfa = add_start_self_loops(built.nfa);
    }
    return built;
}

MotifStats compute_stats(const Nfa& nfa) {
    MotifStats stats;
    stats.nfa_states = nfa.size();
    stats.nfa_transitions = nfa.transition_count();
    stats.nfa_starts = nfa.starts().size();
    const Dfa dfa = subset_construction(nfa);
    stats.dfa_states = dfa.size();
    stats.minimal_dfa_states = minimize(dfa).size();
    stats.is_simple = is_simple(nfa).simple();
    stats.dfa_is_minimal = stats.dfa_states == stats.minimal_dfa_states;
    return stats;
}

void write_stats(std::ostream& out, const MotifStats& stats) {
    out << "nfa_states: " << stats.nfa_states << '\n'
        << "nfa_transitions: " << stats.nfa_transitions << '\n'
        << "nfa_start_states: " << stats.nfa_starts << '\n'
        << "dfa_states: " << stats.dfa_states << '\n'
        << "minimal_dfa_states: " << stats.minimal_dfa_states << '\n'
        << "is_simple: " << (stats.is_simple ? "true" : "false") << '\n'
        << "dfa_is_minimal: " << (stats.dfa_is_minimal ? "true" : "false") << '\n';
}

int cmd_compile(const MotifSpec& spec, const CompileOutputs& outputs, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const BuiltMotif built = build_motif(spec);
        if (!outputs.nfa_path.empty()) {
            write_file(outputs.nfa_path, format_table(built.nfa));
        }
        if (!outputs.dfa_path.empty()) {
            write_file(outputs.dfa_path, format_table(subset_construction(built.nfa)));
        }
        if (!outputs.dot_path.empty()) {
            write_file(outputs.dot_path, to_dot(built.nfa, built.dot));
        }
        out << "motif: " << built.description << '\n';
        write_stats(out, compute_stats(built.nfa));
        return exit_ok;
    });
}

int cmd_stats(const MotifSpec& spec, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const BuiltMotif built = build_motif(spec);
        out << "motif: " << built.description << '\n';
        write_stats(out, compute_stats(built.nfa));
        return exit_ok;
    });
}

int cmd_search(const SearchRequest& request, std::istream& in, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::optional<CompiledMotif> motif;
        if (request.spec) {
            if (!request.spec->suffix_loop) {
                err << "error: search reports every occurrence only for automata with start self-loops; "
                       "add --suffix-loop\n";
                return exit_usage;
            }
            motif.emplace(compile_for_search(build_motif(*request.spec)));
        } else if (!request.automaton_path.empty()) {
            motif.emplace(CompiledMotif::from_dfa(parse_dfa_table(read_file(request.automaton_path)),
                                                  request.automaton_path, request.case_fold));
        } else {
            throw std::invalid_argument("search needs a motif (--pattern, --patterns-file, --nfa) or --automaton");
        }

        const SymbolPolicy policy = request.strict_symbols ? SymbolPolicy::Strict : SymbolPolicy::Reset;
        std::size_t foreign = 0;
        try {
            if (request.input_path.empty() || request.input_path == "-") {
                scan_input(*motif, in, "stdin", policy, out, foreign);
            } else {
                std::ifstream file(request.input_path, std::ios::binary);
                if (!file) {
                    throw IoError("cannot open '" + request.input_path + "' for reading");
                }
                scan_input(*motif, file, request.input_path, policy, out, foreign);
            }
        } catch (const ForeignSymbolError& e) {
            err << "error: " << e.what() << " (--strict-symbols)\n";
            return exit_usage;
        }
        if (foreign > 0) {
            err << "note: " << foreign << " character(s) outside the alphabet reset the scanner\n";
        }
        return exit_ok;
    });
}

int cmd_export_dot(const std::optional<MotifSpec>& spec, const std::string& automaton_path, DotTarget target,
                   const std::string& out_path, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::string dot;
        if (spec) {
            const BuiltMotif built = build_motif(*spec);
            dot = target == DotTarget::Nfa ? to_dot(built.nfa, built.dot) : to_dot(subset_construction(built.nfa));
        } else if (!automaton_path.empty()) {
            auto automaton = parse_table(read_file(automaton_path));
            if (const auto* nfa = std::get_if<Nfa>(&automaton)) {
                dot = target == DotTarget::Nfa ? to_dot(*nfa) : to_dot(subset_construction(*nfa));
            } else {
                dot = to_dot(std::get<Dfa>(automaton));
            }
        } else {
            throw std::invalid_argument("export-dot needs a motif (--pattern, --patterns-file, --nfa) or --automaton");
        }
        if (out_path.empty() || out_path == "-") {
            out << dot;
        } else {
            write_file(out_path, dot);
        }
        return exit_ok;
    });
}

namespace {

struct SpecFlags {
    std::string pattern;
    std::string patterns_file;
    std::string nfa_file;
    std::string alphabet;
    std::string mode = "literal";
    std::size_t d_max = 0;
    CLI::Option* hamming = nullptr;
    bool suffix_loop = false;

    void attach(CLI::App* sub) {
        sub->add_option("--pattern", pattern, "single pattern, e.g. A[AB]B[AC]");
        sub->add_option("--patterns-file", patterns_file, "file with one equal-length pattern per line");
        sub->add_option("--nfa", nfa_file, "NFA table file");
        sub->add_option("--alphabet", alphabet, "symbols in rank order (literal mode), e.g. ABC");
        sub->add_option("--mode", mode, "pattern syntax")->check(CLI::IsMember({"literal", "iupac"}));
        hamming = sub->add_option("--hamming", d_max, "accept strings within this Hamming distance");
        sub->add_flag("--suffix-loop", suffix_loop, "add start self-loops (report all occurrences)");
    }

    std::optional<MotifSpec> to_spec() const {
        const int sources = !pattern.empty() + !patterns_file.empty() + !nfa_file.empty();
        if (sources == 0) {
            if (hamming->count() > 0) {
                throw std::invalid_argument("--hamming needs --pattern");
            }
            return std::nullopt;
        }
        if (sources > 1) {
            throw std::invalid_argument("give exactly one of --pattern, --patterns-file, --nfa");
        }
        MotifSpec spec;
        spec.pattern = pattern;
        spec.patterns_file = patterns_file;
        spec.nfa_file = nfa_file;
        spec.alphabet = alphabet;
        spec.mode = mode == "iupac" ? PatternMode::IupacDna : PatternMode::Literal;
        spec.suffix_loop = suffix_loop;
        if (hamming->count() > 0) {
            if (pattern.empty()) {
                throw std::invalid_argument("--hamming needs a single --pattern");
            }
            spec.kind = MotifKind::Hamming;
            spec.d_max = d_max;
        } else if (!pattern.empty()) {
            spec.kind = MotifKind::Genstring;
        } else if (!patterns_file.empty()) {
            spec.kind = MotifKind::GenstringSet;
        } else {
            spec.kind = MotifKind::NfaFile;
        }
        return spec;
    }
};

std::optional<MotifSpec> require_spec(const SpecFlags& flags) {
    auto spec = flags.to_spec();
    if (!spec) {
        throw std::invalid_argument("no motif given; use --pattern, --patterns-file or --nfa");
    }
    return spec;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Compile sequence motifs into minimal DFAs and search texts with them.", "motifdfa"};
    app.require_subcommand(1);

    SpecFlags compile_flags, stats_flags, search_flags, dot_flags;
    CompileOutputs outputs;
    auto* compile = app.add_subcommand("compile", "build NFA and DFA, write tables/DOT, print stats");
    compile_flags.attach(compile);
    compile->add_option("--out-nfa", outputs.nfa_path, "write the NFA table here");
    compile->add_option("--out-dfa", outputs.dfa_path, "write the DFA table here");
    compile->add_option("--out-dot", outputs.dot_path, "write the NFA as Graphviz DOT here");

    auto* stats = app.add_subcommand("stats", "print automaton sizes and the minimality check");
    stats_flags.attach(stats);

    SearchRequest request;
    auto* search = app.add_subcommand("search", "report occurrences as TSV: sequence, start, end");
    search_flags.attach(search);
    search->add_option("--automaton", request.automaton_path, "DFA table compiled with --suffix-loop");
    search->add_flag("--strict-symbols", request.strict_symbols, "fail on characters outside the alphabet");
    search->add_option("input", request.input_path, "text or FASTA file (default: standard input)");

    std::string dot_automaton, dot_out, dot_which = "nfa";
    auto* export_dot = app.add_subcommand("export-dot", "render an automaton as Graphviz DOT");
    dot_flags.attach(export_dot);
    export_dot->add_option("--automaton", dot_automaton, "automaton table file");
    export_dot->add_option("--out-dot", dot_out, "output path (default: standard output)");
    export_dot->add_option("--which", dot_which, "automaton to render")->check(CLI::IsMember({"nfa", "dfa"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    return guarded(err, [&] {
        if (*compile) {
            return cmd_compile(*require_spec(compile_flags), outputs, out, err);
        }
        if (*stats) {
            return cmd_stats(*require_spec(stats_flags), out, err);
        }
        if (*search) {
            request.spec = search_flags.to_spec();
            request.case_fold = search_flags.mode == "iupac";
            return cmd_search(request, in, out, err);
        }
        return cmd_export_dot(dot_flags.to_spec(), dot_automaton, dot_which == "dfa" ? DotTarget::Dfa : DotTarget::Nfa,
                              dot_out, out, err);
    });
}

}  // namespace motifdfa::cli
