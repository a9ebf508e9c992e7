#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "dot.hpp"
#include "motifdfa/automaton.hpp"
#include "motifdfa/genstring.hpp"

namespace motifdfa::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_io = 2;

/// Unreadable input or unwritable output.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class MotifKind {
    Genstring,     ///< --pattern
    GenstringSet,  ///< --patterns-file
    Hamming,       ///< --pattern with --hamming
    NfaFile,       ///< --nfa, a hand-written NFA table
};

struct MotifSpec {
    MotifKind kind = MotifKind::Genstring;
    std::string pattern;
    std::string patterns_file;
    std::string nfa_file;
    /// Required in literal mode, must be empty in IUPAC mode.
    std::string alphabet;
    PatternMode mode = PatternMode::Literal;
    std::size_t d_max = 0;
    bool suffix_loop = false;
};

struct BuiltMotif {
    Nfa nfa;
    /// 0 when unknown (NFA files).
    std::size_t motif_length = 0;
    std::string description;
    DotOptions dot;
    bool case_fold = false;
};

/// Builds the NFA named by the spec and, if requested, adds start
/// self-loops. Throws motifdfa::Error or std::invalid_argument for invalid
/// specs and IoError for unreadable files.
BuiltMotif build_motif(const MotifSpec& spec);

struct MotifStats {
    std::size_t nfa_states = 0;
    std::size_t nfa_transitions = 0;
    std::size_t nfa_starts = 0;
    std::size_t dfa_states = 0;
    std::size_t minimal_dfa_states = 0;
    bool is_simple = false;
    /// Subset construction already produced the minimal automaton.
    bool dfa_is_minimal = false;
};

MotifStats compute_stats(const Nfa& nfa);
void write_stats(std::ostream& out, const MotifStats& stats);

struct CompileOutputs {
    std::string nfa_path;
    std::string dfa_path;
    std::string dot_path;
};

struct SearchRequest {
    std::optional<MotifSpec> spec;
    /// DFA table to load instead of compiling a spec.
    std::string automaton_path;
    /// Text or FASTA file; empty or "-" reads the input stream.
    std::string input_path;
    bool strict_symbols = false;
    /// Case folding for loaded automata (IUPAC mode).
    bool case_fold = false;
};

enum class DotTarget { Nfa, Dfa };

int cmd_compile(const MotifSpec& spec, const CompileOutputs& outputs, std::ostream& out, std::ostream& err);
int cmd_stats(const MotifSpec& spec, std::ostream& out, std::ostream& err);
int cmd_search(const SearchRequest& request, std::istream& in, std::ostream& out, std::ostream& err);
/// Exports the spec's automaton, or the DFA table at automaton_path when the
/// spec is absent. An empty out_path writes to `out`.
int cmd_export_dot(const std::optional<MotifSpec>& spec, const std::string& automaton_path, DotTarget target,
                   const std::string& out_path, std::ostream& out, std::ostream& err);

/// Parses the command line and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace motifdfa::cli
