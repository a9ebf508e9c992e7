#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "motifdfa/automaton.hpp"

namespace motifdfa {

struct Occurrence {
    std::string sequence_id;
    /// 1-based index of the last character of the match.
    std::size_t end_pos = 0;
    std::size_t length = 0;

    std::size_t start_pos() const { return end_pos - length + 1; }
    bool operator==(const Occurrence&) const = default;
};

/// How the scanner treats characters outside the motif alphabet.
enum class SymbolPolicy {
    Reset,   ///< restart from the start state and count the event
    Strict,  ///< throw ForeignSymbolError
};

/// A DFA with suffix-matching semantics whose matches all have one length.
class CompiledMotif {
public:
    /// Throws std::invalid_argument for motif_length 0.
    CompiledMotif(Dfa dfa, std::size_t motif_length, std::string description, bool case_fold = false);

    /// Wraps an automaton of unknown origin: checks suffix semantics and
    /// takes the shortest accepted length as the motif length. Throws
    /// std::invalid_argument when either check fails.
    static CompiledMotif from_dfa(Dfa dfa, std::string description, bool case_fold = false);

    const Dfa& dfa() const { return dfa_; }
    std::size_t motif_length() const { return motif_length_; }
    const std::string& description() const { return description_; }
    bool case_fold() const { return case_fold_; }

private:
    Dfa dfa_;
    std::size_t motif_length_;
    std::string description_;
    bool case_fold_;
};

/// True iff the DFA language L satisfies L = Σ*·L, checked as
/// L(start) ⊆ L(q) for every accessible state q.
bool has_suffix_semantics(const Dfa& dfa);

/// Length of a shortest accepted string, or -1 when the language is empty.
std::ptrdiff_t shortest_accepted_length(const Dfa& dfa);

struct ScanStats {
    std::size_t characters = 0;
    std::size_t foreign_symbols = 0;
};

/// Single-pass scanner over one sequence. Input may be fed in chunks;
/// positions continue across chunks.
class Scanner {
public:
    using Sink = std::function<void(const Occurrence&)>;

    Scanner(const CompiledMotif& motif, std::string sequence_id, SymbolPolicy policy = SymbolPolicy::Reset);

    void feed(std::string_view chunk, const Sink& sink);
    const ScanStats& stats() const { return stats_; }

private:
    const CompiledMotif* motif_;
    std::string sequence_id_;
    SymbolPolicy policy_;
    std::array<std::int16_t, 256> rank_of_{};
    StateId state_;
    ScanStats stats_;
};

/// Occurrences of the motif in `text`, in position order.
std::vector<Occurrence> stream_search(const CompiledMotif& motif, std::string_view text,
                                      std::string_view sequence_id,
                                      SymbolPolicy policy = SymbolPolicy::Reset, ScanStats* stats = nullptr);

}  // namespace motifdfa
