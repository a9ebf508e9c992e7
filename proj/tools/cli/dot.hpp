#pragma once

#include <optional>
#include <string>
#include <vector>

#include "motifdfa/automaton.hpp"

namespace motifdfa::cli {

struct DotOptions {
    std::string graph_name = "nfa";
    /// Per source state: when the symbols of an edge are exactly the
    /// complement of this set, the edge is labelled "not:<set>".
    std::vector<std::optional<SymbolSet>> complement_hint;
};

/// Graphviz rendering: accepting states double-circled, start states fed
/// by an edge from a point node, parallel edges merged into one label that
/// lists symbols in rank order. Nodes and edges are emitted in index order.
std::string to_dot(const Nfa& nfa, const DotOptions& options = {});
std::string to_dot(const Dfa& dfa);

}  // namespace motifdfa::cli
