#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "motifdfa/genstring.hpp"
#include "motifdfa/hamming.hpp"
#include "motifdfa/minimize.hpp"
#include "motifdfa/operations.hpp"

namespace {

using namespace motifdfa;

GeneralizedString random_dna_genstring(std::mt19937& rng, std::size_t length) {
    std::uniform_int_distribution<std::uint64_t> pick(1, 15);
    std::vector<SymbolSet> positions;
    for (std::size_t i = 0; i < length; ++i) {
        // Mostly singletons, as in real consensus motifs.
        positions.emplace_back(rng() % 4 == 0 ? pick(rng) : std::uint64_t{1} << (rng() % 4));
    }
    return GeneralizedString(Alphabet::dna(), std::move(positions));
}

std::vector<GeneralizedString> random_set(std::size_t count, std::size_t length) {
    std::mt19937 rng(static_cast<std::uint32_t>(count * 131 + length));
    std::vector<GeneralizedString> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(random_dna_genstring(rng, length));
    }
    return out;
}

void BM_GenstringSetNfa(benchmark::State& state) {
    const auto patterns = random_set(static_cast<std::size_t>(state.range(0)), 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_genstring_set_automaton(patterns));
    }
    state.counters["nfa_states"] = static_cast<double>(nfa_from_genstring_set(patterns).size());
}
BENCHMARK(BM_GenstringSetNfa)->DenseRange(1, 10, 3);

void BM_GenstringSetToDfa(benchmark::State& state) {
    const auto patterns = random_set(static_cast<std::size_t>(state.range(0)), 12);
    const Nfa nfa = add_start_self_loops(nfa_from_genstring_set(patterns));
    std::size_t dfa_states = 0;
    for (auto _ : state) {
        const Dfa dfa = subset_construction(nfa);
        dfa_states = dfa.size();
        benchmark::DoNotOptimize(dfa_states);
    }
    state.counters["dfa_states"] = static_cast<double>(dfa_states);
}
BENCHMARK(BM_GenstringSetToDfa)->DenseRange(1, 10, 3);

void BM_HammingToDfa(benchmark::State& state) {
    std::mt19937 rng(1);
    std::vector<SymbolSet> positions;
    for (int i = 0; i < 12; ++i) {
        positions.push_back(SymbolSet::single(rng() % 4));
    }
    const GeneralizedString g(Alphabet::dna(), std::move(positions));
    const Nfa nfa = add_start_self_loops(nfa_from_hamming(g, static_cast<std::size_t>(state.range(0))));
    std::size_t dfa_states = 0;
    for (auto _ : state) {
        const Dfa dfa = subset_construction(nfa);
        dfa_states = dfa.size();
        benchmark::DoNotOptimize(dfa_states);
    }
    state.counters["dfa_states"] = static_cast<double>(dfa_states);
}
BENCHMARK(BM_HammingToDfa)->DenseRange(0, 3, 1);

// Cost of the minimization a simple NFA makes unnecessary.
void BM_MinimizeSubsetDfa(benchmark::State& state) {
    const auto patterns = random_set(static_cast<std::size_t>(state.range(0)), 12);
    const Dfa dfa = subset_construction(add_start_self_loops(nfa_from_genstring_set(patterns)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimize(dfa));
    }
    state.counters["dfa_states"] = static_cast<double>(dfa.size());
}
BENCHMARK(BM_MinimizeSubsetDfa)->DenseRange(1, 10, 3);

}  // namespace
