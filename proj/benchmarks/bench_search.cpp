#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "motifdfa/genstring.hpp"
#include "motifdfa/operations.hpp"
#include "motifdfa/search.hpp"

namespace {

using namespace motifdfa;

void BM_ScanThroughput(benchmark::State& state) {
    const auto g = parse_generalized_string("TATAWAWN", Alphabet::dna(), PatternMode::IupacDna);
    const CompiledMotif motif(subset_construction(add_start_self_loops(nfa_from_genstring(g))), g.size(), "tata");
    std::mt19937 rng(7);
    std::string text(static_cast<std::size_t>(state.range(0)), 'A');
    for (char& c : text) {
        c = "ACGT"[rng() % 4];
    }
    std::size_t hits = 0;
    for (auto _ : state) {
        Scanner scanner(motif, "seq");
        scanner.feed(text, [&](const Occurrence&) { ++hits; });
    }
    benchmark::DoNotOptimize(hits);
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_ScanThroughput)->Range(1 << 12, 1 << 20);

}  // namespace
