#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "motifdfa/error.hpp"
#include "motifdfa/genstring.hpp"
#include "motifdfa/hamming.hpp"
#include "motifdfa/minimize.hpp"
#include "motifdfa/operations.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace motifdfa;
using motifdfa::testing::oracle_nfa_accepts_from;
using motifdfa::testing::strings_up_to;

namespace {

const Alphabet abc("ABC");

GeneralizedString four_position() { return parse_generalized_string("A[AB]B[AC]", abc, PatternMode::Literal); }

std::set<std::string> brute_language(const Nfa& nfa, const StateSet& from, std::size_t max_len) {
    std::set<std::string> out;
    for (const auto& s : strings_up_to(nfa.alphabet().symbols(), max_len)) {
        if (oracle_nfa_accepts_from(nfa, from, s)) {
            out.insert(s);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("accessible states") {
    SUBCASE("disconnected state is dropped") {
        Nfa nfa(abc, 3);
        nfa.add_start(0);
        nfa.add_transition(0, 0, 1);
        CHECK(accessible_states(nfa) == StateSet{0, 1});
    }
    SUBCASE("union over every start") {
        Nfa nfa(abc, 3);
        nfa.add_start(0);
        nfa.add_start(2);
        nfa.add_transition(2, 0, 1);
        CHECK(accessible_states(nfa) == StateSet{0, 1, 2});
    }
    SUBCASE("chain automaton is fully accessible") {
        CHECK(accessible_states(nfa_from_genstring(four_position())).size() == 5);
    }
}

TEST_CASE("coaccessible states") {
    Nfa nfa(abc, 4);
    nfa.add_start(0);
    nfa.add_transition(0, 0, 1);
    nfa.add_transition(1, 1, 2);
    nfa.add_transition(0, 2, 3);
    nfa.add_accepting(2);
    CHECK(coaccessible_states(nfa) == StateSet{0, 1, 2});

    const auto g = parse_generalized_string("ADC", Alphabet("ABCD"), PatternMode::Literal);
    const Nfa grid = nfa_from_hamming(g, 2);
    CHECK(coaccessible_states(grid).size() == grid.size());
    CHECK(accessible_states(grid).size() == grid.size());
}

TEST_CASE("trim") {
    SUBCASE("already trim is a fixpoint") {
        const Nfa nfa = nfa_from_genstring(four_position());
        CHECK(trim(nfa) == nfa);
    }
    SUBCASE("isolated state is removed") {
        Nfa nfa(abc, 4);
        nfa.add_start(0);
        nfa.add_transition(0, 0, 1);
        nfa.add_transition(1, 0, 2);
        nfa.add_accepting(2);
        const Nfa t = trim(nfa);
        CHECK(t.size() == 3);
        CHECK(t.starts() == StateSet{0});
        CHECK(t.accepting() == StateSet{2});
        CHECK(t.transition_count() == 2);
    }
    SUBCASE("dead sink removed, language kept") {
        Nfa nfa(abc, 4);
        nfa.add_start(0);
        nfa.add_transition(0, 0, 1);
        nfa.add_transition(0, 1, 2);  // 2 is a sink without a path to F
        nfa.add_transition(1, 1, 3);
        nfa.add_transition(3, 2, 3);
        nfa.add_accepting(3);
        const Nfa t = trim(nfa);
        CHECK(t.size() == 3);
        CHECK(brute_language(t, t.starts(), 4) == brute_language(nfa, nfa.starts(), 4));
    }
}

TEST_CASE("disjointness of state languages") {
    SUBCASE("chain automaton") {
        CHECK(languages_disjointness_report(nfa_from_genstring(four_position())).disjoint());
    }
    SUBCASE("two starts sharing a language") {
        Nfa nfa(Alphabet("AB"), 3);
        nfa.add_start(0);
        nfa.add_start(1);
        nfa.add_transition(0, 0, 2);
        nfa.add_transition(1, 0, 2);
        nfa.add_accepting(2);
        const auto report = languages_disjointness_report(nfa);
        REQUIRE_FALSE(report.disjoint());
        CHECK(*report.overlap == LanguageOverlap{0, 1, "A"});
    }
    SUBCASE("witness is shortest then least") {
        // L(0) = L(1) = {AB, BB}; AB is the least shared string.
        Nfa nfa(Alphabet("AB"), 5);
        nfa.add_start(0);
        nfa.add_transition(0, 1, 2);
        nfa.add_transition(0, 0, 2);
        nfa.add_transition(2, 1, 4);
        nfa.add_transition(1, 0, 3);
        nfa.add_transition(1, 1, 3);
        nfa.add_transition(3, 1, 4);
        nfa.add_start(1);
        nfa.add_accepting(4);
        const auto report = languages_disjointness_report(nfa);
        REQUIRE_FALSE(report.disjoint());
        CHECK(report.overlap->first == 0);
        CHECK(report.overlap->second == 1);
        CHECK(report.overlap->witness == "AB");
    }
    SUBCASE("looped chain agrees with per-state enumeration") {
        const Nfa nfa = add_start_self_loops(nfa_from_genstring(four_position()));
        CHECK(languages_disjointness_report(nfa).disjoint());
        for (StateId p = 0; p < nfa.size(); ++p) {
            for (StateId q = p + 1; q < nfa.size(); ++q) {
                const auto lp = brute_language(nfa, {p}, 6);
                const auto lq = brute_language(nfa, {q}, 6);
                for (const auto& s : lp) {
                    CHECK(lq.count(s) == 0);
                }
            }
        }
    }
}

TEST_CASE("is_simple") {
    CHECK(is_simple(nfa_from_genstring(four_position())));
    const auto set = std::vector{parse_generalized_string("[BC][AC][AB]", abc, PatternMode::Literal),
                                 parse_generalized_string("A B [ABC]", abc, PatternMode::Literal),
                                 parse_generalized_string("C [BC] [AC]", abc, PatternMode::Literal)};
    CHECK(is_simple(nfa_from_genstring_set(set)));

    SUBCASE("back edge into a start breaks simplicity after loops") {
        Nfa nfa = nfa_from_genstring(four_position());
        nfa.add_transition(4, 1, 0);
        REQUIRE(is_simple(nfa));
        CHECK_FALSE(is_simple(add_start_self_loops(nfa)));
    }
    SUBCASE("flags for non-trim input") {
        Nfa nfa(abc, 3);
        nfa.add_start(0);
        nfa.add_transition(0, 0, 1);
        nfa.add_accepting(1);
        const auto report = is_simple(nfa);
        CHECK_FALSE(report.simple());
        CHECK_FALSE(report.all_accessible);
        CHECK_FALSE(report.all_coaccessible);
    }
}

TEST_CASE("start self-loops") {
    const Nfa looped = add_start_self_loops(nfa_from_genstring(four_position()));
    for (std::size_t r = 0; r < 3; ++r) {
        const auto succ = looped.successors(0, r);
        CHECK(std::find(succ.begin(), succ.end(), StateId{0}) != succ.end());
    }
    CHECK(looped.transition_count() == 6 + 3);
    CHECK(add_start_self_loops(looped) == looped);
}

TEST_CASE("nfa and dfa acceptance") {
    const Nfa nfa = nfa_from_genstring(four_position());
    CHECK(nfa_accepts(nfa, "ABBA"));
    CHECK(nfa_accepts(nfa, "AABC"));
    CHECK_FALSE(nfa_accepts(nfa, "AB"));
    CHECK_FALSE(nfa_accepts(nfa, "ABBB"));
    CHECK(nfa_accepts(add_start_self_loops(nfa), "CCABBA"));
    CHECK_FALSE(nfa_accepts(nfa, "CCABBA"));

    const Dfa dfa = subset_construction(nfa);
    CHECK(dfa_accepts(dfa, "ABBA"));
    CHECK_FALSE(dfa_accepts(dfa, "ABBB"));
    CHECK(dfa_accepts(dfa, "") == dfa.is_accepting(dfa.start()));

    SUBCASE("foreign characters are reported with their position") {
        try {
            nfa_accepts(nfa, "ABxA");
            FAIL("expected ForeignSymbolError");
        } catch (const ForeignSymbolError& e) {
            CHECK(e.position() == 2);
            CHECK(e.symbol() == 'x');
        }
        CHECK_THROWS_AS(dfa_accepts(dfa, "Z"), ForeignSymbolError);
    }
}

TEST_CASE("subset construction") {
    SUBCASE("single symbol over two letters") {
        const Alphabet ab("AB");
        const Nfa nfa = nfa_from_genstring(parse_generalized_string("A", ab, PatternMode::Literal));
        const Dfa dfa = subset_construction(nfa);
        CHECK(dfa.size() == 3);
        CHECK(dfa.start() == 0);
        CHECK(dfa.next(0, 0) == 1);
        CHECK(dfa.next(0, 1) == 2);
        CHECK(dfa.accepting_states() == StateSet{1});
        REQUIRE(dfa.subset_labels().size() == 3);
        CHECK(dfa.subset_labels()[0] == StateSet{0});
        CHECK(dfa.subset_labels()[1] == StateSet{1});
        CHECK(dfa.subset_labels()[2].empty());
        CHECK(dfa.size() == minimize(dfa).size());
    }
    SUBCASE("deterministic input yields an isomorphic dfa") {
        Nfa nfa(Alphabet("AB"), 3);
        nfa.add_start(0);
        nfa.add_transition(0, 0, 1);
        nfa.add_transition(0, 1, 2);
        nfa.add_transition(1, 0, 1);
        nfa.add_transition(1, 1, 2);
        nfa.add_transition(2, 0, 0);
        nfa.add_transition(2, 1, 2);
        nfa.add_accepting(1);
        const Dfa dfa = subset_construction(nfa);
        CHECK(dfa.size() == 3);
        const Dfa expected(Alphabet("AB"), {1, 2, 1, 2, 0, 2}, 0, {false, true, false});
        CHECK(isomorphic(dfa, expected));
    }
    SUBCASE("looped constructions never reach the empty subset") {
        for (const auto& inst : motifdfa::testing::paper_corpus(7, 1)) {
            if (!inst.looped) {
                continue;
            }
            const Dfa dfa = subset_construction(inst.nfa);
            for (const auto& label : dfa.subset_labels()) {
                CHECK_FALSE(label.empty());
            }
        }
    }
    SUBCASE("no start state") {
        CHECK_THROWS_AS(subset_construction(Nfa(abc, 1)), std::invalid_argument);
    }
}

TEST_CASE("bounded language enumeration") {
    const Alphabet ab("AB");
    const auto g = parse_generalized_string("A[AB]", ab, PatternMode::Literal);
    CHECK(enumerate_language(nfa_from_genstring(g), 3) == std::set<std::string>{"AA", "AB"});
    CHECK(enumerate_language(Nfa(ab, 2), 3).empty());
    const auto h = parse_generalized_string("AB", ab, PatternMode::Literal);
    CHECK(enumerate_language(nfa_from_hamming(h, 1), 2) == std::set<std::string>{"AB", "BB", "AA"});
    CHECK(enumerate_language(subset_construction(nfa_from_hamming(h, 1)), 2) ==
          std::set<std::string>{"AB", "BB", "AA"});
    CHECK(enumerate_language(nfa_from_genstring(g), 1, StateId{1}) == std::set<std::string>{"A", "B"});
    CHECK_THROWS_AS(enumerate_language(nfa_from_genstring(g), 13), std::invalid_argument);
    const auto five = parse_generalized_string("A", Alphabet("ABCDE"), PatternMode::Literal);
    CHECK_THROWS_AS(enumerate_language(nfa_from_genstring(five), 11), std::invalid_argument);
    CHECK(enumerate_language(nfa_from_genstring(four_position()), 12).size() == 4);
}

TEST_CASE("subset construction preserves the language on random nfas") {
    std::mt19937 rng(11);
    const Alphabet ab("AB");
    for (int round = 0; round < 200; ++round) {
        const std::size_t n = 1 + rng() % 5;
        Nfa nfa(ab, n);
        for (StateId p = 0; p < n; ++p) {
            for (std::size_t r = 0; r < 2; ++r) {
                for (StateId q = 0; q < n; ++q) {
                    if (rng() % 3 == 0) {
                        nfa.add_transition(p, r, q);
                    }
                }
            }
            if (rng() % 3 == 0) {
                nfa.add_accepting(p);
            }
        }
        nfa.add_start(static_cast<StateId>(rng() % n));
        const Dfa dfa = subset_construction(nfa);
        CHECK_FALSE(motifdfa::testing::first_disagreement(nfa, dfa, 6).has_value());
    }
}

TEST_CASE("automaton validation") {
    Nfa nfa(abc, 2);
    CHECK_THROWS_AS(nfa.add_transition(0, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(nfa.add_transition(2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(nfa.add_start(5), std::invalid_argument);
    CHECK_THROWS_AS(Dfa(Alphabet("AB"), {0}, 0, {false}), std::invalid_argument);
    CHECK_THROWS_AS(Dfa(Alphabet("AB"), {0, 1}, 0, {false}), std::invalid_argument);
    CHECK_THROWS_AS(Dfa(Alphabet("AB"), {0, 0}, 1, {false}), std::invalid_argument);
}
