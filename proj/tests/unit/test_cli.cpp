#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/dot.hpp"
#include "cli/format.hpp"
#include "doctest.h"
#include "motifdfa/error.hpp"
#include "motifdfa/genstring.hpp"
#include "motifdfa/operations.hpp"

using namespace motifdfa;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "motifdfa");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("motifdfa_cli_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path / name, std::ios::binary) << text;
        return (path / name).string();
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
        ++n;
    }
    return n;
}

const char* const three_patterns = "[BC][AC][AB]\nA B [ABC]\nC [BC] [AC]\n";

}  // namespace

TEST_CASE("table format") {
    const Nfa nfa = add_start_self_loops(
        nfa_from_genstring(parse_generalized_string("A[AB]", Alphabet("AB"), PatternMode::Literal)));
    const std::string text = cli::format_table(nfa);
    CHECK(text ==
          "NFA v1\nalphabet:AB\nstates:3\nstarts:0\naccepting:2\n"
          "0,1 0\n2 2\n- -\n");
    const Nfa back = cli::parse_nfa_table(text);
    CHECK(cli::format_table(back) == text);

    const Dfa dfa = subset_construction(nfa);
    const std::string dtext = cli::format_table(dfa);
    CHECK(dtext.rfind("DFA v1\nalphabet:AB\nstates:", 0) == 0);
    CHECK(cli::format_table(cli::parse_dfa_table(dtext)) == dtext);
    CHECK(std::holds_alternative<Dfa>(cli::parse_table(dtext)));
    CHECK(std::holds_alternative<Nfa>(cli::parse_table(text)));
    CHECK(cli::parse_dfa_table("DFA v1\r\nalphabet:A\r\nstates:1\r\nstart:0\r\naccepting:\r\n0\r\n\n") ==
          Dfa(Alphabet("A"), {0}, 0, {false}));
}

TEST_CASE("table parse errors name the line") {
    const auto line_of = [](const std::string& text) -> std::size_t {
        try {
            cli::parse_table(text);
        } catch (const FormatError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("XFA v1\n") == 1);
    CHECK(line_of("DFA v1\nalphabet:AB\nstates:x\n") == 3);
    CHECK(line_of("DFA v1\nalphabet:AB\nstates:1\nstart:0\naccepting:\n0\n") == 6);
    CHECK(line_of("DFA v1\nalphabet:AB\nstates:1\nstart:0\naccepting:\n0 1\n") == 6);
    CHECK(line_of("DFA v1\nalphabet:AB\nstates:2\nstart:0\naccepting:\n0 1\n") == 7);
    CHECK(line_of("NFA v1\nalphabet:AB\nstates:1\nstarts:0\naccepting:0\n0,0 -\nextra\n") == 7);
    CHECK(line_of("NFA v1\nalphabet:AB\nstates:1\nstarts:3\naccepting:0\n- -\n") == 4);
}

TEST_CASE("dot export") {
    const auto nfa = nfa_from_genstring(parse_generalized_string("A[AB]B[AC]", Alphabet("ABC"), PatternMode::Literal));
    const std::string dot = cli::to_dot(add_start_self_loops(nfa));
    CHECK(dot.rfind("digraph nfa {", 0) == 0);
    CHECK(count(dot, "doublecircle") == 1);
    CHECK(count(dot, "label=\"A,B,C\"") == 1);
}

TEST_CASE("stats for the three constructions") {
    const Run single = run_cli({"stats", "--pattern", "A[AB]B[AC]", "--alphabet", "ABC", "--suffix-loop"});
    CHECK(single.code == 0);
    CHECK(single.out.find("nfa_states: 5\n") != std::string::npos);
    CHECK(single.out.find("is_simple: true\n") != std::string::npos);
    CHECK(single.out.find("dfa_is_minimal: true\n") != std::string::npos);

    TempDir dir;
    const std::string patterns = dir.write("g.txt", three_patterns);
    const Run set = run_cli({"stats", "--patterns-file", patterns, "--alphabet", "ABC"});
    CHECK(set.code == 0);
    CHECK(set.out.find("nfa_states: 13\n") != std::string::npos);

    const Run grid = run_cli({"stats", "--pattern", "ADC", "--alphabet", "ABCD", "--hamming", "2", "--suffix-loop"});
    CHECK(grid.code == 0);
    CHECK(grid.out.find("nfa_states: 9\n") != std::string::npos);
    CHECK(grid.out.find("dfa_is_minimal: true\n") != std::string::npos);

    // Two starts with the same one-letter language.
    const std::string shared = dir.write("shared.nfa",
                                         "NFA v1\nalphabet:AB\nstates:3\nstarts:0 1\naccepting:2\n2 -\n2 -\n- -\n");
    const Run odd = run_cli({"stats", "--nfa", shared});
    CHECK(odd.code == 0);
    CHECK(odd.out.find("is_simple: false\n") != std::string::npos);
}

TEST_CASE("compile writes tables and dot") {
    TempDir dir;
    const Run r = run_cli({"compile", "--pattern", "A[AB]B[AC]", "--alphabet", "ABC", "--suffix-loop", "--out-nfa",
                           dir.file("m.nfa"), "--out-dfa", dir.file("m.dfa"), "--out-dot", dir.file("m.dot")});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("motif: ", 0) == 0);
    const std::string nfa_text = slurp(dir.file("m.nfa"));
    const std::string dfa_text = slurp(dir.file("m.dfa"));
    CHECK(cli::format_table(cli::parse_nfa_table(nfa_text)) == nfa_text);
    CHECK(cli::format_table(cli::parse_dfa_table(dfa_text)) == dfa_text);
    CHECK(count(slurp(dir.file("m.dot")), "doublecircle") == 1);

    const Run search = run_cli({"search", "--automaton", dir.file("m.dfa")}, "CCABBA\n");
    CHECK(search.code == 0);
    CHECK(search.out == "stdin\t3\t6\n");
}

TEST_CASE("export-dot node counts") {
    const auto nodes = [](const std::string& dot) {
        std::size_t n = 0;
        std::istringstream lines(dot);
        for (std::string line; std::getline(lines, line);) {
            n += line.rfind("  q", 0) == 0 && line.find("->") == std::string::npos ? 1 : 0;
        }
        return n;
    };
    const Run single = run_cli({"export-dot", "--pattern", "A[AB]B[AC]", "--alphabet", "ABC", "--suffix-loop"});
    CHECK(nodes(single.out) == 5);
    CHECK(count(single.out, "doublecircle") == 1);

    TempDir dir;
    const Run set = run_cli({"export-dot", "--patterns-file", dir.write("g.txt", three_patterns), "--alphabet", "ABC"});
    CHECK(nodes(set.out) == 13);
    CHECK(set.out.find("({0,1,2},3)") != std::string::npos);

    const Run grid = run_cli({"export-dot", "--pattern", "ADC", "--alphabet", "ABCD", "--hamming", "2"});
    CHECK(nodes(grid.out) == 9);
    CHECK(grid.out.find("(2,0)") != std::string::npos);
    CHECK(grid.out.find("not:") != std::string::npos);

    const Run dfa = run_cli({"export-dot", "--pattern", "A", "--alphabet", "AB", "--which", "dfa"});
    CHECK(nodes(dfa.out) == 3);
}

TEST_CASE("search output") {
    const std::vector<std::string> single{"search", "--pattern", "A[AB]B[AC]", "--alphabet", "ABC", "--suffix-loop"};
    CHECK(run_cli(single, "CCABBA").out == "stdin\t3\t6\n");

    const Run fasta = run_cli(single, ">one x\nABBA\n>two\nCCAB\nBAABBA\n");
    CHECK(fasta.code == 0);
    CHECK(fasta.out == "one\t1\t4\ntwo\t3\t6\ntwo\t7\t10\n");

    const Run foreign = run_cli(single, "ABBANABBC");
    CHECK(foreign.code == 0);
    CHECK(foreign.out == "stdin\t1\t4\nstdin\t6\t9\n");
    CHECK(foreign.err.find("note:") != std::string::npos);

    std::vector<std::string> strict = single;
    strict.push_back("--strict-symbols");
    CHECK(run_cli(strict, "ABBANABBC").code == 1);

    const Run iupac = run_cli({"search", "--pattern", "ACN", "--mode", "iupac", "--suffix-loop"}, "ttacgACT\n");
    CHECK(iupac.out == "stdin\t3\t5\nstdin\t6\t8\n");
}

TEST_CASE("usage and io errors") {
    const Run no_loop = run_cli({"search", "--pattern", "AB", "--alphabet", "AB"}, "AB");
    CHECK(no_loop.code == 1);
    CHECK(no_loop.err.find("--suffix-loop") != std::string::npos);
    CHECK(run_cli({"stats", "--pattern", "A]", "--alphabet", "AB"}).code == 1);
    CHECK(run_cli({"stats", "--pattern", "AB"}).code == 1);
    CHECK(run_cli({"stats", "--pattern", "AB", "--alphabet", "AB", "--mode", "iupac"}).code == 1);
    CHECK(run_cli({"stats", "--patterns-file", "/nonexistent/motifs.txt", "--alphabet", "AB"}).code == 2);
    CHECK(run_cli({"search", "--pattern", "AB", "--alphabet", "AB", "--suffix-loop", "/nonexistent/in.fa"}).code ==
          2);
    CHECK(run_cli({"bogus"}).code == 1);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("hamming motifs are trimmed before compilation") {
    const Run r = run_cli({"stats", "--pattern", "ANC", "--mode", "iupac", "--hamming", "2", "--suffix-loop"});
    CHECK(r.code == 0);
    CHECK(r.out.find("is_simple: true\n") != std::string::npos);
    CHECK(r.out.find("dfa_is_minimal: true\n") != std::string::npos);
    CHECK(r.out.find("nfa_states: 8\n") != std::string::npos);
}
