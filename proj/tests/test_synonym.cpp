#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "lexkit.hpp"
#include "support.hpp"

using namespace lexkit;

namespace {

SynonymGraph parse(const std::string& text) {
    std::istringstream in(text);
    return read_synonym_graph(in);
}

}

TEST_CASE("edges are symmetric") {
    auto g = parse("a\tb\n");
    CHECK(*g.neighbors("a") == std::set<std::string>{"b"});
    CHECK(*g.neighbors("b") == std::set<std::string>{"a"});
    CHECK(g.edge_count() == 1);
}

TEST_CASE("duplicate lines do not change the graph") {
    CHECK(parse("a\tb\n") == parse("a\tb\na\tb\nb\ta\n"));
}

TEST_CASE("self-loops are dropped") {
    auto g = parse("a\ta\na\tb\n");
    CHECK(g.degree("a") == 1);
}

TEST_CASE("malformed lines report their line number") {
    try {
        parse("a\tb\nlonely\n");
        FAIL("accepted a one-field line");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("50-edge fixture has the frozen degree sequence") {
    auto g = load_synonym_graph(testsupport::data_dir() / "synonyms_50.tsv");
    std::ifstream in(testsupport::data_dir() / "synonyms_50.degrees.tsv");
    std::string w;
    std::size_t d;
    std::size_t words = 0;
    std::size_t total = 0;
    while (in >> w >> d) {
        CHECK(g.degree(w) == d);
        ++words;
        total += d;
    }
    CHECK(g.word_count() == words);
    CHECK(total == 100);
    CHECK(g.edge_count() == 50);
    for (const auto& [a, nb] : g.adjacency()) {
        for (const auto& b : nb) {
            CHECK(g.neighbors(b)->count(a) == 1);
        }
    }
}

TEST_CASE("writing and reading a synonym graph round-trips") {
    auto g = load_synonym_graph(testsupport::data_dir() / "synonyms_50.tsv");
    std::ostringstream out;
    write_synonym_graph(out, g);
    CHECK(parse(out.str()) == g);
}

TEST_CASE("synonym expansion") {
    auto g = parse("happy\tglad\nhappy\tmerry\nsad\tblue\n");
    auto e = expand_synonym(g, WordList::of({"happy"}));
    CHECK(e.added.strings() == std::vector<std::string>{"glad", "merry"});

    auto seeds_adjacent = expand_synonym(g, WordList::of({"happy", "glad"}));
    CHECK(seeds_adjacent.added.strings() == std::vector<std::string>{"merry"});

    auto off = expand_synonym(g, WordList::of({"zzz", "yyy"}));
    CHECK(off.added.empty());
    CHECK(off.unmatched == WordList::of({"zzz", "yyy"}));
    CHECK(!off.expandable());
}

TEST_CASE("synonym expansion matches brute-force neighbour union") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 30 + rng() % 100;
        auto edges = testsupport::random_edges(n, 0.05, rng);
        SynonymGraph g;
        for (auto [a, b] : edges) {
            g.add_edge(Word::normalize(testsupport::word_name(a)), Word::normalize(testsupport::word_name(b)));
        }
        std::set<std::size_t> seed_ids;
        while (seed_ids.size() < 5) {
            seed_ids.insert(rng() % n);
        }
        WordList seeds;
        for (auto s : seed_ids) {
            seeds.insert(Word::normalize(testsupport::word_name(s)));
        }
        std::set<std::string> expected;
        for (auto [a, b] : edges) {
            if (seed_ids.count(a) && !seed_ids.count(b)) expected.insert(testsupport::word_name(b));
            if (seed_ids.count(b) && !seed_ids.count(a)) expected.insert(testsupport::word_name(a));
        }
        auto got = expand_synonym(g, seeds).added.strings();
        CHECK(std::set<std::string>(got.begin(), got.end()) == expected);
        CHECK(got.size() == expected.size());
    }
}
