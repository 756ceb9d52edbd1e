#include <catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "lexkit.hpp"
#include "support.hpp"

using namespace lexkit;
using Catch::Matchers::WithinAbs;

namespace {

FrequencyRanking ranking_of(std::initializer_list<std::string_view> words) {
    return FrequencyRanking(WordList::of(words));
}

struct ToySpace {
    std::vector<std::vector<double>> vectors;
    EmbeddingSpace space;
};

ToySpace random_space(std::size_t n, std::size_t d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    std::vector<std::vector<double>> vecs;
    std::vector<Word> vocab;
    std::vector<double> flat;
    // A few shared directions make high cosines common.
    std::vector<std::vector<double>> centres(4, std::vector<double>(d));
    for (auto& c : centres) {
        for (auto& x : c) x = gauss(rng);
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> v(d);
        const auto& c = centres[i % centres.size()];
        for (std::size_t k = 0; k < d; ++k) {
            v[k] = c[k] + 0.8 * gauss(rng);
        }
        vocab.push_back(Word::normalize(testsupport::word_name(i)));
        flat.insert(flat.end(), v.begin(), v.end());
        vecs.push_back(std::move(v));
    }
    return {vecs, EmbeddingSpace(vocab, flat, d)};
}

long double cos_ld(const std::vector<double>& a, const std::vector<double>& b) {
    long double ab = 0, aa = 0, bb = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        ab += static_cast<long double>(a[k]) * b[k];
        aa += static_cast<long double>(a[k]) * a[k];
        bb += static_cast<long double>(b[k]) * b[k];
    }
    return ab / std::sqrt(aa * bb);
}

}

TEST_CASE("vector file restricted to ranked words") {
    std::istringstream in("a 1 0\nb 0 1\nc 1 1\nd 2 2\ne 3 1\n");
    auto s = read_embeddings(in, ranking_of({"c", "a", "e", "zz"}));
    CHECK(s.size() == 3);
    CHECK(s.dim() == 2);
    CHECK(s.word(0).str() == "c");
    CHECK(s.word(1).str() == "a");
    CHECK(s.word(2).str() == "e");
}

TEST_CASE("vector file header sets the dimension") {
    std::istringstream in("2 4\nx 1 2 3 4\ny 0.5 -1 1e-3 7\n");
    auto s = read_embeddings(in, ranking_of({"x", "y"}));
    CHECK(s.dim() == 4);
    CHECK(s.size() == 2);
}

TEST_CASE("vector file parses to the reference matrix") {
    const std::string text = "3 3\nAlpha 0.25 -1.5 3\nbeta 1e-2 +2 -0\ngamma 7 8 9.125\n";
    std::istringstream in(text);
    auto s = read_embeddings(in, ranking_of({"alpha", "beta", "gamma"}));
    // Reference parse: stream extraction line by line.
    std::istringstream ref(text);
    std::string line;
    std::getline(ref, line);
    for (std::size_t i = 0; i < 3; ++i) {
        std::getline(ref, line);
        std::istringstream ls(line);
        std::string w;
        ls >> w;
        CHECK(s.word(i).str() == Word::normalize(w).str());
        auto row = s.row(i);
        for (std::size_t k = 0; k < 3; ++k) {
            double v;
            ls >> v;
            CHECK(row[k] == v);
        }
    }
}

TEST_CASE("vector file errors") {
    std::istringstream mismatch("a 1 2\nb 1 2 3\n");
    try {
        read_embeddings(mismatch, ranking_of({"a", "b"}));
        FAIL("dimension mismatch accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    std::istringstream nan("a 1 nan\n");
    CHECK_THROWS_AS(read_embeddings(nan, ranking_of({"a"})), ParseError);
    std::istringstream unranked("a 1 2\n");
    CHECK_THROWS_MATCHES(read_embeddings(unranked, ranking_of({"b"})), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == ErrorCode::NoData; }));
    std::istringstream dup("A 1 2\na 3 4\n");
    auto s = read_embeddings(dup, ranking_of({"a"}));
    CHECK(s.row(0)[0] == 1.0);
}

TEST_CASE("top_n keeps the most frequent words") {
    std::istringstream in("a 1 0\nb 0 1\nc 1 1\n");
    auto s = read_embeddings(in, ranking_of({"b", "c", "a"}), 2);
    CHECK(s.vocabulary() == std::vector<Word>{Word::normalize("b"), Word::normalize("c")});
}

TEST_CASE("cosine") {
    std::vector<double> x{1, 2, 3}, y{4, 5, 6};
    CHECK(cosine(x, x) == 1.0);
    CHECK(cosine(std::vector<double>{1, 0}, std::vector<double>{0, 1}) == 0.0);
    // 32 / sqrt(14 * 77)
    CHECK_THAT(cosine(x, y), WithinAbs(0.97463184619707621, 1e-15));
    CHECK_THROWS_AS(cosine(x, std::vector<double>{1, 2}), Error);
    CHECK_THROWS_MATCHES(cosine(x, std::vector<double>{0, 0, 0}), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::DegenerateVector;
                         }));
}

TEST_CASE("threshold expansion on hand-made spaces") {
    // b sits at cosine 0.6 from a, c at 0.
    EmbeddingSpace s({Word::normalize("a"), Word::normalize("b"), Word::normalize("c")}, {1, 0, 0.6, 0.8, 0, 1}, 2);
    auto e = expand_threshold(s, WordList::of({"a"}), 0.5);
    CHECK(e.added.strings() == std::vector<std::string>{"b"});
    CHECK(expand_threshold(s, WordList::of({"a"}), 1.0).added.empty());
    auto off = expand_threshold(s, WordList::of({"zz"}), 0.5);
    CHECK(!off.expandable());
    CHECK_THROWS_AS(expand_threshold(s, WordList::of({"a"}), 0.0), Error);
    CHECK_THROWS_AS(expand_threshold(s, WordList::of({"a"}), 1.5), Error);
}

TEST_CASE("centroid expansion edge cases") {
    EmbeddingSpace s({Word::normalize("a"), Word::normalize("b"), Word::normalize("c")}, {1, 0, -1, 0, 0.6, 0.8}, 2);
    CHECK_THROWS_MATCHES(expand_centroid(s, WordList::of({"a", "b"})), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::DegenerateVector;
                         }));
    CHECK_THROWS_MATCHES(expand_centroid(s, WordList::of({"zz"})), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::NotExpandable;
                         }));
}

TEST_CASE("centroid of one seed equals threshold on that seed") {
    std::mt19937_64 rng(3);
    auto toy = random_space(60, 8, rng);
    for (std::size_t i = 0; i < 10; ++i) {
        const auto seeds = WordList::of({toy.space.word(i).str()});
        for (double tau : {0.3, 0.5, 0.7}) {
            CHECK(expand_centroid(toy.space, seeds, tau).added == expand_threshold(toy.space, seeds, tau).added);
        }
    }
}

TEST_CASE("20-word space matches the brute-force oracles") {
    std::mt19937_64 rng(17);
    auto toy = random_space(20, 5, rng);
    const std::vector<std::size_t> seed_ids{0, 5, 11};
    WordList seeds;
    for (auto i : seed_ids) seeds.insert(toy.space.word(i));

    std::set<std::string> thr, cen;
    std::vector<double> c(5, 0.0);
    for (auto i : seed_ids) {
        for (std::size_t k = 0; k < 5; ++k) c[k] += toy.vectors[i][k];
    }
    for (std::size_t i = 0; i < 20; ++i) {
        if (std::find(seed_ids.begin(), seed_ids.end(), i) != seed_ids.end()) continue;
        for (auto s : seed_ids) {
            if (cos_ld(toy.vectors[i], toy.vectors[s]) >= 0.5L) thr.insert(toy.space.word(i).str());
        }
        if (cos_ld(toy.vectors[i], c) >= 0.5L) cen.insert(toy.space.word(i).str());
    }
    auto t = expand_threshold(toy.space, seeds, 0.5).added.strings();
    auto m = expand_centroid(toy.space, seeds, 0.5).added.strings();
    CHECK(t == std::vector<std::string>(thr.begin(), thr.end()));
    CHECK(m == std::vector<std::string>(cen.begin(), cen.end()));
    CHECK(!t.empty());
}

TEST_CASE("threshold expansion shrinks as tau grows") {
    std::mt19937_64 rng(23);
    auto toy = random_space(200, 16, rng);
    const auto seeds = WordList::of({toy.space.word(1).str(), toy.space.word(2).str()});
    std::optional<WordList> prev;
    for (double tau : {0.3, 0.5, 0.7, 0.9}) {
        auto w = expand_threshold(toy.space, seeds, tau).added;
        if (prev) {
            CHECK(set_difference(w, *prev).empty());
        }
        prev = w;
    }
}
