#ifndef LEXKIT_TEST_SUPPORT_HPP
#define LEXKIT_TEST_SUPPORT_HPP

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "lexkit.hpp"

namespace testsupport {

inline std::filesystem::path data_dir() {
    return LEXKIT_TEST_DATA;
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::atomic<int> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("lexkit-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline void write_text(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << text;
}

inline std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string word_name(std::size_t i) {
    static const char* letters = "abcdefghijklmnopqrstuvwxyz";
    std::string s;
    do {
        s.push_back(letters[i % 26]);
        i /= 26;
    } while (i != 0);
    return "w" + s;
}

/// Random simple undirected graph as an edge list over node indices.
inline std::set<std::pair<std::size_t, std::size_t>> random_edges(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (coin(rng)) {
                edges.emplace(i, j);
            }
        }
    }
    return edges;
}

inline lexkit::ColexGraph colex_from_edges(std::size_t n, const std::set<std::pair<std::size_t, std::size_t>>& edges) {
    // Node ids follow label order, so map each index to the rank of its name.
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(word_name(i));
    }
    std::sort(labels.begin(), labels.end());
    auto id = [&](std::size_t i) {
        return static_cast<lexkit::NodeId>(std::lower_bound(labels.begin(), labels.end(), word_name(i)) - labels.begin());
    };
    std::vector<lexkit::Edge> es;
    for (auto [a, b] : edges) {
        es.push_back({id(a), id(b), 2});
    }
    return lexkit::ColexGraph::from_edges(labels, es);
}

}

#endif
