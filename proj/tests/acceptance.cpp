// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cli_support.hpp"
#include "lexkit.hpp"

using namespace lexkit;
using namespace testsupport;
using Clock = std::chrono::steady_clock;

namespace {

/// Collects failure notes for one criterion.
struct Check {
    std::vector<std::string> failures;
    std::ostringstream info;

    void expect(bool ok, const std::string& what) {
        if (!ok && failures.size() < 5) {
            failures.push_back(what);
        }
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Metric oracle --------------------------------------------------------------

void metric_oracle(Check& c) {
    std::mt19937_64 rng(1001);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t pool = 5 + rng() % 60;
        std::set<int> orig, seeds, expanded;
        for (std::size_t i = 0; i < pool; ++i) {
            const int w = static_cast<int>(i);
            if (rng() % 3 == 0) orig.insert(w);
            if (rng() % 5 == 0) seeds.insert(w);
            if (rng() % 2 == 0) expanded.insert(w);
        }
        if (orig.empty()) orig.insert(0);
        auto wl = [](const std::set<int>& s) {
            WordList l;
            for (int x : s) l.insert(Word::normalize("w" + std::to_string(x)));
            return l;
        };
        for (bool strict : {false, true}) {
            std::size_t tp = 0, fp = 0, fn = 0;
            for (int x : expanded) {
                if (seeds.count(x)) continue;
                orig.count(x) ? ++tp : ++fp;
            }
            for (int x : orig) {
                const bool in_w = expanded.count(x) && !seeds.count(x);
                if (in_w) continue;
                if (!strict && seeds.count(x)) continue;
                ++fn;
            }
            const double p = tp + fp ? double(tp) / double(tp + fp) : 0.0;
            const double r = tp + fn ? double(tp) / double(tp + fn) : 0.0;
            const double f = p + r > 0 ? 2 * p * r / (p + r) : 0.0;
            auto conf = confusion(wl(orig), wl(seeds), wl(expanded), strict);
            auto m = prf(conf);
            c.expect(conf.tp() == tp && conf.fp() == fp && conf.fn() == fn,
                     "counts differ on trial " + std::to_string(trial));
            c.expect(std::abs(m.precision - p) <= 1e-12 && std::abs(m.recall - r) <= 1e-12 &&
                         std::abs(m.f1 - f) <= 1e-12,
                     "ratios differ on trial " + std::to_string(trial));
        }
    }
    c.info << "200 triples x 2 FN conventions";
}

// Neighbourhood expansion oracle ---------------------------------------------

void graph_oracle(Check& c) {
    std::mt19937_64 rng(2002);
    double elapsed = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 10 + rng() % 191;
        auto edges = random_edges(n, 4.0 / static_cast<double>(n), rng);
        auto colex = colex_from_edges(n, edges);
        SynonymGraph syn;
        for (auto [a, b] : edges) syn.add_edge(Word::normalize(word_name(a)), Word::normalize(word_name(b)));

        std::set<std::size_t> seed_ids;
        const std::size_t k = 1 + rng() % 8;
        while (seed_ids.size() < k) seed_ids.insert(rng() % n);
        WordList seeds;
        for (auto s : seed_ids) seeds.insert(Word::normalize(word_name(s)));
        seeds.insert(Word::normalize("offgraph"));

        std::set<std::string> expected;
        for (auto [a, b] : edges) {
            if (seed_ids.count(a) && !seed_ids.count(b)) expected.insert(word_name(b));
            if (seed_ids.count(b) && !seed_ids.count(a)) expected.insert(word_name(a));
        }
        const auto t0 = Clock::now();
        auto ec = expand_colex(colex, seeds, "en");
        auto es = expand_synonym(syn, seeds);
        elapsed += seconds_since(t0);
        auto as_set = [](const WordList& l) {
            auto v = l.strings();
            return std::set<std::string>(v.begin(), v.end());
        };
        c.expect(as_set(ec.added) == expected && ec.added.size() == expected.size(),
                 "colex differs on graph " + std::to_string(trial));
        c.expect(as_set(es.added) == expected && es.added.size() == expected.size(),
                 "synonym differs on graph " + std::to_string(trial));
        c.expect(ec.unmatched.contains("offgraph"), "off-graph seed not reported");
    }
    c.expect(elapsed < 1.0, "expansion took " + std::to_string(elapsed) + " s");
    c.info << "50 graphs, expansion time " << elapsed << " s";
}

// Embedding oracle -----------------------------------------------------------

long double cos_ld(const std::vector<double>& a, const std::vector<double>& b) {
    long double ab = 0, aa = 0, bb = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        ab += static_cast<long double>(a[k]) * b[k];
        aa += static_cast<long double>(a[k]) * a[k];
        bb += static_cast<long double>(b[k]) * b[k];
    }
    return ab / std::sqrt(aa * bb);
}

void embedding_oracle(Check& c) {
    std::mt19937_64 rng(3003);
    std::normal_distribution<double> gauss;
    std::size_t spaces = 0;
    for (auto [n, d] : std::vector<std::pair<std::size_t, std::size_t>>{{20, 3}, {100, 10}, {300, 25}, {500, 50}}) {
        std::vector<std::vector<double>> centres(5, std::vector<double>(d));
        for (auto& ce : centres) for (auto& x : ce) x = gauss(rng);
        std::vector<std::vector<double>> vecs;
        std::vector<Word> vocab;
        std::vector<double> flat;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> v(d);
            for (std::size_t k = 0; k < d; ++k) v[k] = centres[i % 5][k] + 0.7 * gauss(rng);
            vocab.push_back(Word::normalize(word_name(i)));
            flat.insert(flat.end(), v.begin(), v.end());
            vecs.push_back(v);
        }
        EmbeddingSpace space(vocab, flat, d);
        ++spaces;
        for (int trial = 0; trial < 5; ++trial) {
            std::set<std::size_t> ids;
            while (ids.size() < 1 + static_cast<std::size_t>(trial)) ids.insert(rng() % n);
            WordList seeds;
            for (auto i : ids) seeds.insert(space.word(i));
            std::vector<double> centroid(d, 0.0);
            for (auto i : ids) for (std::size_t k = 0; k < d; ++k) centroid[k] += vecs[i][k];
            std::optional<WordList> prev;
            for (double tau : {0.3, 0.5, 0.7, 0.9}) {
                std::vector<std::string> thr, cen;
                for (std::size_t i = 0; i < n; ++i) {
                    if (ids.count(i)) continue;
                    bool hit = false;
                    for (auto s : ids) hit = hit || cos_ld(vecs[i], vecs[s]) >= tau;
                    if (hit) thr.push_back(space.word(i).str());
                    if (cos_ld(vecs[i], centroid) >= tau) cen.push_back(space.word(i).str());
                }
                std::sort(thr.begin(), thr.end());
                std::sort(cen.begin(), cen.end());
                auto t = expand_threshold(space, seeds, tau).added;
                c.expect(t.strings() == thr, "threshold differs (n=" + std::to_string(n) + ")");
                c.expect(expand_centroid(space, seeds, tau).added.strings() == cen,
                         "centroid differs (n=" + std::to_string(n) + ")");
                if (prev) c.expect(set_difference(t, *prev).empty(), "threshold not monotone in tau");
                prev = t;
            }
        }
    }
    c.info << spaces << " spaces up to 500 x 50, tau in {0.3,0.5,0.7,0.9}";
}

// Colex builder --------------------------------------------------------------

void colex_builder(Check& c) {
    std::vector<BilingualDictionary> ds;
    for (auto name : {"aaa-eng.tsv", "bbb-eng.tsv", "ccc-eng.tsv"}) {
        ds.push_back(load_bilingual_tsv(data_dir() / "colex" / name));
    }
    std::map<std::pair<std::string, std::string>, std::uint32_t> votes;
    std::ifstream in(data_dir() / "colex_votes.tsv");
    std::string a, b;
    std::uint32_t w;
    while (in >> a >> b >> w) votes[{a, b}] = w;
    c.expect(!votes.empty(), "vote fixture missing");

    auto table = [](const ColexGraph& g) {
        std::map<std::pair<std::string, std::string>, std::uint32_t> t;
        for (const auto& e : g.edges()) t[{g.label(e.a), g.label(e.b)}] = e.weight;
        return t;
    };
    auto g1 = build_colex_graph(ds, 1);
    auto g2 = build_colex_graph(ds, 2);
    c.expect(table(g1) == votes, "weights differ from the enumerated votes");
    std::size_t single = 0;
    for (const auto& [p, v] : votes) {
        single += v == 1 ? 1 : 0;
        c.expect((table(g2).count(p) == 0) == (v == 1), "min_languages=2 pruned the wrong edge");
    }
    c.expect(g2.edge_count() == votes.size() - single, "pruned edge count");

    BilingualDictionary en_de{"en", "de", {}};
    for (const auto& l : g2.labels()) {
        en_de.add(Word::normalize(l), Word::normalize("de" + l.substr(0, 3)));
        en_de.add(Word::normalize(l), Word::normalize("x" + l));
    }
    auto t = translate_labels(g2, en_de, "de");
    c.expect(t.edges() == g2.edges(), "translation changed the edge multiset");
    c.info << votes.size() << " voted pairs, " << single << " single-vote edges pruned";
}

// Baseline -------------------------------------------------------------------

void baseline_statistics(Check& c) {
    // 404 words; 4 gold seeds; pool of 400 holds 100 gold words -> 0.25.
    WordList universe("u"), orig("g"), seeds("s");
    for (std::size_t i = 0; i < 404; ++i) {
        auto w = Word::normalize(word_name(i));
        universe.insert(w);
        if (i < 104) orig.insert(w);
        if (i < 4) seeds.insert(w);
    }
    auto b = baseline_null(universe, 20, orig, seeds, 1000, 77);
    const double se = b.stddev.precision / std::sqrt(1000.0);
    c.expect(std::abs(b.mean.precision - 0.25) <= 3 * se, "mean precision outside 3 standard errors");
    auto again = baseline_null(universe, 20, orig, seeds, 1000, 77);
    c.expect(again.mean == b.mean && again.stddev == b.stddev, "not deterministic under a fixed seed");
    c.info << "mean precision " << b.mean.precision << " (se " << se << ")";
}

// Fraction sweep -------------------------------------------------------------

void fraction_sweep_shape(Check& c) {
    std::mt19937_64 rng(6006);
    const std::size_t n = 200, gold_n = 40;
    std::bernoulli_distribution within(0.3), across(0.02);
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool same = (i < gold_n) == (j < gold_n) && (i < gold_n || (i / 40) == (j / 40));
            if (same ? within(rng) : across(rng)) edges.emplace(i, j);
        }
    }
    auto graph = colex_from_edges(n, edges);
    const WordList universe = WordList::from_strings(graph.vocabulary("en"));
    const ExpansionMethod method(
        "colex", [&graph](const WordList& s) { return expand_colex(graph, s, "en"); }, universe);
    WordList gold("cluster");
    for (std::size_t i = 0; i < gold_n; ++i) gold.insert(Word::normalize(word_name(i)));

    ExperimentConfig cfg;
    cfg.method = "colex";
    cfg.repetitions = 50;
    cfg.baseline_repetitions = 1000;
    cfg.rng_seed = 3;
    const auto t0 = Clock::now();
    auto reports = fraction_sweep(gold, method, cfg, default_fractions());
    const double elapsed = seconds_since(t0);
    std::vector<double> gaps;
    for (const auto& r : reports) {
        gaps.push_back(r.summary.mean.f1 - r.summary.baseline_mean.f1);
    }
    for (std::size_t i = 1; i < gaps.size(); ++i) {
        c.expect(gaps[i] <= gaps[i - 1], "gap rises between fractions " + std::to_string(i) + " and " +
                                             std::to_string(i + 1) + "0%");
    }
    c.expect(elapsed < 30.0, "sweep took " + std::to_string(elapsed) + " s");
    c.info << "gaps";
    for (double g : gaps) c.info << ' ' << std::fixed << std::setprecision(3) << g;
    c.info << "; " << std::setprecision(2) << elapsed << " s";
}

// Annotation -----------------------------------------------------------------

void annotation_statistics(Check& c) {
    std::ifstream kin(data_dir() / "kappa_fixtures.json");
    auto fixtures = nlohmann::json::parse(kin);
    c.expect(fixtures.size() == 20, "expected 20 kappa fixtures");
    double worst = 0;
    for (const auto& f : fixtures) {
        std::vector<Label> a, b;
        for (int x : f.at("a")) a.push_back(x ? Label::Relevant : Label::Irrelevant);
        for (int x : f.at("b")) b.push_back(x ? Label::Relevant : Label::Irrelevant);
        worst = std::max(worst, std::abs(cohen_kappa(a, b) - f.at("kappa").get<double>()));
    }
    c.expect(worst <= 1e-12, "kappa deviates by " + std::to_string(worst));

    std::ifstream bin(data_dir() / "bootstrap_7of10.json");
    auto ref = nlohmann::json::parse(bin);
    std::vector<bool> acc(10, false);
    for (int i = 0; i < 7; ++i) acc[i] = true;
    auto p = adjusted_precision(acc, 10000, 0);
    c.expect(p.estimate == 0.7, "estimate is not 0.7");
    c.expect(std::abs(p.ci_low - ref.at("ci_low").get<double>()) <= 0.01, "ci_low off by more than 0.01");
    c.expect(std::abs(p.ci_high - ref.at("ci_high").get<double>()) <= 0.01, "ci_high off by more than 0.01");
    c.info << "max kappa error " << worst << "; CI [" << p.ci_low << ", " << p.ci_high << "] vs ["
           << ref.at("ci_low").get<double>() << ", " << ref.at("ci_high").get<double>() << "]";
}

// Text scoring ---------------------------------------------------------------

double pearson_oracle(const std::vector<double>& x, const std::vector<double>& y) {
    using Big = boost::multiprecision::cpp_dec_float_50;
    Big mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += Big(x[i]);
        my += Big(y[i]);
    }
    mx /= x.size();
    my /= y.size();
    Big sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        Big dx = Big(x[i]) - mx, dy = Big(y[i]) - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    return static_cast<double>(sxy / boost::multiprecision::sqrt(sxx * syy));
}

void text_scoring(Check& c) {
    std::mt19937_64 rng(8008);
    const std::vector<std::string> vocab{"happy", "sad", "glad", "the", "merry", "blue", "tree", "run", "joy", "day"};
    const auto lex = WordList::of({"happy", "glad", "merry", "joy"});
    const auto ref = WordList::of({"happy", "joy", "day"});
    double worst = 0;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Document> docs;
        for (int d = 0; d < 10; ++d) {
            std::string text;
            const std::size_t len = 5 + rng() % 40;
            for (std::size_t i = 0; i < len; ++i) text += vocab[rng() % vocab.size()] + " ";
            docs.push_back(Document::make("doc" + std::to_string(d), text));
        }
        auto a = score_corpus(docs, lex);
        auto b = score_corpus(docs, ref);
        std::vector<double> x, y;
        for (auto& [_, v] : a) x.push_back(v);
        for (auto& [_, v] : b) y.push_back(v);
        try {
            const double r = correlate(a, b, 0).r;
            worst = std::max(worst, std::abs(r - pearson_oracle(x, y)));
            c.expect(correlate(a, a, 0).r == 1.0, "identical series do not give 1.0");
        } catch (const Error& e) {
            c.expect(false, std::string("unexpected: ") + e.what());
        }

        // Invariances of the document score.
        for (const auto& d : docs) {
            const double s = doc_score(d, lex);
            c.expect(s >= 0.0 && s <= 1.0, "score outside [0,1]");
            std::string upper = d.text;
            for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
            c.expect(doc_score(Document::make(d.id, upper + " ... !!"), lex) == s, "case/punctuation changed score");
            auto twice = Document::make(d.id, d.text + " " + d.text);
            c.expect(std::abs(doc_score(twice, lex) - s) <= 1e-15, "repetition changed relative score");
            c.expect(doc_score(twice, lex, ScoreMode::RawCount) == 2 * doc_score(d, lex, ScoreMode::RawCount),
                     "raw counts not additive");
        }
    }
    c.expect(worst <= 1e-12, "pearson deviates by " + std::to_string(worst));
    c.info << "20 ten-document fixtures, max |r - oracle| " << worst;
}

// CLI reproducibility ---------------------------------------------------------

void cli_reproducibility(Check& c) {
    TempDir dir;
    write_text(dir / "seeds.txt", "arm\nhand\n");
    write_text(dir / "gold.txt", "arm\nhand\npoor\nwood\ndrug\nfinger\ntree\nlimb\nmedicine\npoison\n");
    write_text(dir / "corpus.jsonl",
               "{\"id\":\"a\",\"text\":\"arm and hand\"}\n{\"id\":\"b\",\"text\":\"poor tree wood\"}\n"
               "{\"id\":\"c\",\"text\":\"drug poison medicine\"}\n{\"id\":\"d\",\"text\":\"finger limb arm arm\"}\n");
    std::string lex;
    for (std::size_t i = 0; i < 2500; ++i) lex += word_name(i) + "\n";
    write_text(dir / "big.txt", lex);
    write_text(dir / "ann.csv", "word,rater,label\na,x,1\na,y,1\nb,x,1\nb,y,0\nc,x,0\nc,y,1\nd,x,1\nd,y,1\n");

    std::size_t commands = 0;
    for (int run = 0; run < 2; ++run) {
        const std::string r = "run" + std::to_string(run);
        const auto out = [&](const std::string& f) { return (dir / r / f).string(); };
        std::filesystem::create_directories(dir / r);
        const std::vector<std::pair<std::vector<std::string>, std::string>> calls{
            {{"build-graph", "--dict", (data_dir() / "colex").string(), "--min-languages", "1", "--out", out("graph")}, ""},
            {{"expand", "--graph", out("graph"), "--seeds", (dir / "seeds.txt").string(), "--out", out("exp.txt")}, ""},
            {{"eval", "--graph", out("graph"), "--gold", (dir / "gold.txt").string(), "--sweep", "--reps", "10",
              "--baseline-reps", "100", "--seed", "5", "--out-json", out("eval.json"), "--out-csv", out("eval.csv")},
             ""},
            {{"score", "--corpus", (dir / "corpus.jsonl").string(), "--lexicon", out("exp.txt"), "--reference",
              (dir / "gold.txt").string(), "--seed", "5", "--out-csv", out("score.csv"), "--out-json",
              out("score.json")},
             ""},
            {{"sample", "--lexicon", (dir / "big.txt").string(), "--seed", "5"}, "sample.txt"},
            {{"precision", "--annotations", (dir / "ann.csv").string(), "--seed", "5"}, "precision.json"},
        };
        for (const auto& [args, stdout_file] : calls) {
            auto res = run_cli(args, dir.path(), stdout_file.empty() ? std::filesystem::path() : dir / r / stdout_file);
            c.expect(res.code == 0, args.front() + " exited " + std::to_string(res.code) + ": " + res.err);
            commands += run == 0 ? 1 : 0;
        }
    }
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(dir / "run0")) {
        if (!entry.is_regular_file()) continue;
        const auto rel = std::filesystem::relative(entry.path(), dir / "run0");
        c.expect(read_text(entry.path()) == read_text(dir / "run1" / rel), rel.string() + " differs between runs");
        ++files;
    }
    c.expect(files == 11, "unexpected output file count: " + std::to_string(files));
    c.info << commands << " commands, " << files << " output files compared";
}

// Precision lower bound -------------------------------------------------------

void precision_lower_bound(Check& c) {
    std::mt19937_64 rng(9009);
    for (int trial = 0; trial < 100; ++trial) {
        WordList gold("g"), seeds("s"), expanded("e");
        for (std::size_t i = 0; i < 60; ++i) {
            auto w = Word::normalize(word_name(i));
            if (rng() % 3 == 0) gold.insert(w);
            if (rng() % 2 == 0) expanded.insert(w);
        }
        if (gold.empty() || expanded.size() < 3) continue;
        seeds.insert(gold[0]);
        expanded.insert(gold[0]);
        const auto conf = confusion(gold, seeds, expanded);
        const auto harness = prf(conf).precision;
        const WordList added = set_difference(expanded, seeds);
        if (added.empty()) continue;

        // Both raters accept every gold word and, now and then, others too.
        AnnotationSet ann;
        for (const auto& w : added) {
            const bool in_gold = gold.contains(w.str());
            for (auto rater : {"r1", "r2"}) {
                const bool yes = in_gold || rng() % 4 == 0;
                ann.add(w, rater, yes ? Label::Relevant : Label::Irrelevant);
            }
        }
        auto est = adjusted_precision(ann, 200, static_cast<std::uint64_t>(trial));
        c.expect(est.estimate >= harness, "adjusted " + std::to_string(est.estimate) + " < harness " +
                                              std::to_string(harness) + " on trial " + std::to_string(trial));
    }
    c.info << "100 random superset annotations";
}

}

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"metric oracle: confusion/prf vs set arithmetic on 200 triples", metric_oracle},
        {"neighbourhood expansion vs brute force on 50 graphs, < 1 s", graph_oracle},
        {"embedding expansion vs brute-force cosine scans, tau monotonicity", embedding_oracle},
        {"colex builder: vote weights, pruning, label translation", colex_builder},
        {"baseline: hypergeometric 0.25 within 3 SE, deterministic", baseline_statistics},
        {"fraction sweep: non-increasing gap to baseline, < 30 s", fraction_sweep_shape},
        {"annotation: kappa to 1e-12, bootstrap CI within 0.01", annotation_statistics},
        {"text scoring: correlation oracle and score invariances", text_scoring},
        {"CLI outputs byte-identical across runs", cli_reproducibility},
        {"adjusted precision >= harness precision for superset annotations", precision_lower_bound},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Check c;
        try {
            fn(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = c.failures.empty();
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "  [" << c.info.str() << "]\n";
        for (const auto& f : c.failures) {
            std::cout << "      " << f << '\n';
        }
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " acceptance criteria passed\n";
    return failed == 0 ? 0 : 1;
}
