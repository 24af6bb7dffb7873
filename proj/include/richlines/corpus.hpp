#pragma once

/// The standard experiment corpus: arithmetic and geometric progressions,
/// seeded random sets, union sets, a few measures and one random
/// point/line configuration. Deterministic in the seed, so two corpus runs
/// produce identical directory trees.

#include <json.hpp>

#include <filesystem>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "richlines/io.hpp"
#include "richlines/measure.hpp"
#include "richlines/number_set.hpp"

namespace richlines {

inline std::vector<std::pair<std::string, NumberSet>> corpus_sets(std::uint64_t seed) {
    std::vector<std::pair<std::string, NumberSet>> sets;
    sets.emplace_back("sets/ap_10.txt", make_ap(10, Scalar(0), Scalar(1)));
    sets.emplace_back("sets/ap_12.txt", make_ap(12, Scalar(0), Scalar(1)));
    sets.emplace_back("sets/ap_20.txt", make_ap(20, Scalar(0), Scalar(1)));
    sets.emplace_back("sets/ap_4_from1.txt", make_ap(4, Scalar(1), Scalar(1)));
    sets.emplace_back("sets/ap_8_from1.txt", make_ap(8, Scalar(1), Scalar(1)));
    sets.emplace_back("sets/ap_16_from1.txt", make_ap(16, Scalar(1), Scalar(1)));
    sets.emplace_back("sets/ap_32_from1.txt", make_ap(32, Scalar(1), Scalar(1)));
    sets.emplace_back("sets/ap_9_halves.txt", make_ap(9, Scalar(0), Scalar(1, 2)));
    sets.emplace_back("sets/gp_8_r2.txt", make_gp(8, Scalar(1), Scalar(2)));
    sets.emplace_back("sets/gp_6_r3.txt", make_gp(6, Scalar(1), Scalar(3)));
    sets.emplace_back("sets/gp_7_r_half.txt", make_gp(7, Scalar(64), Scalar(1, 2)));
    sets.emplace_back("sets/rand_8.txt", make_random(8, seed + 1, 40));
    sets.emplace_back("sets/rand_10.txt", make_random(10, seed + 2, 60));
    sets.emplace_back("sets/rand_12.txt", make_random(12, seed + 3, 80));
    sets.emplace_back("sets/union_ap_gp_11.txt",
                      unite(make_ap(6, Scalar(0), Scalar(3)), make_gp(6, Scalar(1), Scalar(2))));
    sets.emplace_back("sets/union_ap_rand.txt",
                      unite(make_ap(8, Scalar(0), Scalar(1)), make_random(6, seed + 4, 50)));
    return sets;
}

inline std::vector<std::pair<std::string, Measure>> corpus_measures() {
    std::vector<std::pair<std::string, Measure>> measures;
    measures.emplace_back("measures/uniform_3.txt",
                          Measure::uniform(make_ap(3, Scalar(1), Scalar(1))));
    measures.emplace_back("measures/uniform_ap_4.txt",
                          Measure::uniform(make_ap(4, Scalar(1), Scalar(1))));
    measures.emplace_back("measures/uniform_gp_4.txt",
                          Measure::uniform(make_gp(4, Scalar(2), Scalar(2))));
    measures.emplace_back(
        "measures/skew_3.txt",
        Measure::from_entries({{Scalar(1), Scalar(1, 2)}, {Scalar(2), Scalar(1, 4)},
                               {Scalar(3), Scalar(1, 4)}}));
    measures.emplace_back("measures/uniform_6.txt",
                          Measure::uniform(make_ap(6, Scalar(1), Scalar(1))));
    return measures;
}

/// Random points and random lines over a small integer range; structure-free
/// by design, to contrast with the grid configurations.
inline Configuration corpus_random_configuration(std::uint64_t seed, std::size_t n_points,
                                                 std::size_t n_lines) {
    std::mt19937_64 rng(seed);
    auto coord = [&rng]() {
        return Scalar(static_cast<long>(detail::uniform_below(rng, 201)) - 100);
    };
    Configuration cfg;
    while (cfg.points.size() < n_points) {
        Point p{coord(), coord()};
        if (std::find(cfg.points.begin(), cfg.points.end(), p) == cfg.points.end())
            cfg.points.push_back(std::move(p));
    }
    while (cfg.lines.size() < n_lines) {
        Scalar a = coord(), b = coord(), c = coord();
        if (a.is_zero() && b.is_zero()) continue;
        GeneralLine l(a, b, c);
        if (std::find(cfg.lines.begin(), cfg.lines.end(), l) == cfg.lines.end())
            cfg.lines.push_back(std::move(l));
    }
    return cfg;
}

struct CorpusFile {
    std::string relative_path;
    std::string content;
};

inline std::vector<CorpusFile> corpus_files(std::uint64_t seed) {
    std::vector<CorpusFile> files;
    auto render = [](auto save, const auto& value) {
        std::ostringstream out;
        save(out, value);
        return out.str();
    };
    for (const auto& [path, set] : corpus_sets(seed))
        files.push_back({path, render([](std::ostream& o, const NumberSet& s) { save_number_set(o, s); }, set)});
    for (const auto& [path, measure] : corpus_measures())
        files.push_back({path, render([](std::ostream& o, const Measure& m) { save_measure(o, m); }, measure)});
    files.push_back({"configs/random_300_200.txt",
                     render([](std::ostream& o, const Configuration& c) { save_configuration(o, c); },
                            corpus_random_configuration(seed + 5, 300, 200))});

    nlohmann::ordered_json manifest{{"schema", "corpus/1"}, {"seed", seed}};
    nlohmann::ordered_json names = nlohmann::ordered_json::array();
    for (const CorpusFile& f : files) names.push_back(f.relative_path);
    manifest["files"] = std::move(names);
    files.push_back({"manifest.json", manifest.dump(2) + "\n"});
    return files;
}

inline void write_corpus(const std::filesystem::path& dir, std::uint64_t seed) {
    for (const CorpusFile& f : corpus_files(seed)) write_file_atomic(dir / f.relative_path, f.content);
}

}  // namespace richlines
