#pragma once

// The standard regression corpus: generated symmetric, dihedral and abelian
// tables, seeded random direct products, and ingested fixture tables.

#include <algorithm>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "chartable.hpp"
#include "table_io.hpp"

namespace charzero {

struct CorpusEntry {
    std::string stem; // file name without extension
    CharacterTable table;
};

inline std::string zero_padded(int v, int width) {
    std::string s = std::to_string(v);
    return std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(s.size()))), '0') + s;
}

/// Sorted *.json files of a directory.
inline std::vector<std::filesystem::path> json_files(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    return files;
}

inline std::vector<CorpusEntry> fixture_entries(const std::filesystem::path& dir) {
    std::vector<CorpusEntry> out;
    for (const auto& f : json_files(dir)) out.push_back({"fixture_" + f.stem().string(), load_table(f, true)});
    return out;
}

inline constexpr std::uint32_t kProductSeed = 20240417;

/// `count` products of two tables drawn from a fixed pool, reproducible from `seed`.
inline std::vector<CorpusEntry> random_products(const std::vector<CharacterTable>& pool, int count,
                                                std::uint32_t seed = kProductSeed) {
    std::mt19937 rng(seed);
    std::vector<CorpusEntry> out;
    for (int i = 0; i < count; ++i) {
        const auto& a = pool[rng() % pool.size()];
        const auto& b = pool[rng() % pool.size()];
        out.push_back({"product_" + zero_padded(i, 2), direct_product(a, b)});
    }
    return out;
}

inline std::vector<CharacterTable> product_pool(const std::vector<CorpusEntry>& fixtures) {
    std::vector<CharacterTable> pool{build_symmetric(3), build_symmetric(4), build_symmetric(5), build_dihedral(4),
                                     build_dihedral(5),  build_dihedral(6),  build_dihedral(8),  build_cyclic(2),
                                     build_cyclic(3),    build_abelian({2, 2})};
    for (const auto& f : fixtures)
        if (f.table.order <= 168) pool.push_back(f.table);
    return pool;
}

/// S_n (n <= 10), D_2m (3 <= m <= 64), a handful of abelian groups, 20 random
/// products and, when a fixture directory is given, the ingested fixtures.
inline std::vector<CorpusEntry> standard_corpus(const std::filesystem::path& fixture_dir = {}) {
    std::vector<CorpusEntry> out;
    for (int n = 1; n <= 10; ++n) out.push_back({"sym_" + zero_padded(n, 2), build_symmetric(n)});
    for (int m = 3; m <= 64; ++m) out.push_back({"dihedral_" + zero_padded(m, 3), build_dihedral(m)});
    const std::vector<std::vector<int>> abelian{{}, {2}, {3}, {4}, {5}, {6}, {8}, {2, 2}, {2, 4}, {3, 3}, {2, 2, 2}};
    for (std::size_t i = 0; i < abelian.size(); ++i)
        out.push_back({"abelian_" + zero_padded(static_cast<int>(i), 2), build_abelian(abelian[i])});
    std::vector<CorpusEntry> fixtures;
    if (!fixture_dir.empty()) fixtures = fixture_entries(fixture_dir);
    for (auto& p : random_products(product_pool(fixtures), 20)) out.push_back(std::move(p));
    for (auto& f : fixtures) out.push_back(std::move(f));
    return out;
}

inline void write_corpus(const std::vector<CorpusEntry>& corpus, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& e : corpus) save_table(e.table, dir / (e.stem + ".json"));
}

} // namespace charzero
