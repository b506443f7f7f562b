#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace charzero;

namespace {

std::vector<std::size_t> classes_of(const CharacterTable& t, const std::vector<Partition>& labels) {
    std::vector<std::size_t> out;
    for (const auto& mu : labels) out.push_back(*class_with_label(t, mu));
    return out;
}

bool covers(const std::vector<std::vector<bool>>& rows, const std::vector<std::size_t>& cols) {
    for (const auto& r : rows)
        if (std::none_of(cols.begin(), cols.end(), [&](std::size_t c) { return r[c]; })) return false;
    return true;
}

} // namespace

TEST(MinCover, Examples) {
    const auto ab = build_abelian({2, 4});
    const auto r0 = min_cover(zero_pattern(ab));
    EXPECT_EQ(r0.k_min, 0u);
    EXPECT_TRUE(r0.witness.empty());

    const auto s3 = build_symmetric(3);
    const auto r1 = min_cover(zero_pattern(s3));
    EXPECT_EQ(r1.k_min, 1u);
    EXPECT_EQ(r1.witness, classes_of(s3, {Partition{2, 1}}));

    for (int n = 5; n <= 10; ++n) EXPECT_LE(min_cover(zero_pattern(build_symmetric(n))).k_min, 2u) << n;
}

TEST(MinCover, NoCoverWhenARowHasNoZero) {
    auto p = zero_pattern(build_symmetric(4));
    std::fill(p.zeros[0].begin(), p.zeros[0].end(), false);
    EXPECT_THROW(min_cover(p), NoCoverError);
}

TEST(MinCover, WitnessIsValidAndOptimal) {
    for (const auto& e : oracle::corpus()) {
        const auto p = zero_pattern(e.table);
        const auto r = min_cover(p);
        EXPECT_EQ(r.witness.size(), r.k_min);
        EXPECT_TRUE(std::is_sorted(r.witness.begin(), r.witness.end()));
        EXPECT_TRUE(check_cover(p, r.witness).ok) << e.stem;
        EXPECT_LE(r.proof_lb, r.k_min);
        if (p.cols() <= 14) {
            EXPECT_EQ(r.k_min, oracle::brute_min_hitting_set(p.zeros)) << e.stem;
        }
    }
}

TEST(MinHittingSet, RandomMatricesMatchBruteForce) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> rows(1, 12), cols(1, 14);
    std::uniform_real_distribution<double> density(0.05, 0.5);
    for (int trial = 0; trial < 300; ++trial) {
        const auto m = oracle::random_matrix(rng, rows(rng), cols(rng), density(rng));
        const auto r = min_hitting_set(m);
        EXPECT_EQ(r.k_min, oracle::brute_min_hitting_set(m)) << "trial " << trial;
        EXPECT_TRUE(covers(m, r.witness));
    }
}

TEST(MinHittingSet, DeterministicWitness) {
    std::mt19937 rng(99);
    const auto m = oracle::random_matrix(rng, 10, 14, 0.2);
    EXPECT_EQ(min_hitting_set(m).witness, min_hitting_set(m).witness);
}

TEST(CheckCover, LongCyclesCoverSymmetricGroups) {
    for (int n = 2; n <= 12; ++n) {
        const auto t = build_symmetric(n);
        const auto cls = classes_of(t, symmetric_witness_sets(n).front());
        EXPECT_TRUE(check_cover(zero_pattern(t), cls).ok) << n;
    }
}

TEST(CheckCover, ExplicitTriples) {
    for (int n : {8, 10, 12}) {
        const auto t = build_symmetric(n);
        EXPECT_TRUE(check_cover(zero_pattern(t), classes_of(t, {Partition{n - 1, 1}, Partition{n - 3, 3}, Partition{n - 4, 2, 1, 1}})).ok);
    }
    for (int n : {9, 11, 13}) {
        const auto t = build_symmetric(n);
        EXPECT_TRUE(check_cover(zero_pattern(t), classes_of(t, {Partition{n}, Partition{n - 4, 2, 2}, Partition{n - 5, 4, 1}})).ok);
    }
}

TEST(CheckCover, ReportsUncoveredCharacters) {
    const auto t = build_symmetric(5);
    const auto r = check_cover(zero_pattern(t), classes_of(t, {Partition{5}}));
    EXPECT_FALSE(r.ok);
    EXPECT_FALSE(r.violations.empty());
}

TEST(PairCoverProduct, Examples) {
    const auto ab = build_abelian({2});
    EXPECT_TRUE(pair_cover_product({}, {}, ab, ab).empty());

    const auto s3 = build_symmetric(3);
    const auto s3s3 = direct_product(s3, s3);
    const auto tr = classes_of(s3, {Partition{2, 1}});
    const auto c1 = pair_cover_product(tr, tr, s3, s3);
    EXPECT_EQ(c1.size(), 1u);
    EXPECT_TRUE(check_cover(zero_pattern(s3s3), c1).ok);

    const auto s5 = build_symmetric(5), d8 = build_dihedral(4);
    const auto c2 = pair_cover_product(min_cover(zero_pattern(s5)).witness, min_cover(zero_pattern(d8)).witness, s5, d8);
    EXPECT_EQ(c2.size(), 2u);
    EXPECT_TRUE(check_cover(zero_pattern(direct_product(s5, d8)), c2).ok);

    EXPECT_THROW(pair_cover_product({}, {}, s3, s3), std::invalid_argument);
}

TEST(PairCoverProduct, AbelianFactorUsesIdentity) {
    const auto s4 = build_symmetric(4), c3 = build_cyclic(3);
    const auto cover = pair_cover_product(min_cover(zero_pattern(s4)).witness, {}, s4, c3);
    EXPECT_TRUE(check_cover(zero_pattern(direct_product(s4, c3)), cover).ok);
}

TEST(Report, FlagsAndFormats) {
    std::vector<CharacterTable> corpus;
    for (int m = 3; m <= 64; ++m) corpus.push_back(build_dihedral(m));
    for (const auto& row : conjecture_report(corpus)) {
        EXPECT_TRUE(row.flags.empty()) << row.group;
        EXPECT_LE(row.k_min, 2u) << row.group;
    }
    std::vector<CharacterTable> sym;
    for (int n = 1; n <= 10; ++n) sym.push_back(build_symmetric(n));
    for (const auto& row : conjecture_report(sym)) EXPECT_TRUE(row.flags.empty()) << row.group;

    std::vector<CharacterTable> fixtures;
    for (const auto& f : json_files(CHARZERO_FIXTURE_DIR)) fixtures.push_back(load_table(f, true));
    for (const auto& row : conjecture_report(fixtures)) {
        EXPECT_TRUE(row.flags.empty()) << row.group;
        EXPECT_LE(row.k_min, 3u);
    }

    const auto csv = report_csv(conjecture_report({build_symmetric(3)}));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "group,order,#classes,#nonlinear,k_min,witness_names,flags");
    const auto j = report_json(conjecture_report({build_symmetric(3)}));
    EXPECT_EQ(j.at(0).at("k_min"), 1);
}

TEST(Report, FlagsBadMetadata) {
    auto t = build_symmetric(4);
    t.metadata.r_value = 1;
    const auto row = conjecture_row(t);
    EXPECT_NE(std::find(row.flags.begin(), row.flags.end(), std::string(flag::kExceedsRValue)), row.flags.end());
}
