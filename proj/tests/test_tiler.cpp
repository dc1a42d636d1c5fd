#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "hatlab/tiler.hpp"

using namespace hatlab;

namespace {

TilerConfig config(unsigned coronas, Chirality seed = Chirality::Reflected) {
    TilerConfig cfg;
    cfg.max_coronas = coronas;
    cfg.seed_chirality = seed;
    return cfg;
}

const Patch& three_coronas() {
    static const Patch p = grow_patch(config(3));
    return p;
}

std::set<KiteCoord> covered_kites(const Patch& p, unsigned up_to_corona) {
    std::set<KiteCoord> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.corona_of[i] > up_to_corona) continue;
        for (const KiteCoord& k : hat_kites(p.placements[i])) out.insert(k);
    }
    return out;
}

// Uncovered kites sharing an edge with `region`.
std::set<KiteCoord> rim(const std::set<KiteCoord>& region) {
    std::set<KiteCoord> out;
    for (const KiteCoord& k : region)
        for (const KiteCoord& n : kite_neighbors(k))
            if (!region.count(n)) out.insert(n);
    return out;
}

}  // namespace

TEST(Tiler, SeedPatch) {
    const Patch reflected = seed_patch(config(0));
    ASSERT_EQ(reflected.size(), 1u);
    EXPECT_EQ(reflected.placements[0].chirality(), Chirality::Reflected);
    EXPECT_EQ(reflected.corona_of[reflected.center], 0u);
    EXPECT_EQ(patch_census(reflected), (std::vector<CoronaCensus>{{0, 1, 0, 1}}));

    const Patch normal = seed_patch(config(0, Chirality::Normal));
    EXPECT_EQ(patch_census(normal), (std::vector<CoronaCensus>{{0, 1, 1, 0}}));
    EXPECT_TRUE(validate_patch(normal).ok());
}

TEST(Tiler, ZeroCoronasIsSeed) { EXPECT_EQ(grow_patch(config(0)), seed_patch(config(0))); }

TEST(Tiler, FirstCoronaCoversRim) {
    const Patch seed = seed_patch(config(1));
    const Patch one = grow_corona(seed, config(1));
    const auto before = covered_kites(seed, 0);
    const auto after = covered_kites(one, 1);
    for (const KiteCoord& k : rim(before)) EXPECT_TRUE(after.count(k)) << to_string(k);
    EXPECT_TRUE(validate_patch(one).ok());
    // Regression constant from the first verified run.
    EXPECT_EQ(one.size() - 1, 4u);
}

TEST(Tiler, GrowCoronaOnlyAdds) {
    const TilerConfig cfg = config(2);
    const Patch one = grow_corona(seed_patch(cfg), cfg);
    const Patch two = grow_corona(one, cfg);
    ASSERT_GT(two.size(), one.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        EXPECT_EQ(two.placements[i], one.placements[i]);
        EXPECT_EQ(two.corona_of[i], one.corona_of[i]);
    }
    for (std::size_t i = one.size(); i < two.size(); ++i) EXPECT_EQ(two.corona_of[i], 2u);
}

TEST(Tiler, ThreeCoronasValid) {
    const Patch& p = three_coronas();
    const ValidationReport report = validate_patch(p);
    for (const Violation& v : report.violations) ADD_FAILURE() << to_string(v.kind) << ": " << v.detail;
    EXPECT_EQ(p.max_corona(), 3u);
}

TEST(Tiler, ThreeCoronasCoverEachRim) {
    // Independent of the search: every corona covers the whole rim of the
    // region inside it, and each of its hats touches that rim.
    const Patch& p = three_coronas();
    for (unsigned c = 1; c <= 3; ++c) {
        const auto inner = covered_kites(p, c - 1);
        const auto outer = covered_kites(p, c);
        const auto ring = rim(inner);
        for (const KiteCoord& k : ring) EXPECT_TRUE(outer.count(k)) << "corona " << c << " misses " << to_string(k);
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p.corona_of[i] != c) continue;
            const auto kites = hat_kites(p.placements[i]);
            EXPECT_TRUE(std::any_of(kites.begin(), kites.end(), [&](const KiteCoord& k) { return ring.count(k) > 0; }))
                << "hat " << i;
        }
    }
}

TEST(Tiler, ThreeCoronasNoOverlap) {
    const Patch& p = three_coronas();
    std::set<KiteCoord> seen;
    for (const Placement& pl : p.placements)
        for (const KiteCoord& k : hat_kites(pl)) EXPECT_TRUE(seen.insert(k).second);
    EXPECT_EQ(seen.size(), 8 * p.size());
}

TEST(Tiler, Deterministic) {
    EXPECT_EQ(grow_patch(config(3)), three_coronas());
    EXPECT_EQ(grow_patch(config(2, Chirality::Normal)), grow_patch(config(2, Chirality::Normal)));
}

TEST(Tiler, ThreeCoronaCensusRegression) {
    // Recorded after the first run that passed validate_patch.
    const std::vector<CoronaCensus> expected{{0, 1, 0, 1}, {1, 4, 4, 0}, {2, 10, 9, 1}, {3, 16, 13, 3}};
    EXPECT_EQ(patch_census(three_coronas()), expected);
}

TEST(Tiler, CensusSumsToPlacements) {
    std::size_t total = 0;
    for (const CoronaCensus& c : patch_census(three_coronas())) {
        EXPECT_EQ(c.normal + c.reflected, c.total);
        total += c.total;
    }
    EXPECT_EQ(total, three_coronas().size());
}

TEST(Tiler, NormalSeedAlsoGrows) {
    const Patch p = grow_patch(config(3, Chirality::Normal));
    EXPECT_TRUE(validate_patch(p).ok());
    EXPECT_EQ(p.placements[p.center].chirality(), Chirality::Normal);
}

TEST(Tiler, ZeroHorizonReportsHorizon) {
    TilerConfig cfg = config(1);
    cfg.search_horizon = 0;
    try {
        grow_patch(cfg);
        FAIL() << "expected SearchError";
    } catch (const SearchError& e) {
        EXPECT_EQ(e.kind(), SearchError::Kind::HorizonExceeded);
        EXPECT_EQ(e.partial().size(), 1u);
    }
}

TEST(Tiler, NodeBudgetExhausts) {
    TilerConfig cfg = config(3);
    cfg.node_budget = 5;
    try {
        grow_patch(cfg);
        FAIL() << "expected SearchError";
    } catch (const SearchError& e) {
        EXPECT_EQ(e.kind(), SearchError::Kind::SearchExhausted);
        EXPECT_GT(e.nodes(), 5u);
    }
}

TEST(Validate, EmptyPatch) {
    const ValidationReport r = validate_patch(Patch{});
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.violations[0].kind, Violation::Kind::Empty);
}

namespace {

bool has(const ValidationReport& r, Violation::Kind kind) {
    return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

}  // namespace

TEST(Validate, InjectedOverlap) {
    Patch p = three_coronas();
    p.placements.push_back(p.placements[3]);
    p.corona_of.push_back(3);
    EXPECT_TRUE(has(validate_patch(p), Violation::Kind::DoubleOwned));
}

TEST(Validate, RemovedInnerHatLeavesGap) {
    Patch p = three_coronas();
    // Any corona-1 hat is surrounded once coronas 2 and 3 are present.
    const auto it = std::find(p.corona_of.begin(), p.corona_of.end(), 1u);
    const std::size_t i = static_cast<std::size_t>(it - p.corona_of.begin());
    p.placements.erase(p.placements.begin() + static_cast<long>(i));
    p.corona_of.erase(p.corona_of.begin() + static_cast<long>(i));
    EXPECT_TRUE(has(validate_patch(p), Violation::Kind::Gap));
}

TEST(Validate, DetachedHat) {
    Patch p = seed_patch(config(0));
    p.placements.push_back(Placement{Isometry(false, 0, {10, 10})});
    p.corona_of.push_back(1);
    const ValidationReport r = validate_patch(p);
    EXPECT_TRUE(has(r, Violation::Kind::Disconnected));
    EXPECT_TRUE(has(r, Violation::Kind::CoronaIndex));
}

TEST(Validate, CoronaSkip) {
    Patch p = three_coronas();
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.corona_of[i] == 3) p.corona_of[i] = 5;
    EXPECT_TRUE(has(validate_patch(p), Violation::Kind::CoronaIndex));
}

TEST(Generators, Names) {
    BacktrackingGenerator b;
    FixedPatchGenerator f(three_coronas());
    EXPECT_EQ(b.name(), "backtracking");
    EXPECT_EQ(f.name(), "import");
    EXPECT_EQ(f.generate(config(3)), three_coronas());
    EXPECT_EQ(b.generate(config(1)), grow_patch(config(1)));
}
