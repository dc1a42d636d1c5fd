#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "hatlab/geometry.hpp"

using namespace hatlab;

namespace {

Isometry random_isometry(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coin(0, 1), rot(0, 5), shift(-7, 7);
    return Isometry(coin(rng) == 1, rot(rng), {shift(rng), shift(rng)});
}

KiteCoord random_kite(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> v(0, 5), shift(-5, 5);
    return {shift(rng), shift(rng), v(rng)};
}

std::set<KiteCoord> as_set(std::span<const KiteCoord> kites) { return {kites.begin(), kites.end()}; }

Sqrt3Number dot(const ExactPoint& u, const ExactPoint& v) { return u.x * v.x + u.y * v.y; }
ExactPoint minus(const ExactPoint& a, const ExactPoint& b) { return {a.x - b.x, a.y - b.y}; }

// Turn sequence of a closed polygon as (squared side length, cross sign) pairs.
std::vector<std::pair<std::int64_t, int>> signature(const std::vector<LatticePoint>& poly) {
    std::vector<std::pair<std::int64_t, int>> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const LatticePoint in = poly[i] - poly[(i + n - 1) % n];
        const LatticePoint side = poly[(i + 1) % n] - poly[i];
        const std::int64_t len2 = side.a * side.a + side.a * side.b + side.b * side.b;
        const std::int64_t c = cross(in, side);
        out.emplace_back(len2, (c > 0) - (c < 0));
    }
    return out;
}

bool cyclically_equal(std::vector<std::pair<std::int64_t, int>> a, const std::vector<std::pair<std::int64_t, int>>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a == b) return true;
        std::rotate(a.begin(), a.begin() + 1, a.end());
    }
    return false;
}

}  // namespace

TEST(Kite, SixKitesPartitionTheHexagon) {
    std::vector<KiteCoord> hex;
    Sqrt3Number kite_sum;
    for (int v = 0; v < 6; ++v) {
        hex.push_back({0, 0, v});
        const auto poly = kite_polygon({0, 0, v});
        kite_sum += polygon_area(poly);
    }
    // Regular hexagon with side 2*sqrt(3): area = (3 sqrt3 / 2) * 12.
    EXPECT_EQ(kite_sum, Sqrt3Number(Rational(0), Rational(18)));
    EXPECT_EQ(boundary_sides(hex), 6);
    // Interior-disjoint: every internal edge is shared by exactly two kites.
    EXPECT_EQ(boundary_loop(hex).size(), 12U);
}

TEST(Kite, AnglesAreSixtyNinetyOneTwentyNinety) {
    const auto p = kite_polygon({2, -1, 3});
    const std::array<int, 4> expected_cos_sign{1, 0, -1, 0};
    for (std::size_t i = 0; i < 4; ++i) {
        const ExactPoint u = minus(p[(i + 3) % 4], p[i]);
        const ExactPoint w = minus(p[(i + 1) % 4], p[i]);
        const Sqrt3Number d = dot(u, w);
        EXPECT_EQ(d.sign(), expected_cos_sign[i]) << i;
        if (expected_cos_sign[i] != 0) {
            // cos^2 = 1/4 for 60 and 120 degrees.
            EXPECT_EQ(d * d * Sqrt3Number(4), dot(u, u) * dot(w, w)) << i;
        }
    }
    // Edge lengths 3 and sqrt3.
    EXPECT_EQ(dot(minus(p[1], p[0]), minus(p[1], p[0])), Sqrt3Number(9));
    EXPECT_EQ(dot(minus(p[2], p[1]), minus(p[2], p[1])), Sqrt3Number(3));
}

TEST(Kite, AllKitesHaveTheSameArea) {
    const Sqrt3Number area = polygon_area(kite_polygon({0, 0, 0}));
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
        EXPECT_EQ(polygon_area(kite_polygon(random_kite(rng))), area);
    }
}

TEST(Kite, TranslationByAxialBasis) {
    for (int v = 0; v < 6; ++v) {
        const auto base = kite_corners({0, 0, v});
        const auto moved = kite_corners({1, 0, v});
        for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(moved[i], base[i] + hex_center({1, 0}));
    }
}

TEST(Kite, NeighborsMatchSharedEdges) {
    // Geometric oracle: two kites are adjacent iff one has an edge whose
    // reverse is an edge of the other.
    std::vector<KiteCoord> all;
    for (int q = -3; q <= 3; ++q)
        for (int r = -3; r <= 3; ++r)
            for (int v = 0; v < 6; ++v) all.push_back({q, r, v});
    std::map<std::pair<LatticePoint, LatticePoint>, KiteCoord> owner;
    for (const auto& k : all) {
        const auto c = kite_corners(k);
        for (int i = 0; i < 4; ++i) owner[{c[i], c[(i + 1) % 4]}] = k;
    }
    for (const auto& k : all) {
        if (hex_distance(k.hex(), {0, 0}) > 2) continue;
        std::set<KiteCoord> oracle;
        const auto c = kite_corners(k);
        for (int i = 0; i < 4; ++i) {
            auto it = owner.find({c[(i + 1) % 4], c[i]});
            if (it != owner.end()) oracle.insert(it->second);
        }
        const auto n = kite_neighbors(k);
        EXPECT_EQ(oracle, std::set<KiteCoord>(n.begin(), n.end())) << to_string(k);
    }
}

TEST(Isometry, ElementaryOrders) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const KiteCoord k = random_kite(rng);
        KiteCoord r = k;
        for (int j = 0; j < 6; ++j) r = Isometry::rotation(1).apply(r);
        EXPECT_EQ(r, k);
        EXPECT_EQ(Isometry::reflection().apply(Isometry::reflection().apply(k)), k);
        EXPECT_EQ(Isometry::identity().apply(k), k);
    }
}

TEST(Isometry, GroupAxioms) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const Isometry a = random_isometry(rng), b = random_isometry(rng), c = random_isometry(rng);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * a.inverse(), Isometry::identity());
        ASSERT_EQ(a.inverse() * a, Isometry::identity());
        ASSERT_EQ(a * Isometry::identity(), a);
        ASSERT_EQ(Isometry::identity() * a, a);
        const KiteCoord k = random_kite(rng);
        ASSERT_EQ((a * b).apply(k), a.apply(b.apply(k)));
    }
}

TEST(Isometry, KiteActionMatchesPointAction) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        const Isometry iso = random_isometry(rng);
        const KiteCoord k = random_kite(rng);
        const auto image = kite_corners(iso.apply(k));
        std::set<LatticePoint> expected;
        for (const auto& p : kite_corners(k)) expected.insert(iso.apply(p));
        ASSERT_EQ(std::set<LatticePoint>(image.begin(), image.end()), expected);
        // The kite's characteristic corners keep their roles: centre and vertex.
        ASSERT_EQ(image[0], iso.apply(kite_corners(k)[0]));
        ASSERT_EQ(image[2], iso.apply(kite_corners(k)[2]));
    }
}

TEST(Isometry, PreservesAdjacency) {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> side(0, 3);
    for (int i = 0; i < 1000; ++i) {
        const Isometry iso = random_isometry(rng);
        const KiteCoord k = random_kite(rng);
        const KiteCoord n = kite_neighbors(k)[side(rng)];
        ASSERT_TRUE(edge_adjacent(iso.apply(k), iso.apply(n)));
    }
}

TEST(Boundary, SimpleShapes) {
    const std::vector<KiteCoord> one{{0, 0, 0}};
    EXPECT_EQ(boundary_sides(one), 4);
    EXPECT_EQ(boundary_loop(one).size(), 4U);

    const std::vector<KiteCoord> apart{{0, 0, 0}, {3, 3, 0}};
    EXPECT_THROW(boundary_sides(apart), GeometryError);
    EXPECT_THROW(boundary_sides(std::vector<KiteCoord>{}), GeometryError);

    // The six hexagons around (0,0) enclose it.
    std::vector<KiteCoord> ring;
    for (int d = 0; d < 6; ++d)
        for (int v = 0; v < 6; ++v) {
            const HexCoord h = hex_direction(d);
            ring.push_back({h.q, h.r, v});
        }
    EXPECT_THROW(boundary_sides(ring), GeometryError);
}

TEST(Hat, PrototypeInvariants) {
    const std::vector<KiteCoord> hat(kHatProto.begin(), kHatProto.end());
    EXPECT_EQ(as_set(hat).size(), 8U);
    EXPECT_TRUE(is_edge_connected(hat));
    EXPECT_NO_THROW(boundary_loop(hat));
    EXPECT_EQ(boundary_sides(hat), 13);
    EXPECT_EQ(boundary_loop(hat).size(), 14U);
    EXPECT_EQ(straight_boundary_vertices(hat), 1);
    EXPECT_TRUE(is_chiral(hat));

    Sqrt3Number area;
    for (const auto& k : hat) area += polygon_area(kite_polygon(k));
    EXPECT_EQ(area, Sqrt3Number(8) * polygon_area(kite_polygon({0, 0, 0})));
    std::vector<ExactPoint> outline;
    for (const auto& p : boundary_loop(hat)) outline.push_back(to_exact(p));
    EXPECT_EQ(polygon_area(outline), area);
}

TEST(Hat, PlacementsAlwaysCoverEightKites) {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 200; ++i) {
        const Placement p{random_isometry(rng)};
        const auto kites = hat_kites(p);
        EXPECT_EQ(as_set(kites).size(), 8U);
        EXPECT_EQ(boundary_sides(kites), 13);
        EXPECT_EQ(p.chirality(), p.iso.mirror() ? Chirality::Reflected : Chirality::Normal);
    }
    EXPECT_EQ(hat_kites(Placement{}), kHatProto);
}

TEST(Hat, MirrorImageUnreachableWithoutReflection) {
    const auto mirrored = as_set(hat_kites(Placement{Isometry::reflection()}));
    for (int rot = 0; rot < 6; ++rot)
        for (int q = -6; q <= 6; ++q)
            for (int r = -6; r <= 6; ++r) {
                const auto image = as_set(hat_kites(Placement{Isometry(false, rot, {q, r})}));
                ASSERT_NE(image, mirrored);
            }
}

TEST(Hat, ChiralityIsIsometryStable) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 500; ++i) {
        const Placement p{random_isometry(rng)};
        const Isometry g = random_isometry(rng);
        const Placement moved{g * p.iso};
        if (g.mirror()) {
            EXPECT_NE(moved.chirality(), p.chirality());
        } else {
            EXPECT_EQ(moved.chirality(), p.chirality());
        }
    }
}

TEST(Polykite, CountsMatchKnownEnumeration) {
    // Free polykites, OEIS A057786.
    const std::vector<std::size_t> expected{1, 2, 4, 10, 27, 85, 262, 873};
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(enumerate_polykites(n).size(), expected[n - 1]) << n;
}

TEST(Polykite, HatDerivation) {
    const auto candidates = hat_candidates();
    EXPECT_EQ(candidates.size(), 168U);

    std::vector<Polykite> single_straight;
    for (const auto& shape : candidates) {
        if (straight_boundary_vertices(shape) == 1) single_straight.push_back(shape);
    }
    ASSERT_EQ(single_straight.size(), 8U);

    const std::vector<KiteCoord> hat(kHatProto.begin(), kHatProto.end());
    const Polykite hat_form = canonical_form(hat, true);
    EXPECT_NE(std::find(single_straight.begin(), single_straight.end(), hat_form), single_straight.end());

    // Published hat outline, 13 vertices in (x, y) hexagonal-grid units
    // where x runs along e1 and y along e2 and the short kite edge is 1.
    // Scaled by 2 and rotated into this lattice it must match exactly one
    // of the eight shapes up to congruence.
    const std::vector<std::pair<int, int>> published{{0, 0}, {-1, -1}, {0, -2}, {2, -2}, {2, -1},
                                                     {4, -2}, {5, -1}, {4, 0}, {3, 0}, {2, 2},
                                                     {0, 3}, {0, 2}, {-1, 2}};
    // That grid's e1 is our short kite edge direction, which is the lattice
    // vector (1, 1) rotated: map x*(1,1) + y*(-1,2) (its e2 rotated by 60 degrees).
    std::vector<LatticePoint> reference;
    for (auto [x, y] : published) reference.push_back({x * 1 + y * -1, x * 1 + y * 2});
    auto target = signature(reference);
    std::int64_t twice_area = 0;
    for (std::size_t i = 0; i < reference.size(); ++i)
        twice_area += cross(reference[i], reference[(i + 1) % reference.size()]);
    if (twice_area < 0) {
        std::reverse(reference.begin(), reference.end());
        target = signature(reference);
    }

    int matches = 0;
    Polykite matched;
    for (const auto& shape : single_straight) {
        for (int mirror = 0; mirror <= 1; ++mirror) {
            Polykite image;
            for (const auto& k : shape) image.push_back(Isometry(mirror == 1, 0, {}).apply(k));
            if (cyclically_equal(signature(boundary_polygon(image)), target)) {
                ++matches;
                matched = shape;
                break;
            }
        }
    }
    EXPECT_EQ(matches, 1);
    EXPECT_EQ(matched, hat_form);
}
