#pragma once

/**
 * @file geometry.hpp
 * @brief The kite lattice, its isometry group and the hat polykite.
 *
 * Hexagon centres sit on a triangular lattice. A point of the plane is
 * written in the lattice basis e1 = (1, 0), e2 = (1/2, sqrt(3)/2), scaled so
 * that neighbouring hexagon centres are 6 units apart. With that scale every
 * kite corner (hexagon centre, edge midpoint, hexagon vertex) has integer
 * lattice coordinates, and all geometric predicates reduce to integer
 * arithmetic. Exact Cartesian coordinates live in Q(sqrt 3).
 *
 * Kite (q, r, v) is the kite of hexagon (q, r) spanning
 * centre -> midpoint v -> vertex v -> midpoint v+1, counterclockwise.
 * Midpoint k points at angle 60k degrees, vertex k at 60k + 30 degrees.
 * Short kite edges have length sqrt(3), long edges length 3.
 */

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hatlab/exact.hpp"

namespace hatlab {

/// Axial coordinates of a hexagon: centre = 6*(q*e1 + r*e2).
struct HexCoord {
    int q = 0;
    int r = 0;
    auto operator<=>(const HexCoord&) const = default;
};

inline HexCoord operator+(HexCoord a, HexCoord b) { return {a.q + b.q, a.r + b.r}; }
inline HexCoord operator-(HexCoord a, HexCoord b) { return {a.q - b.q, a.r - b.r}; }
inline HexCoord operator-(HexCoord a) { return {-a.q, -a.r}; }

/// Number of hexagon steps between two hexagons.
int hex_distance(HexCoord a, HexCoord b);
/// Unit step towards edge midpoint k (k in [0, 6)).
HexCoord hex_direction(int k);

struct KiteCoord {
    int q = 0;
    int r = 0;
    int v = 0;  // in [0, 6)
    auto operator<=>(const KiteCoord&) const = default;
    HexCoord hex() const { return {q, r}; }
};

std::string to_string(const KiteCoord& k);

/// Integer point a*e1 + b*e2 of the scaled triangular lattice.
struct LatticePoint {
    std::int64_t a = 0;
    std::int64_t b = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

inline LatticePoint operator+(LatticePoint x, LatticePoint y) { return {x.a + y.a, x.b + y.b}; }
inline LatticePoint operator-(LatticePoint x, LatticePoint y) { return {x.a - y.a, x.b - y.b}; }

/// Twice the signed area spanned by two lattice vectors, in units of the
/// e1 x e2 parallelogram (positive means counterclockwise).
inline std::int64_t cross(LatticePoint x, LatticePoint y) { return x.a * y.b - x.b * y.a; }

LatticePoint hex_center(HexCoord h);

using Sqrt3Number = Quadratic<3>;

/// Exact Cartesian point with coordinates in Q(sqrt 3).
struct ExactPoint {
    Sqrt3Number x;
    Sqrt3Number y;
    friend bool operator==(const ExactPoint&, const ExactPoint&) = default;
};

ExactPoint to_exact(LatticePoint p);
/// Floating-point Cartesian coordinates, for rendering only.
std::array<double, 2> to_cartesian(LatticePoint p);

std::array<LatticePoint, 4> kite_corners(const KiteCoord& k);
/// Corners as exact points: centre, midpoint, vertex, next midpoint.
std::array<ExactPoint, 4> kite_polygon(const KiteCoord& k);

/// Signed shoelace area of a closed polygon.
Sqrt3Number polygon_area(std::span<const ExactPoint> polygon);

/// The four kites sharing a full edge with k, in edge order
/// (centre-midpoint, midpoint-vertex, vertex-midpoint, midpoint-centre).
std::array<KiteCoord, 4> kite_neighbors(const KiteCoord& k);
bool edge_adjacent(const KiteCoord& a, const KiteCoord& b);

/**
 * Lattice isometry x -> T(R^rot(M^mirror(x))): optional mirror across the
 * line through e1 + e2 ((q, r) -> (r, q)), rotation by rot*60 degrees about
 * the origin hexagon centre, then translation by a hexagon vector.
 */
class Isometry {
public:
    Isometry() = default;
    Isometry(bool mirror, int rot, HexCoord trans);

    static Isometry identity() { return {}; }
    static Isometry translation(HexCoord t) { return {false, 0, t}; }
    static Isometry rotation(int steps) { return {false, steps, {}}; }
    static Isometry reflection() { return {true, 0, {}}; }

    bool mirror() const { return mirror_; }
    int rot() const { return rot_; }
    HexCoord trans() const { return trans_; }

    HexCoord apply(HexCoord h) const;
    KiteCoord apply(const KiteCoord& k) const;
    LatticePoint apply(LatticePoint p) const;

    Isometry inverse() const;

    /// Composition: (a * b)(x) = a(b(x)).
    friend Isometry operator*(const Isometry& a, const Isometry& b);

    auto operator<=>(const Isometry&) const = default;

private:
    bool mirror_ = false;
    int rot_ = 0;
    HexCoord trans_{};
};

enum class Chirality { Normal, Reflected };

std::string to_string(Chirality c);
/// "normal" or "reflected".
Chirality parse_chirality(const std::string& text);

struct Placement {
    Isometry iso;

    Chirality chirality() const { return iso.mirror() ? Chirality::Reflected : Chirality::Normal; }
    auto operator<=>(const Placement&) const = default;
};

/**
 * The hat as eight kites of the lattice: four from hexagon (0,0) and two
 * each from hexagons (0,1) and (1,0).
 *
 * Derived by enumerating all 873 free 8-kite polykites, keeping the
 * simply connected chiral ones whose boundary has 13 sides and a single
 * straight-angle vertex (8 shapes), and picking the one congruent to the
 * published hat outline. tests/test_geometry.cpp re-runs that derivation.
 */
inline constexpr std::array<KiteCoord, 8> kHatProto{{
    {0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 0, 5},
    {0, 1, 4}, {0, 1, 5}, {1, 0, 2}, {1, 0, 3},
}};

std::array<KiteCoord, 8> hat_kites(const Placement& p);

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_edge_connected(std::span<const KiteCoord> kites);

/// Boundary of the union of the kites as a closed counterclockwise loop of
/// lattice points, one per kite edge. Throws GeometryError when the region is
/// empty, not edge-connected, has a hole or touches itself at a vertex.
std::vector<LatticePoint> boundary_loop(std::span<const KiteCoord> kites);

/// Corners of the boundary loop, with every straight-angle vertex dropped.
std::vector<LatticePoint> boundary_polygon(std::span<const KiteCoord> kites);

/// Number of maximal straight runs along the boundary. The hat scores 13:
/// its boundary has 14 kite edges, two of which are collinear and merge into
/// one side.
int boundary_sides(std::span<const KiteCoord> kites);

/// Number of straight-angle vertices on the boundary loop.
int straight_boundary_vertices(std::span<const KiteCoord> kites);

// ---------------------------------------------------------------- polykites

using Polykite = std::vector<KiteCoord>;

/// Sorted representative of the kite set modulo translation and rotation,
/// and also reflection when `allow_reflection` is set.
Polykite canonical_form(std::span<const KiteCoord> kites, bool allow_reflection);

/// True when no orientation-preserving isometry maps the set onto its mirror image.
bool is_chiral(std::span<const KiteCoord> kites);

/// All free (reflection-equivalent) polykites with `size` kites, each in
/// canonical form, sorted.
std::vector<Polykite> enumerate_polykites(int size);

/// 8-kite polykites that are simply connected, chiral and 13-sided.
std::vector<Polykite> hat_candidates();

}  // namespace hatlab
