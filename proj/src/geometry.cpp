#include "hatlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>

namespace hatlab {

namespace {

constexpr std::int64_t kHexSpacing = 6;

// Edge midpoints and vertices of the hexagon centred at the origin.
constexpr std::array<LatticePoint, 6> kMidpoint{{{3, 0}, {0, 3}, {-3, 3}, {-3, 0}, {0, -3}, {3, -3}}};
constexpr std::array<LatticePoint, 6> kVertex{{{2, 2}, {-2, 4}, {-4, 2}, {-2, -2}, {2, -4}, {4, -2}}};
constexpr std::array<HexCoord, 6> kDirection{{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

constexpr int mod6(int x) { return ((x % 6) + 6) % 6; }

// 60 degree counterclockwise rotation in the lattice basis.
template <typename T>
constexpr void rotate_once(T& a, T& b) {
    const T na = -b;
    const T nb = a + b;
    a = na;
    b = nb;
}

}  // namespace

int hex_distance(HexCoord a, HexCoord b) {
    const int dq = a.q - b.q;
    const int dr = a.r - b.r;
    return (std::abs(dq) + std::abs(dr) + std::abs(dq + dr)) / 2;
}

HexCoord hex_direction(int k) { return kDirection[mod6(k)]; }

std::string to_string(const KiteCoord& k) {
    return "(" + std::to_string(k.q) + "," + std::to_string(k.r) + "," + std::to_string(k.v) + ")";
}

LatticePoint hex_center(HexCoord h) { return {kHexSpacing * h.q, kHexSpacing * h.r}; }

ExactPoint to_exact(LatticePoint p) {
    // x = a + b/2, y = (b/2) sqrt 3
    const Rational half_b(Integer(static_cast<long>(p.b)), Integer(2));
    return {Sqrt3Number(Rational(Integer(static_cast<long>(p.a))) + half_b),
            Sqrt3Number(Rational(0), half_b)};
}

std::array<double, 2> to_cartesian(LatticePoint p) {
    const double a = static_cast<double>(p.a);
    const double b = static_cast<double>(p.b);
    return {a + 0.5 * b, 0.5 * std::sqrt(3.0) * b};
}

std::array<LatticePoint, 4> kite_corners(const KiteCoord& k) {
    const LatticePoint c = hex_center(k.hex());
    const int v = mod6(k.v);
    return {c, c + kMidpoint[v], c + kVertex[v], c + kMidpoint[mod6(v + 1)]};
}

std::array<ExactPoint, 4> kite_polygon(const KiteCoord& k) {
    const auto corners = kite_corners(k);
    return {to_exact(corners[0]), to_exact(corners[1]), to_exact(corners[2]), to_exact(corners[3])};
}

Sqrt3Number polygon_area(std::span<const ExactPoint> polygon) {
    Sqrt3Number twice;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const ExactPoint& p = polygon[i];
        const ExactPoint& q = polygon[(i + 1) % polygon.size()];
        twice += p.x * q.y - q.x * p.y;
    }
    return twice / Sqrt3Number(2);
}

std::array<KiteCoord, 4> kite_neighbors(const KiteCoord& k) {
    const int v = mod6(k.v);
    const HexCoord h = k.hex();
    const HexCoord across_first = h + kDirection[v];
    const HexCoord across_second = h + kDirection[mod6(v + 1)];
    return {{
        {k.q, k.r, mod6(v - 1)},
        {across_first.q, across_first.r, mod6(v + 2)},
        {across_second.q, across_second.r, mod6(v + 4)},
        {k.q, k.r, mod6(v + 1)},
    }};
}

bool edge_adjacent(const KiteCoord& a, const KiteCoord& b) {
    const auto n = kite_neighbors(a);
    return std::find(n.begin(), n.end(), b) != n.end();
}

// ---------------------------------------------------------------- Isometry

Isometry::Isometry(bool mirror, int rot, HexCoord trans) : mirror_(mirror), rot_(mod6(rot)), trans_(trans) {}

HexCoord Isometry::apply(HexCoord h) const {
    int q = h.q;
    int r = h.r;
    if (mirror_) std::swap(q, r);
    for (int i = 0; i < rot_; ++i) rotate_once(q, r);
    return HexCoord{q, r} + trans_;
}

KiteCoord Isometry::apply(const KiteCoord& k) const {
    const HexCoord h = apply(k.hex());
    int v = mirror_ ? mod6(-k.v) : mod6(k.v);
    v = mod6(v + rot_);
    return {h.q, h.r, v};
}

LatticePoint Isometry::apply(LatticePoint p) const {
    std::int64_t a = p.a;
    std::int64_t b = p.b;
    if (mirror_) std::swap(a, b);
    for (int i = 0; i < rot_; ++i) rotate_once(a, b);
    return LatticePoint{a, b} + hex_center(trans_);
}

Isometry Isometry::inverse() const {
    // (R^r M)^-1 = M R^-r = R^r M, and (R^r)^-1 = R^-r.
    const Isometry linear(mirror_, mirror_ ? rot_ : -rot_, {});
    return {linear.mirror_, linear.rot_, -linear.apply(trans_)};
}

Isometry operator*(const Isometry& a, const Isometry& b) {
    const Isometry linear_a(a.mirror_, a.rot_, {});
    const int rot = a.rot_ + (a.mirror_ ? -b.rot_ : b.rot_);
    return {a.mirror_ != b.mirror_, rot, linear_a.apply(b.trans_) + a.trans_};
}

std::string to_string(Chirality c) { return c == Chirality::Normal ? "normal" : "reflected"; }

Chirality parse_chirality(const std::string& text) {
    if (text == "normal") return Chirality::Normal;
    if (text == "reflected") return Chirality::Reflected;
    throw std::invalid_argument("unknown chirality: " + text);
}

std::array<KiteCoord, 8> hat_kites(const Placement& p) {
    std::array<KiteCoord, 8> out{};
    for (std::size_t i = 0; i < kHatProto.size(); ++i) out[i] = p.iso.apply(kHatProto[i]);
    return out;
}

// ---------------------------------------------------------------- boundary

bool is_edge_connected(std::span<const KiteCoord> kites) {
    if (kites.empty()) return false;
    const std::set<KiteCoord> all(kites.begin(), kites.end());
    std::set<KiteCoord> seen{*all.begin()};
    std::vector<KiteCoord> stack{*all.begin()};
    while (!stack.empty()) {
        const KiteCoord k = stack.back();
        stack.pop_back();
        for (const KiteCoord& n : kite_neighbors(k)) {
            if (all.count(n) && seen.insert(n).second) stack.push_back(n);
        }
    }
    return seen.size() == all.size();
}

std::vector<LatticePoint> boundary_loop(std::span<const KiteCoord> kites) {
    if (kites.empty()) throw GeometryError("boundary of an empty region");
    const std::set<KiteCoord> unique(kites.begin(), kites.end());
    if (unique.size() != kites.size()) throw GeometryError("region lists a kite twice");
    if (!is_edge_connected(kites)) throw GeometryError("region is not edge-connected");

    std::set<std::pair<LatticePoint, LatticePoint>> edges;
    for (const KiteCoord& k : kites) {
        const auto c = kite_corners(k);
        for (std::size_t i = 0; i < 4; ++i) edges.insert({c[i], c[(i + 1) % 4]});
    }
    std::map<LatticePoint, LatticePoint> next;
    std::size_t boundary_edges = 0;
    for (const auto& [from, to] : edges) {
        if (edges.count({to, from})) continue;
        ++boundary_edges;
        if (!next.emplace(from, to).second) throw GeometryError("boundary touches itself at a vertex");
    }

    std::vector<LatticePoint> loop;
    const LatticePoint start = next.begin()->first;
    LatticePoint cur = start;
    do {
        loop.push_back(cur);
        cur = next.at(cur);
    } while (cur != start && loop.size() <= boundary_edges);
    if (loop.size() != boundary_edges) throw GeometryError("region has a hole");
    return loop;
}

namespace {

bool is_straight(LatticePoint prev, LatticePoint at, LatticePoint next) {
    return cross(at - prev, next - at) == 0;
}

}  // namespace

std::vector<LatticePoint> boundary_polygon(std::span<const KiteCoord> kites) {
    const auto loop = boundary_loop(kites);
    std::vector<LatticePoint> out;
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_straight(loop[(i + n - 1) % n], loop[i], loop[(i + 1) % n])) out.push_back(loop[i]);
    }
    return out;
}

int boundary_sides(std::span<const KiteCoord> kites) {
    return static_cast<int>(boundary_polygon(kites).size());
}

int straight_boundary_vertices(std::span<const KiteCoord> kites) {
    const auto loop = boundary_loop(kites);
    return static_cast<int>(loop.size() - boundary_polygon(kites).size());
}

}  // namespace hatlab
