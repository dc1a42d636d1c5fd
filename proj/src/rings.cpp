#include "hatlab/rings.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hatlab/sequences.hpp"

namespace hatlab {

RingSeries ring_counts(const Patch& patch) {
    RingSeries out;
    for (const CoronaCensus& c : patch_census(patch)) {
        out.rings.push_back({c.corona, c.total, c.normal, c.reflected});
    }
    return out;
}

RingSeries series_from_normals(std::span<const std::size_t> normals) {
    RingSeries out;
    for (std::size_t i = 0; i < normals.size(); ++i) out.rings.push_back({i, normals[i], normals[i], 0});
    return out;
}

bool RingComparison::all_match() const {
    return std::all_of(rows.begin(), rows.end(), [](const RingMatch& m) { return m.match; });
}

RingComparison compare_to_a027941(const RingSeries& series) {
    RingComparison out;
    out.definition = kRingDefinition;
    for (const Ring& ring : series.rings) {
        RingMatch row;
        row.index = ring.index;
        row.observed = ring.normal;
        row.target = a027941(ring.index);
        row.match = row.target == Integer(static_cast<unsigned long>(ring.normal));
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::vector<RingRatio> ring_ratio_report(const RingSeries& series) {
    const auto& rings = series.rings;
    if (std::all_of(rings.begin(), rings.end(), [](const Ring& r) { return r.normal == 0; })) {
        throw std::domain_error("ring ratios need nonzero normal counts");
    }
    if (rings.back().normal == 0) throw std::domain_error("outermost ring has no normal hats");
    std::size_t first = rings.size() - 1;
    while (first > 0 && rings[first - 1].normal != 0) --first;

    const SurdNumber target = phi_squared();
    std::vector<RingRatio> out;
    for (std::size_t i = first; i + 1 < rings.size(); ++i) {
        const Rational ratio(Integer(static_cast<unsigned long>(rings[i + 1].normal)),
                             Integer(static_cast<unsigned long>(rings[i].normal)));
        out.push_back({rings[i].index, ratio, SurdNumber(ratio) - target});
    }
    return out;
}

Rational reflected_fraction(const Patch& patch, bool interior_only) {
    if (patch.placements.empty()) throw std::invalid_argument("reflected fraction of an empty patch");
    const unsigned top = patch.max_corona();
    const bool drop_outer = interior_only && top > 0;
    unsigned long total = 0;
    unsigned long reflected = 0;
    for (std::size_t i = 0; i < patch.placements.size(); ++i) {
        if (drop_outer && patch.corona_of[i] == top) continue;
        ++total;
        if (patch.placements[i].chirality() == Chirality::Reflected) ++reflected;
    }
    return Rational(Integer(reflected), Integer(total));
}

std::vector<HexCoord> shifts_in_order(int max_shift) {
    std::vector<HexCoord> out;
    for (int n = 1; n <= max_shift; ++n) {
        HexCoord h{n, 0};
        for (int side = 0; side < 6; ++side) {
            for (int step = 0; step < n; ++step) {
                out.push_back(h);
                h = h + hex_direction(side + 2);
            }
        }
    }
    return out;
}

PeriodicityVerdict detect_translation(std::span<const Placement> placements, int window_radius, int max_shift,
                                      HexCoord center) {
    PeriodicityVerdict verdict;
    verdict.window_radius = window_radius;

    const std::set<Placement> all(placements.begin(), placements.end());
    std::vector<Placement> inside;
    for (const Placement& p : all) {
        const auto kites = hat_kites(p);
        const bool within = std::all_of(kites.begin(), kites.end(), [&](const KiteCoord& k) {
            return hex_distance(k.hex(), center) <= window_radius;
        });
        if (within) inside.push_back(p);
    }
    verdict.tiles_checked = inside.size();
    if (inside.size() < 2) return verdict;

    for (const HexCoord& t : shifts_in_order(max_shift)) {
        const Isometry shift = Isometry::translation(t);
        const bool hit = std::all_of(inside.begin(), inside.end(),
                                     [&](const Placement& p) { return all.count(Placement{shift * p.iso}) != 0; });
        if (hit) {
            verdict.translation = t;
            break;
        }
    }
    return verdict;
}

}  // namespace hatlab
