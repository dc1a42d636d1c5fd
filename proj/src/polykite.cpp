#include <algorithm>
#include <set>

#include "hatlab/geometry.hpp"

namespace hatlab {

namespace {

Polykite normalized(std::span<const KiteCoord> kites, const Isometry& iso) {
    Polykite out;
    out.reserve(kites.size());
    for (const KiteCoord& k : kites) out.push_back(iso.apply(k));
    int min_q = out.front().q;
    int min_r = out.front().r;
    for (const KiteCoord& k : out) {
        min_q = std::min(min_q, k.q);
        min_r = std::min(min_r, k.r);
    }
    for (KiteCoord& k : out) {
        k.q -= min_q;
        k.r -= min_r;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Polykite canonical_form(std::span<const KiteCoord> kites, bool allow_reflection) {
    if (kites.empty()) return {};
    Polykite best;
    for (int mirror = 0; mirror <= (allow_reflection ? 1 : 0); ++mirror) {
        for (int rot = 0; rot < 6; ++rot) {
            Polykite candidate = normalized(kites, Isometry(mirror == 1, rot, {}));
            if (best.empty() || candidate < best) best = std::move(candidate);
        }
    }
    return best;
}

bool is_chiral(std::span<const KiteCoord> kites) {
    Polykite mirrored;
    for (const KiteCoord& k : kites) mirrored.push_back(Isometry::reflection().apply(k));
    return canonical_form(kites, false) != canonical_form(mirrored, false);
}

std::vector<Polykite> enumerate_polykites(int size) {
    if (size < 1) return {};
    std::set<Polykite> level{Polykite{KiteCoord{0, 0, 0}}};
    for (int n = 2; n <= size; ++n) {
        std::set<Polykite> grown;
        for (const Polykite& shape : level) {
            for (const KiteCoord& k : shape) {
                for (const KiteCoord& nb : kite_neighbors(k)) {
                    if (std::binary_search(shape.begin(), shape.end(), nb)) continue;
                    Polykite bigger = shape;
                    bigger.push_back(nb);
                    grown.insert(canonical_form(bigger, true));
                }
            }
        }
        level = std::move(grown);
    }
    return {level.begin(), level.end()};
}

std::vector<Polykite> hat_candidates() {
    std::vector<Polykite> out;
    for (const Polykite& shape : enumerate_polykites(8)) {
        if (!is_chiral(shape)) continue;
        try {
            if (boundary_sides(shape) == 13) out.push_back(shape);
        } catch (const GeometryError&) {
            // holed or self-touching shapes are not candidates
        }
    }
    return out;
}

}  // namespace hatlab
