#pragma once

// Ring statistics over hat patches and a brute-force translation detector.
//
// A ring is a corona as produced by the tiler: ring 0 is the central hat and
// ring n holds the hats placed while completing the kite frontier of rings
// 0..n-1. Every report carries kRingDefinition so results can be read
// against that choice.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hatlab/exact.hpp"
#include "hatlab/geometry.hpp"
#include "hatlab/tiler.hpp"

namespace hatlab {

inline constexpr const char* kRingDefinition =
    "corona index: ring 0 is the central hat; ring n is every hat placed to cover the kites "
    "edge-adjacent to rings 0..n-1";

struct Ring {
    std::size_t index = 0;
    std::size_t total = 0;
    std::size_t normal = 0;
    std::size_t reflected = 0;
    friend bool operator==(const Ring&, const Ring&) = default;
};

struct RingSeries {
    std::vector<Ring> rings;
    friend bool operator==(const RingSeries&, const RingSeries&) = default;
};

RingSeries ring_counts(const Patch& patch);

/// Series whose normal counts are `normals` (reflected = 0). Handy for
/// feeding reference sequences through the ratio report.
RingSeries series_from_normals(std::span<const std::size_t> normals);

struct RingMatch {
    std::size_t index = 0;
    std::size_t observed = 0;
    Integer target;
    bool match = false;
    friend bool operator==(const RingMatch&, const RingMatch&) = default;
};

struct RingComparison {
    std::string definition;
    std::vector<RingMatch> rows;
    bool all_match() const;
    friend bool operator==(const RingComparison&, const RingComparison&) = default;
};

/// Normal count of ring n against a027941(n), ring by ring.
RingComparison compare_to_a027941(const RingSeries& series);

struct RingRatio {
    std::size_t index = 0;  // ratio = normal(index + 1) / normal(index)
    Rational ratio;
    SurdNumber delta;       // ratio - phi^2
    friend bool operator==(const RingRatio&, const RingRatio&) = default;
};

/// Successive normal-count ratios over the longest tail of rings whose
/// normal counts are all nonzero. Throws std::domain_error when every count
/// is zero or the last ring has none.
std::vector<RingRatio> ring_ratio_report(const RingSeries& series);

/// Share of reflected hats. With interior_only the outermost corona is left
/// out, unless it is the only one. Throws std::invalid_argument on an empty
/// patch.
Rational reflected_fraction(const Patch& patch, bool interior_only);

struct PeriodicityVerdict {
    std::optional<HexCoord> translation;
    int window_radius = 0;
    std::size_t tiles_checked = 0;
    friend bool operator==(const PeriodicityVerdict&, const PeriodicityVerdict&) = default;
};

/// Nonzero shifts with hex norm at most max_shift, shortest first and
/// counterclockwise from (n, 0) within a norm.
std::vector<HexCoord> shifts_in_order(int max_shift);

/// Tests every shift from shifts_in_order(max_shift). A shift t is a hit when
/// each placement lying wholly within window_radius hex steps of `center`
/// has its t-translate in the set. Fewer than two placements in the window
/// gives no verdict.
PeriodicityVerdict detect_translation(std::span<const Placement> placements, int window_radius,
                                      int max_shift, HexCoord center = {0, 0});

}  // namespace hatlab
