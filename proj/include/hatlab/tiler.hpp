#pragma once

/**
 * @file tiler.hpp
 * @brief Finite hat patches grown corona by corona around a central hat.
 *
 * A corona is completed kite-wise: every kite edge-adjacent to the region
 * covered so far must end up covered. Candidate placements are tried in a
 * fixed order (smallest uncovered frontier kite first, then mirror, rotation,
 * translation), so the first completion found is a function of the
 * configuration alone.
 *
 * A completion is only accepted if every uncovered kite touching the new
 * region can still be covered by at least one hat; completions that fail
 * this are dead ends for the next corona and are pruned during the search.
 */

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hatlab/geometry.hpp"

namespace hatlab {

struct Patch {
    std::vector<Placement> placements;
    std::vector<unsigned> corona_of;  // parallel to placements
    std::size_t center = 0;

    std::size_t size() const { return placements.size(); }
    unsigned max_corona() const;
    /// Kite -> index of the first placement covering it.
    std::map<KiteCoord, std::size_t> owner() const;

    friend bool operator==(const Patch&, const Patch&) = default;
};

enum class CandidateOrder {
    /// Smallest uncovered frontier kite (q, r, v); then mirror, rotation,
    /// translation (q, r), all ascending.
    frontier_lex_then_isometry,
};

struct TilerConfig {
    unsigned max_coronas = 3;
    Chirality seed_chirality = Chirality::Reflected;
    /// Furthest a newly placed hat may reach, in kite steps away from the
    /// region covered before the corona started.
    unsigned search_horizon = 16;
    CandidateOrder candidate_order = CandidateOrder::frontier_lex_then_isometry;
    /// Search nodes allowed per grow call before giving up.
    std::uint64_t node_budget = 50'000'000;
};

class SearchError : public std::runtime_error {
public:
    enum class Kind { SearchExhausted, HorizonExceeded };

    SearchError(Kind kind, std::string message, Patch partial, std::uint64_t nodes)
        : std::runtime_error(std::move(message)), kind_(kind), partial_(std::move(partial)), nodes_(nodes) {}

    Kind kind() const { return kind_; }
    /// Patch as it stood before the failing corona.
    const Patch& partial() const { return partial_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    Kind kind_;
    Patch partial_;
    std::uint64_t nodes_;
};

/// One hat at the identity pose (mirrored for a reflected seed), corona 0.
Patch seed_patch(const TilerConfig& cfg);

/// Adds one corona to `patch`: the first completion in candidate order.
/// Throws SearchError when no completion exists.
Patch grow_corona(const Patch& patch, const TilerConfig& cfg);

/// Seed plus cfg.max_coronas coronas. Backtracks into earlier coronas when a
/// later one cannot be completed, so the result is the first patch in
/// candidate order whose every corona completes.
Patch grow_patch(const TilerConfig& cfg);

/// Number of search nodes the last grow call on this thread visited.
std::uint64_t last_search_nodes();

struct Violation {
    enum class Kind { DoubleOwned, Disconnected, Gap, CoronaIndex, Empty };
    Kind kind;
    std::string detail;
};

std::string to_string(Violation::Kind kind);

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks: no kite owned twice; covered region edge-connected; no uncovered
/// kite enclosed by the region; centre has corona 0, corona indices are
/// contiguous and every corona-n hat shares an edge with corona n-1.
ValidationReport validate_patch(const Patch& patch);

struct CoronaCensus {
    unsigned corona = 0;
    std::size_t total = 0;
    std::size_t normal = 0;
    std::size_t reflected = 0;
    friend bool operator==(const CoronaCensus&, const CoronaCensus&) = default;
};

std::vector<CoronaCensus> patch_census(const Patch& patch);

/// Source of patches for the analysis layer.
class PatchGenerator {
public:
    virtual ~PatchGenerator() = default;
    virtual Patch generate(const TilerConfig& cfg) = 0;
    virtual std::string name() const = 0;
};

class BacktrackingGenerator final : public PatchGenerator {
public:
    Patch generate(const TilerConfig& cfg) override { return grow_patch(cfg); }
    std::string name() const override { return "backtracking"; }
};

/// Hands back a patch obtained elsewhere (for example an imported file).
class FixedPatchGenerator final : public PatchGenerator {
public:
    explicit FixedPatchGenerator(Patch patch) : patch_(std::move(patch)) {}
    Patch generate(const TilerConfig&) override { return patch_; }
    std::string name() const override { return "import"; }

private:
    Patch patch_;
};

}  // namespace hatlab
