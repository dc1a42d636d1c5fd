#include "hatlab/tiler.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace hatlab {

unsigned Patch::max_corona() const {
    unsigned out = 0;
    for (unsigned c : corona_of) out = std::max(out, c);
    return out;
}

std::map<KiteCoord, std::size_t> Patch::owner() const {
    std::map<KiteCoord, std::size_t> out;
    for (std::size_t i = 0; i < placements.size(); ++i) {
        for (const KiteCoord& k : hat_kites(placements[i])) out.emplace(k, i);
    }
    return out;
}

namespace {

struct KiteHash {
    std::size_t operator()(const KiteCoord& k) const noexcept {
        std::uint64_t h = static_cast<std::uint32_t>(k.q) * 0x9E3779B97F4A7C15ULL;
        h ^= (static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.r)) * 8 + static_cast<std::uint64_t>(k.v)) *
             0xC2B2AE3D27D4EB4FULL;
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

using KiteSet = std::unordered_set<KiteCoord, KiteHash>;

// A hat pose that puts one of its kites on a given kite: the placement is
// linear followed by translation to (kite hex + offset).
struct Candidate {
    bool mirror;
    int rot;
    HexCoord offset;
};

// Indexed by kite v; each list is in candidate order (mirror, rot, offset).
const std::array<std::vector<Candidate>, 6>& candidate_table() {
    static const auto table = [] {
        std::array<std::vector<Candidate>, 6> out;
        for (int v = 0; v < 6; ++v) {
            for (int mirror = 0; mirror <= 1; ++mirror) {
                for (int rot = 0; rot < 6; ++rot) {
                    const Isometry linear(mirror == 1, rot, {});
                    std::vector<Candidate> group;
                    for (const KiteCoord& p : kHatProto) {
                        const KiteCoord image = linear.apply(p);
                        if (image.v == v) group.push_back({mirror == 1, rot, -image.hex()});
                    }
                    std::sort(group.begin(), group.end(),
                              [](const Candidate& a, const Candidate& b) { return a.offset < b.offset; });
                    out[v].insert(out[v].end(), group.begin(), group.end());
                }
            }
        }
        return out;
    }();
    return table;
}

// Hat kites for each linear pose (mirror * 6 + rot) at zero translation.
const std::array<std::array<KiteCoord, 8>, 12>& pose_table() {
    static const auto table = [] {
        std::array<std::array<KiteCoord, 8>, 12> out{};
        for (int mirror = 0; mirror <= 1; ++mirror)
            for (int rot = 0; rot < 6; ++rot)
                out[mirror * 6 + rot] = hat_kites(Placement{Isometry(mirror == 1, rot, {})});
        return out;
    }();
    return table;
}

std::array<KiteCoord, 8> kites_of(bool mirror, int rot, HexCoord trans) {
    auto out = pose_table()[(mirror ? 6 : 0) + rot];
    for (KiteCoord& k : out) {
        k.q += trans.q;
        k.r += trans.r;
    }
    return out;
}

class TilerState {
public:
    explicit TilerState(Patch patch) : patch_(std::move(patch)) {
        for (std::size_t i = 0; i < patch_.placements.size(); ++i) {
            for (const KiteCoord& k : hat_kites(patch_.placements[i])) cover_.emplace(k, i);
        }
    }

    const Patch& patch() const { return patch_; }
    bool covered(const KiteCoord& k) const { return cover_.count(k) != 0; }

    bool fits(const std::array<KiteCoord, 8>& kites) const {
        return std::none_of(kites.begin(), kites.end(), [&](const KiteCoord& k) { return covered(k); });
    }

    bool touches_covered(const KiteCoord& k) const {
        for (const KiteCoord& n : kite_neighbors(k))
            if (covered(n)) return true;
        return false;
    }

    bool coverable(const KiteCoord& k) const {
        for (const Candidate& c : candidate_table()[k.v]) {
            if (fits(kites_of(c.mirror, c.rot, k.hex() + c.offset))) return true;
        }
        return false;
    }

    void place(const Placement& p, const std::array<KiteCoord, 8>& kites, unsigned corona) {
        const std::size_t index = patch_.placements.size();
        patch_.placements.push_back(p);
        patch_.corona_of.push_back(corona);
        for (const KiteCoord& k : kites) cover_.emplace(k, index);
    }

    void unplace(const std::array<KiteCoord, 8>& kites) {
        for (const KiteCoord& k : kites) cover_.erase(k);
        patch_.placements.pop_back();
        patch_.corona_of.pop_back();
    }

    // Every uncovered kite next to the freshly placed hat, or near enough to
    // have lost candidates to it, must still admit some hat.
    bool still_coverable_near(const std::array<KiteCoord, 8>& kites) const {
        std::set<HexCoord> hexes;
        for (const KiteCoord& k : kites) {
            hexes.insert(k.hex());
            for (int d = 0; d < 6; ++d) hexes.insert(k.hex() + hex_direction(d));
        }
        for (const HexCoord& h : hexes) {
            for (int v = 0; v < 6; ++v) {
                const KiteCoord x{h.q, h.r, v};
                if (covered(x) || !touches_covered(x)) continue;
                if (!coverable(x)) return false;
            }
        }
        return true;
    }

    std::vector<KiteCoord> frontier() const {
        std::set<KiteCoord> out;
        for (const auto& [k, owner] : cover_) {
            for (const KiteCoord& n : kite_neighbors(k))
                if (!covered(n)) out.insert(n);
        }
        return {out.begin(), out.end()};
    }

private:
    Patch patch_;
    std::unordered_map<KiteCoord, std::size_t, KiteHash> cover_;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;
    bool horizon_hit = false;
};

struct BudgetExhausted {};

class CoronaSearch {
public:
    CoronaSearch(TilerState& state, const TilerConfig& cfg, unsigned corona, SearchStats& stats)
        : state_(state), corona_(corona), stats_(stats), frontier_(state.frontier()) {
        // Kite-step distances outward from the covered region, up to the horizon.
        std::deque<KiteCoord> queue;
        for (const KiteCoord& k : frontier_) {
            reach_.emplace(k, 1);
            queue.push_back(k);
        }
        while (!queue.empty()) {
            const KiteCoord k = queue.front();
            queue.pop_front();
            const unsigned d = reach_.at(k);
            if (d >= cfg.search_horizon) continue;
            for (const KiteCoord& n : kite_neighbors(k)) {
                if (state_.covered(n) || reach_.count(n)) continue;
                reach_.emplace(n, d + 1);
                queue.push_back(n);
            }
        }
    }

    bool run(const std::function<bool()>& on_complete) { return step(0, on_complete); }

private:
    bool within_horizon(const std::array<KiteCoord, 8>& kites) const {
        return std::all_of(kites.begin(), kites.end(), [&](const KiteCoord& k) { return reach_.count(k) != 0; });
    }

    bool step(std::size_t cursor, const std::function<bool()>& on_complete) {
        if (++stats_.nodes > stats_.budget) throw BudgetExhausted{};
        while (cursor < frontier_.size() && state_.covered(frontier_[cursor])) ++cursor;
        if (cursor == frontier_.size()) return on_complete();

        const KiteCoord target = frontier_[cursor];
        for (const Candidate& c : candidate_table()[target.v]) {
            const HexCoord trans = target.hex() + c.offset;
            const auto kites = kites_of(c.mirror, c.rot, trans);
            if (!state_.fits(kites)) continue;
            if (!within_horizon(kites)) {
                stats_.horizon_hit = true;
                continue;
            }
            state_.place(Placement{Isometry(c.mirror, c.rot, trans)}, kites, corona_);
            if (state_.still_coverable_near(kites) && step(cursor + 1, on_complete)) return true;
            state_.unplace(kites);
        }
        return false;
    }

    TilerState& state_;
    unsigned corona_;
    SearchStats& stats_;
    std::vector<KiteCoord> frontier_;
    std::unordered_map<KiteCoord, unsigned, KiteHash> reach_;
};

thread_local std::uint64_t g_last_nodes = 0;

[[noreturn]] void fail(const SearchStats& stats, const Patch& partial, bool budget, unsigned corona) {
    g_last_nodes = stats.nodes;
    const std::string where = " (corona " + std::to_string(corona) + ", " + std::to_string(stats.nodes) + " nodes)";
    if (budget) {
        throw SearchError(SearchError::Kind::SearchExhausted, "search node budget exhausted" + where, partial,
                          stats.nodes);
    }
    if (stats.horizon_hit) {
        throw SearchError(SearchError::Kind::HorizonExceeded,
                          "no completion within the search horizon" + where, partial, stats.nodes);
    }
    throw SearchError(SearchError::Kind::SearchExhausted, "no corona completion exists" + where, partial,
                      stats.nodes);
}

}  // namespace

std::uint64_t last_search_nodes() { return g_last_nodes; }

Patch seed_patch(const TilerConfig& cfg) {
    Patch out;
    out.placements.push_back(Placement{Isometry(cfg.seed_chirality == Chirality::Reflected, 0, {})});
    out.corona_of.push_back(0);
    out.center = 0;
    return out;
}

Patch grow_corona(const Patch& patch, const TilerConfig& cfg) {
    TilerState state(patch);
    SearchStats stats{0, cfg.node_budget, false};
    const unsigned corona = patch.placements.empty() ? 0 : patch.max_corona() + 1;
    Patch result;
    bool found = false;
    try {
        CoronaSearch search(state, cfg, corona, stats);
        found = search.run([&] {
            result = state.patch();
            return true;
        });
    } catch (const BudgetExhausted&) {
        fail(stats, patch, true, corona);
    }
    if (!found) fail(stats, patch, false, corona);
    g_last_nodes = stats.nodes;
    return result;
}

Patch grow_patch(const TilerConfig& cfg) {
    TilerState state(seed_patch(cfg));
    SearchStats stats{0, cfg.node_budget, false};
    Patch deepest = state.patch();
    unsigned deepest_level = 0;
    Patch result;

    std::function<bool(unsigned)> grow = [&](unsigned level) -> bool {
        if (level > cfg.max_coronas) {
            result = state.patch();
            return true;
        }
        if (level > deepest_level + 1 || (level == deepest_level + 1 && deepest.size() < state.patch().size())) {
            deepest = state.patch();
            deepest_level = level - 1;
        }
        CoronaSearch search(state, cfg, level, stats);
        return search.run([&] { return grow(level + 1); });
    };

    bool found = false;
    try {
        found = grow(1);
    } catch (const BudgetExhausted&) {
        fail(stats, deepest, true, deepest_level + 1);
    }
    if (!found) fail(stats, deepest, false, deepest_level + 1);
    g_last_nodes = stats.nodes;
    return result;
}

// ---------------------------------------------------------------- validation

std::string to_string(Violation::Kind kind) {
    switch (kind) {
        case Violation::Kind::DoubleOwned: return "double-owned";
        case Violation::Kind::Disconnected: return "disconnected";
        case Violation::Kind::Gap: return "gap";
        case Violation::Kind::CoronaIndex: return "corona-index";
        case Violation::Kind::Empty: return "empty";
    }
    return "unknown";
}

ValidationReport validate_patch(const Patch& patch) {
    ValidationReport report;
    auto add = [&](Violation::Kind kind, std::string detail) { report.violations.push_back({kind, std::move(detail)}); };

    if (patch.placements.empty()) {
        add(Violation::Kind::Empty, "patch has no placements");
        return report;
    }
    if (patch.corona_of.size() != patch.placements.size()) {
        add(Violation::Kind::CoronaIndex, "corona list length differs from placement count");
        return report;
    }
    if (patch.center >= patch.placements.size()) {
        add(Violation::Kind::CoronaIndex, "centre index out of range");
        return report;
    }

    // Ownership: each kite of each placement must belong to that placement alone.
    std::map<KiteCoord, std::size_t> owner;
    for (std::size_t i = 0; i < patch.placements.size(); ++i) {
        for (const KiteCoord& k : hat_kites(patch.placements[i])) {
            auto [it, inserted] = owner.emplace(k, i);
            if (!inserted) {
                add(Violation::Kind::DoubleOwned, "kite " + to_string(k) + " covered by placements " +
                                                      std::to_string(it->second) + " and " + std::to_string(i));
            }
        }
    }

    std::vector<KiteCoord> covered;
    covered.reserve(owner.size());
    for (const auto& [k, i] : owner) covered.push_back(k);
    if (!is_edge_connected(covered)) add(Violation::Kind::Disconnected, "covered region is not edge-connected");

    // Gaps: uncovered kites inside the bounding box that cannot reach its rim.
    int min_q = covered.front().q, max_q = min_q, min_r = covered.front().r, max_r = min_r;
    for (const KiteCoord& k : covered) {
        min_q = std::min(min_q, k.q);
        max_q = std::max(max_q, k.q);
        min_r = std::min(min_r, k.r);
        max_r = std::max(max_r, k.r);
    }
    --min_q;
    --min_r;
    ++max_q;
    ++max_r;
    auto inside_box = [&](const KiteCoord& k) { return k.q >= min_q && k.q <= max_q && k.r >= min_r && k.r <= max_r; };
    std::set<KiteCoord> outside;
    std::vector<KiteCoord> stack;
    for (int q = min_q; q <= max_q; ++q)
        for (int r = min_r; r <= max_r; ++r) {
            if (q != min_q && q != max_q && r != min_r && r != max_r) continue;
            for (int v = 0; v < 6; ++v) {
                const KiteCoord k{q, r, v};
                if (!owner.count(k) && outside.insert(k).second) stack.push_back(k);
            }
        }
    while (!stack.empty()) {
        const KiteCoord k = stack.back();
        stack.pop_back();
        for (const KiteCoord& n : kite_neighbors(k)) {
            if (!inside_box(n) || owner.count(n)) continue;
            if (outside.insert(n).second) stack.push_back(n);
        }
    }
    for (int q = min_q; q <= max_q; ++q)
        for (int r = min_r; r <= max_r; ++r)
            for (int v = 0; v < 6; ++v) {
                const KiteCoord k{q, r, v};
                if (!owner.count(k) && !outside.count(k)) {
                    add(Violation::Kind::Gap, "uncovered kite " + to_string(k) + " is enclosed by the patch");
                }
            }

    // Corona bookkeeping.
    if (patch.corona_of[patch.center] != 0) add(Violation::Kind::CoronaIndex, "centre is not in corona 0");
    const unsigned top = patch.max_corona();
    std::vector<std::size_t> per_corona(top + 1, 0);
    for (unsigned c : patch.corona_of) ++per_corona[c];
    if (per_corona[0] != 1) add(Violation::Kind::CoronaIndex, "corona 0 must hold exactly the centre");
    for (unsigned c = 0; c <= top; ++c) {
        if (per_corona[c] == 0) add(Violation::Kind::CoronaIndex, "corona " + std::to_string(c) + " is empty");
    }
    for (std::size_t i = 0; i < patch.placements.size(); ++i) {
        const unsigned c = patch.corona_of[i];
        if (c == 0) continue;
        bool touches = false;
        for (const KiteCoord& k : hat_kites(patch.placements[i])) {
            for (const KiteCoord& n : kite_neighbors(k)) {
                auto it = owner.find(n);
                if (it != owner.end() && patch.corona_of[it->second] + 1 == c) touches = true;
            }
        }
        if (!touches) {
            add(Violation::Kind::CoronaIndex, "placement " + std::to_string(i) + " in corona " + std::to_string(c) +
                                                  " does not touch corona " + std::to_string(c - 1));
        }
    }
    return report;
}

std::vector<CoronaCensus> patch_census(const Patch& patch) {
    std::vector<CoronaCensus> out(patch.placements.empty() ? 0 : patch.max_corona() + 1);
    for (unsigned c = 0; c < out.size(); ++c) out[c].corona = c;
    for (std::size_t i = 0; i < patch.placements.size(); ++i) {
        CoronaCensus& row = out[patch.corona_of.at(i)];
        ++row.total;
        if (patch.placements[i].chirality() == Chirality::Normal) {
            ++row.normal;
        } else {
            ++row.reflected;
        }
    }
    return out;
}

}  // namespace hatlab
