#include "hatlab/patch_io.hpp"

#include <cmath>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace hatlab {

using json = nlohmann::ordered_json;

std::string serialize_patch(const PatchFile& file) {
    json j;
    j["format"] = "hatlab-patch";
    j["version"] = kPatchFormatVersion;
    j["meta"] = {{"seed_chirality", to_string(file.meta.seed_chirality)},
                 {"coronas", file.meta.coronas},
                 {"generator", file.meta.generator}};
    j["center"] = file.patch.center;
    json placements = json::array();
    for (std::size_t i = 0; i < file.patch.placements.size(); ++i) {
        const Isometry& iso = file.patch.placements[i].iso;
        placements.push_back({{"mirror", iso.mirror() ? 1 : 0},
                              {"rot", iso.rot()},
                              {"q", iso.trans().q},
                              {"r", iso.trans().r},
                              {"corona", file.patch.corona_of.at(i)}});
    }
    j["placements"] = std::move(placements);
    return j.dump(2) + "\n";
}

namespace {

long long get_int(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw FormatError(where + ": missing \"" + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_number_integer()) throw FormatError(where + ": \"" + key + "\" must be an integer");
    return v.get<long long>();
}

std::string get_string(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw FormatError(where + ": missing \"" + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_string()) throw FormatError(where + ": \"" + key + "\" must be a string");
    return v.get<std::string>();
}

void check_range(long long value, long long lo, long long hi, const char* key, const std::string& where) {
    if (value < lo || value > hi) {
        throw FormatError(where + ": \"" + key + "\" out of range [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
    }
}

constexpr long long kCoordLimit = 1'000'000;

// Axial pose fields of a placement or tile.
Isometry read_axial(const json& obj, const std::string& where) {
    const long long mirror = get_int(obj, "mirror", where);
    const long long rot = get_int(obj, "rot", where);
    const long long q = get_int(obj, "q", where);
    const long long r = get_int(obj, "r", where);
    check_range(mirror, 0, 1, "mirror", where);
    check_range(rot, 0, 5, "rot", where);
    check_range(q, -kCoordLimit, kCoordLimit, "q", where);
    check_range(r, -kCoordLimit, kCoordLimit, "r", where);
    return Isometry(mirror == 1, static_cast<int>(rot), {static_cast<int>(q), static_cast<int>(r)});
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("not valid JSON: ") + e.what());
    }
}

void check_header(const json& j, const char* format, int version) {
    if (!j.is_object()) throw FormatError("top level must be an object");
    const std::string got = get_string(j, "format", "header");
    if (got != format) throw FormatError("format is \"" + got + "\", expected \"" + format + "\"");
    const long long v = get_int(j, "version", "header");
    if (v != version) throw FormatError("unsupported version " + std::to_string(v));
}

}  // namespace

PatchFile parse_patch(const std::string& text) {
    const json j = parse_json(text);
    check_header(j, "hatlab-patch", kPatchFormatVersion);

    PatchFile out;
    if (!j.contains("meta") || !j.at("meta").is_object()) throw FormatError("missing \"meta\" object");
    const json& meta = j.at("meta");
    try {
        out.meta.seed_chirality = parse_chirality(get_string(meta, "seed_chirality", "meta"));
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("meta: ") + e.what());
    }
    const long long coronas = get_int(meta, "coronas", "meta");
    check_range(coronas, 0, 1'000'000, "coronas", "meta");
    out.meta.coronas = static_cast<unsigned>(coronas);
    out.meta.generator = get_string(meta, "generator", "meta");
    if (out.meta.generator != "backtracking" && out.meta.generator != "import") {
        throw FormatError("meta: unknown generator \"" + out.meta.generator + "\"");
    }

    if (!j.contains("placements") || !j.at("placements").is_array()) throw FormatError("missing \"placements\" array");
    const json& list = j.at("placements");
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = "placement " + std::to_string(i);
        out.patch.placements.push_back(Placement{read_axial(list[i], where)});
        const long long corona = get_int(list[i], "corona", where);
        check_range(corona, 0, 1'000'000, "corona", where);
        out.patch.corona_of.push_back(static_cast<unsigned>(corona));
    }
    const long long center = get_int(j, "center", "header");
    if (center < 0 || (!list.empty() && static_cast<std::size_t>(center) >= list.size())) {
        throw FormatError("center index out of range");
    }
    out.patch.center = static_cast<std::size_t>(center);
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error reading " + path.string());
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("error writing " + path.string());
}

// ---------------------------------------------------------------- import

std::string to_string(ImportError::Kind kind) {
    switch (kind) {
        case ImportError::Kind::Parse: return "parse";
        case ImportError::Kind::Snap: return "snap";
        case ImportError::Kind::Validation: return "validation";
    }
    return "unknown";
}

namespace {

const double kHalfRoot3 = std::sqrt(3.0) / 2.0;

std::array<double, 2> lattice_to_cartesian(LatticePoint p) { return to_cartesian(p); }

std::array<double, 2> hex_to_cartesian(HexCoord h) {
    return {h.q + 0.5 * h.r, kHalfRoot3 * h.r};
}

}  // namespace

std::pair<std::array<double, 4>, std::array<double, 2>> cartesian_form(const Isometry& iso) {
    const Isometry linear(iso.mirror(), iso.rot(), {});
    const auto u = lattice_to_cartesian(linear.apply(LatticePoint{1, 0}));
    const auto w = lattice_to_cartesian(linear.apply(LatticePoint{0, 1}));
    // Columns: image of (1, 0) and image of (0, 1); the lattice vector (0, 1)
    // is (1/2, sqrt3/2) in Cartesian terms.
    const double c2x = (w[0] - 0.5 * u[0]) / kHalfRoot3;
    const double c2y = (w[1] - 0.5 * u[1]) / kHalfRoot3;
    return {{u[0], c2x, u[1], c2y}, hex_to_cartesian(iso.trans())};
}

std::optional<Isometry> snap_isometry(const std::array<double, 4>& m, const std::array<double, 2>& t,
                                      double tolerance) {
    for (double x : m)
        if (!std::isfinite(x)) return std::nullopt;
    if (!std::isfinite(t[0]) || !std::isfinite(t[1])) return std::nullopt;

    const double r = t[1] / kHalfRoot3;
    const double q = t[0] - 0.5 * r;
    if (std::abs(q) > kCoordLimit || std::abs(r) > kCoordLimit) return std::nullopt;
    const HexCoord trans{static_cast<int>(std::lround(q)), static_cast<int>(std::lround(r))};

    for (int mirror = 0; mirror <= 1; ++mirror) {
        for (int rot = 0; rot < 6; ++rot) {
            const Isometry candidate(mirror == 1, rot, trans);
            const auto [cm, ct] = cartesian_form(candidate);
            bool close = std::abs(ct[0] - t[0]) <= tolerance && std::abs(ct[1] - t[1]) <= tolerance;
            for (std::size_t i = 0; i < 4 && close; ++i) close = std::abs(cm[i] - m[i]) <= tolerance;
            if (close) return candidate;
        }
    }
    return std::nullopt;
}

namespace {

std::string index_list(const std::vector<std::size_t>& indices) {
    std::string out;
    for (std::size_t i = 0; i < indices.size(); ++i) out += (i ? ", " : "") + std::to_string(indices[i]);
    return out;
}

void validate_or_throw(const Patch& patch) {
    const ValidationReport report = validate_patch(patch);
    if (report.ok()) return;
    std::string message = "imported patch is invalid:";
    for (const Violation& v : report.violations) message += "\n  " + to_string(v.kind) + ": " + v.detail;
    throw ImportError(ImportError::Kind::Validation, message);
}

// Coronas as tile-adjacency distance from the centre; tiles out of reach are
// reported as a validation failure.
std::vector<unsigned> corona_by_distance(const std::vector<Placement>& tiles, std::size_t center) {
    std::map<KiteCoord, std::size_t> owner;
    for (std::size_t i = 0; i < tiles.size(); ++i)
        for (const KiteCoord& k : hat_kites(tiles[i])) owner.emplace(k, i);

    constexpr unsigned kUnset = ~0U;
    std::vector<unsigned> dist(tiles.size(), kUnset);
    std::deque<std::size_t> queue{center};
    dist[center] = 0;
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        for (const KiteCoord& k : hat_kites(tiles[i])) {
            for (const KiteCoord& n : kite_neighbors(k)) {
                const auto it = owner.find(n);
                if (it == owner.end() || dist[it->second] != kUnset) continue;
                dist[it->second] = dist[i] + 1;
                queue.push_back(it->second);
            }
        }
    }
    std::vector<std::size_t> unreached;
    for (std::size_t i = 0; i < tiles.size(); ++i)
        if (dist[i] == kUnset) unreached.push_back(i);
    if (!unreached.empty()) {
        throw ImportError(ImportError::Kind::Validation,
                          "tiles not connected to the centre tile: " + index_list(unreached), unreached);
    }
    return dist;
}

}  // namespace

PatchFile import_patch(const std::string& text) {
    json j;
    try {
        j = parse_json(text);
        if (!j.is_object()) throw FormatError("top level must be an object");
        if (get_string(j, "format", "header") == "hatlab-patch") {
            PatchFile file = parse_patch(text);
            validate_or_throw(file.patch);
            return file;
        }
        check_header(j, "hatlab-import", kImportFormatVersion);
        if (!j.contains("tiles") || !j.at("tiles").is_array()) throw FormatError("missing \"tiles\" array");
        if (j.at("tiles").empty()) throw FormatError("\"tiles\" is empty");
    } catch (const FormatError& e) {
        throw ImportError(ImportError::Kind::Parse, e.what());
    }

    const json& list = j.at("tiles");
    std::vector<Placement> tiles;
    std::vector<std::size_t> unsnapped;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const json& tile = list[i];
        const std::string where = "tile " + std::to_string(i);
        try {
            if (tile.is_object() && tile.contains("matrix")) {
                const json& m = tile.at("matrix");
                const json& t = tile.contains("translation") ? tile.at("translation") : json();
                auto numeric = [](const json& a, std::size_t n) {
                    if (!a.is_array() || a.size() != n) return false;
                    for (const json& x : a)
                        if (!x.is_number()) return false;
                    return true;
                };
                if (!numeric(m, 4)) throw FormatError(where + ": \"matrix\" must hold 4 numbers");
                if (!numeric(t, 2)) throw FormatError(where + ": \"translation\" must hold 2 numbers");
                const auto iso = snap_isometry({m[0].get<double>(), m[1].get<double>(), m[2].get<double>(),
                                                m[3].get<double>()},
                                               {t[0].get<double>(), t[1].get<double>()});
                if (!iso) {
                    unsnapped.push_back(i);
                    tiles.emplace_back();
                } else {
                    tiles.push_back(Placement{*iso});
                }
            } else {
                tiles.push_back(Placement{read_axial(tile, where)});
            }
        } catch (const FormatError& e) {
            throw ImportError(ImportError::Kind::Parse, e.what(), {i});
        }
    }
    if (!unsnapped.empty()) {
        throw ImportError(ImportError::Kind::Snap,
                          "transforms not within " + std::to_string(kSnapTolerance) +
                              " of a lattice isometry at tiles: " + index_list(unsnapped),
                          unsnapped);
    }

    std::size_t center = 0;
    if (j.contains("center")) {
        if (!j.at("center").is_number_integer()) throw ImportError(ImportError::Kind::Parse, "\"center\" must be an integer");
        const long long c = j.at("center").get<long long>();
        if (c < 0 || static_cast<std::size_t>(c) >= tiles.size()) {
            throw ImportError(ImportError::Kind::Parse, "\"center\" out of range");
        }
        center = static_cast<std::size_t>(c);
    }

    PatchFile out;
    out.patch.placements = tiles;
    out.patch.center = center;
    out.patch.corona_of = corona_by_distance(tiles, center);
    validate_or_throw(out.patch);
    out.meta.seed_chirality = tiles[center].chirality();
    out.meta.coronas = out.patch.max_corona();
    out.meta.generator = "import";
    return out;
}

}  // namespace hatlab
