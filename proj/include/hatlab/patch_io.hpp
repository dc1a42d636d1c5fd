#pragma once

// Patch files and the import path for externally produced placement lists.
//
// Patch file (JSON):
//   {"format": "hatlab-patch", "version": 1,
//    "meta": {"seed_chirality": "reflected", "coronas": 3, "generator": "backtracking"},
//    "center": 0,
//    "placements": [{"mirror": 1, "rot": 0, "q": 0, "r": 0, "corona": 0}, ...]}
//
// Import file (JSON):
//   {"format": "hatlab-import", "version": 1, "center": 0,
//    "tiles": [{"mirror": 0, "rot": 2, "q": 1, "r": -1},
//              {"matrix": [a, b, c, d], "translation": [x, y]}, ...]}
// A matrix tile maps the prototype hat by x' = [a b; c d] x + t in Cartesian
// coordinates where neighbouring hexagon centres are 1 apart. Entries must lie
// within 1e-9 of a lattice isometry. Coronas are the tile-adjacency distance
// from the centre tile. A hatlab-patch file is also accepted as import input.

#include <array>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hatlab/tiler.hpp"

namespace hatlab {

inline constexpr int kPatchFormatVersion = 1;
inline constexpr int kImportFormatVersion = 1;
inline constexpr double kSnapTolerance = 1e-9;

struct PatchMeta {
    Chirality seed_chirality = Chirality::Reflected;
    unsigned coronas = 0;
    std::string generator = "backtracking";
    friend bool operator==(const PatchMeta&, const PatchMeta&) = default;
};

struct PatchFile {
    PatchMeta meta;
    Patch patch;
    friend bool operator==(const PatchFile&, const PatchFile&) = default;
};

/// Malformed or unsupported patch text.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string serialize_patch(const PatchFile& file);
/// Throws FormatError, including for versions other than kPatchFormatVersion.
PatchFile parse_patch(const std::string& text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

class ImportError : public std::runtime_error {
public:
    enum class Kind { Parse, Snap, Validation };
    ImportError(Kind kind, std::string message, std::vector<std::size_t> tiles = {})
        : std::runtime_error(std::move(message)), kind_(kind), tiles_(std::move(tiles)) {}
    Kind kind() const { return kind_; }
    /// Indices of the offending tiles, when the failure is tied to tiles.
    const std::vector<std::size_t>& tiles() const { return tiles_; }

private:
    Kind kind_;
    std::vector<std::size_t> tiles_;
};

std::string to_string(ImportError::Kind kind);

/// Lattice isometry whose Cartesian action is x -> m x + t, or nothing when
/// no pose lies within `tolerance` of (m, t).
std::optional<Isometry> snap_isometry(const std::array<double, 4>& m, const std::array<double, 2>& t,
                                      double tolerance = kSnapTolerance);

/// Cartesian form (matrix, translation) of a lattice isometry.
std::pair<std::array<double, 4>, std::array<double, 2>> cartesian_form(const Isometry& iso);

/// Parses an import (or patch) file and returns a validated patch with
/// meta.generator = "import". Throws ImportError.
PatchFile import_patch(const std::string& text);

}  // namespace hatlab
