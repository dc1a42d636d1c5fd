#include "hatlab/svg.hpp"

#include <array>
#include <sstream>
#include <vector>

namespace hatlab {

std::optional<ColorBy> parse_color_by(const std::string& text) {
    if (text == "chirality") return ColorBy::chirality;
    if (text == "ring") return ColorBy::ring;
    return std::nullopt;
}

namespace {

constexpr unsigned kDigits = 4;
constexpr const char* kNormalFill = "#9ecae1";
constexpr const char* kReflectedFill = "#08519c";
constexpr std::array<const char*, 8> kRingPalette{"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                                                  "#ff7f00", "#ffff33", "#a65628", "#f781bf"};

std::string num(const Sqrt3Number& x) { return to_decimal(x, kDigits); }

}  // namespace

std::string render_svg(const Patch& patch, ColorBy color_by) {
    // Outlines in exact coordinates, y flipped for SVG.
    std::vector<std::vector<ExactPoint>> outlines;
    for (const Placement& p : patch.placements) {
        const auto kites = hat_kites(p);
        std::vector<ExactPoint> outline;
        for (const LatticePoint& v : boundary_polygon(kites)) {
            const ExactPoint e = to_exact(v);
            outline.push_back({e.x, -e.y});
        }
        outlines.push_back(std::move(outline));
    }

    Sqrt3Number min_x, min_y, max_x(1), max_y(1);
    if (!outlines.empty()) {
        min_x = max_x = outlines.front().front().x;
        min_y = max_y = outlines.front().front().y;
        for (const auto& outline : outlines) {
            for (const ExactPoint& e : outline) {
                if (e.x < min_x) min_x = e.x;
                if (max_x < e.x) max_x = e.x;
                if (e.y < min_y) min_y = e.y;
                if (max_y < e.y) max_y = e.y;
            }
        }
    }
    const Sqrt3Number margin(1);
    const Sqrt3Number left = min_x - margin;
    const Sqrt3Number top = min_y - margin;
    const Sqrt3Number width = max_x - min_x + margin + margin;
    const Sqrt3Number height = max_y - min_y + margin + margin;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(left) << " " << num(top) << " " << num(width)
        << " " << num(height) << "\">\n";
    out << "<g stroke=\"#222222\" stroke-width=\"0.25\" stroke-linejoin=\"round\">\n";
    for (std::size_t i = 0; i < outlines.size(); ++i) {
        const char* fill = nullptr;
        if (color_by == ColorBy::chirality) {
            fill = patch.placements[i].chirality() == Chirality::Normal ? kNormalFill : kReflectedFill;
        } else {
            fill = kRingPalette[patch.corona_of.at(i) % kRingPalette.size()];
        }
        out << "<path fill=\"" << fill << "\" d=\"";
        for (std::size_t k = 0; k < outlines[i].size(); ++k) {
            out << (k == 0 ? "M " : " L ") << num(outlines[i][k].x) << " " << num(outlines[i][k].y);
        }
        out << " Z\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace hatlab
