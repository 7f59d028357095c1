#pragma once

// SVG rendering of frame representations: one rect per frame, labelled by
// vertex id. Frames involved in violations are flagged with a CSS class.

#include <set>
#include <sstream>
#include <string>

#include "rfg/frame.hpp"

namespace rfg {

inline std::string emit_svg(const FrameRepresentation& rep) {
    auto violations = validate(rep);
    std::set<int> flagged;
    for (const auto& v : violations)
        for (int f : v.frames) flagged.insert(f);

    std::int64_t x1 = 0, x2 = 1, y1 = 0, y2 = 1;
    if (!rep.frames.empty()) {
        x1 = rep.frames[0].x1;
        x2 = rep.frames[0].x2;
        y1 = rep.frames[0].y1;
        y2 = rep.frames[0].y2;
        for (const auto& f : rep.frames) {
            x1 = std::min(x1, f.x1);
            x2 = std::max(x2, f.x2);
            y1 = std::min(y1, f.y1);
            y2 = std::max(y2, f.y2);
        }
    }
    double w = static_cast<double>(x2 - x1), h = static_cast<double>(y2 - y1);
    double mx = w * 0.05 + 1.0, my = h * 0.05 + 1.0;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (x1 - mx) << " " << (y1 - my) << " "
        << (w + 2 * mx) << " " << (h + 2 * my) << "\">\n";
    out << "  <style>rect{fill:none;stroke:#333;stroke-width:" << std::max(1.0, (w + h) / 400.0)
        << "}rect.violation{stroke:#c22;stroke-dasharray:2}text{font-size:" << std::max(2.0, (w + h) / 60.0)
        << "px;fill:#555}</style>\n";
    for (int i = 0; i < static_cast<int>(rep.frames.size()); ++i) {
        const auto& f = rep.frames[i];
        out << "  <rect";
        if (flagged.count(i)) out << " class=\"violation\"";
        out << " x=\"" << f.x1 << "\" y=\"" << f.y1 << "\" width=\"" << (f.x2 - f.x1) << "\" height=\""
            << (f.y2 - f.y1) << "\"/>\n";
        out << "  <text x=\"" << f.x1 << "\" y=\"" << f.y1 << "\">" << f.vertex << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace rfg
