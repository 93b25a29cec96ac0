#include "twobridge/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace twobridge {

namespace {

// Fixed styling; only geometry derives from the input.
constexpr Int kCell = 40;       // px per lattice unit
constexpr Int kLift = 8;        // px of extra height per revisit (1-D)
constexpr Int kDotRadius = 3;
constexpr Int kStartRadius = 9;

void svg_open(std::ostringstream& out, Int min_x, Int min_y, Int width, Int height) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << min_x << " "
        << min_y << " " << width << " " << height << "\">\n";
}

void svg_dot(std::ostringstream& out, Int cx, Int cy) {
    out << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << kDotRadius
        << "\" fill=\"#333333\"/>\n";
}

void svg_label(std::ostringstream& out, Int x, Int y, Coeff value) {
    out << "  <text x=\"" << x << "\" y=\"" << y
        << "\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\">"
        << value << "</text>\n";
}

std::string ascii_grid_1d(const WalkTrace1D& trace) {
    Int min_pos = trace.visit_counts.begin()->first;
    Int max_pos = trace.visit_counts.rbegin()->first;
    auto col = [&](Int pos) { return static_cast<std::size_t>(2 * (pos - min_pos)); };
    std::size_t width = col(max_pos) + 1;

    std::ostringstream out;
    out << "signs: ";
    for (int s : trace.steps) out << (s > 0 ? '+' : '-');
    out << "\n";

    // one row per walk vertex, connected so backtracking stays visible
    for (std::size_t k = 0; k < trace.positions.size(); ++k) {
        std::string row(width, ' ');
        row[col(trace.positions[k])] = k == 0 ? 'o' : '*';
        if (k > 0) {
            Int a = trace.positions[k - 1];
            Int b = trace.positions[k];
            row[col(std::min(a, b)) + 1] = b > a ? '\\' : '/';
        }
        out << "       " << row << "\n";
    }

    std::string axis(width, ' ');
    for (Int n = min_pos; n <= max_pos; ++n) axis[col(n)] = '.';
    out << "       " << axis << "\n";

    out << "counts:";
    for (const auto& [n, count] : trace.visit_counts) out << " " << count;
    out << "\ncoeffs:";
    Int leftmost = trace.visit_counts.begin()->first;
    for (const auto& [n, count] : trace.visit_counts) {
        out << " " << ((n - leftmost) % 2 == 0 ? count : -count);
    }
    out << "\n";
    return out.str();
}

std::string svg_1d(const WalkTrace1D& trace) {
    Int min_pos = trace.visit_counts.begin()->first;
    Int max_pos = trace.visit_counts.rbegin()->first;
    Int max_visits = 0;
    for (const auto& [n, count] : trace.visit_counts) max_visits = std::max(max_visits, count);

    // lattice axis at y = 0; the walk floats above it
    Int top = -kCell - max_visits * kLift;
    Int left = (min_pos - 1) * kCell;
    Int width = (max_pos - min_pos + 2) * kCell;
    Int height = -top + kCell;

    std::ostringstream out;
    svg_open(out, left, top, width, height);

    for (Int n = min_pos - 1; n <= max_pos + 1; ++n) svg_dot(out, n * kCell, 0);

    // per-revisit lift of each vertex
    std::map<Int, Int> seen;
    std::vector<std::pair<Int, Int>> coords;
    coords.reserve(trace.positions.size());
    for (Int pos : trace.positions) {
        Int lift = seen[pos]++;
        coords.emplace_back(pos * kCell, -kCell / 2 - lift * kLift);
    }

    out << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (k) out << " ";
        out << coords[k].first << "," << coords[k].second;
    }
    out << "\"/>\n";

    out << "  <circle cx=\"" << coords[0].first << "\" cy=\"" << coords[0].second
        << "\" r=\"" << kStartRadius
        << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";

    Int leftmost = trace.visit_counts.begin()->first;
    for (const auto& [n, count] : trace.visit_counts) {
        Coeff coeff = (n - leftmost) % 2 == 0 ? count : -count;
        svg_label(out, n * kCell, kCell / 2, coeff);
    }

    out << "</svg>\n";
    return out.str();
}

std::string ascii_grid_2d(const WalkTrace2D& trace) {
    Int min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    for (const auto& [pt, count] : trace.visit_counts) {
        min_x = std::min(min_x, pt[0]);
        max_x = std::max(max_x, pt[0]);
        min_y = std::min(min_y, pt[1]);
        max_y = std::max(max_y, pt[1]);
    }
    std::ostringstream out;
    for (Int y = max_y; y >= min_y; --y) {
        for (Int x = min_x; x <= max_x; ++x) {
            std::string cell;
            auto it = trace.visit_counts.find({x, y});
            if (it != trace.visit_counts.end()) {
                Coeff coeff = (x + y) % 2 == 0 ? it->second : -it->second;
                cell = std::to_string(coeff);
                if (x == 0 && y == 0) cell = "(" + cell + ")";
            } else {
                cell = ".";
            }
            while (cell.size() < 6) cell = " " + cell;
            out << cell;
        }
        out << "\n";
    }
    return out.str();
}

std::string svg_2d(const WalkTrace2D& trace) {
    Int min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    for (const auto& [pt, count] : trace.visit_counts) {
        min_x = std::min(min_x, pt[0]);
        max_x = std::max(max_x, pt[0]);
        min_y = std::min(min_y, pt[1]);
        max_y = std::max(max_y, pt[1]);
    }
    // svg y axis points down; flip the lattice y
    auto sx = [&](Int x) { return x * kCell; };
    auto sy = [&](Int y) { return -y * kCell; };

    Int left = sx(min_x - 1);
    Int top = sy(max_y + 1);
    Int width = (max_x - min_x + 2) * kCell;
    Int height = (max_y - min_y + 2) * kCell;

    std::ostringstream out;
    svg_open(out, left, top, width, height);

    for (Int y = min_y - 1; y <= max_y + 1; ++y) {
        for (Int x = min_x - 1; x <= max_x + 1; ++x) {
            svg_dot(out, sx(x), sy(y));
        }
    }

    out << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
    for (std::size_t k = 0; k < trace.positions.size(); ++k) {
        if (k) out << " ";
        out << sx(trace.positions[k][0]) << "," << sy(trace.positions[k][1]);
    }
    out << "\"/>\n";

    out << "  <circle cx=\"0\" cy=\"0\" r=\"" << kStartRadius
        << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";

    for (const auto& [pt, count] : trace.visit_counts) {
        Coeff coeff = (pt[0] + pt[1]) % 2 == 0 ? count : -count;
        svg_label(out, sx(pt[0]) + kCell / 3, sy(pt[1]) - kCell / 4, coeff);
    }

    out << "</svg>\n";
    return out.str();
}

} // namespace

std::string render_walk_1d(const WalkTrace1D& trace, RenderFormat format) {
    return format == RenderFormat::Svg ? svg_1d(trace) : ascii_grid_1d(trace);
}

std::string render_walk_2d(const WalkTrace2D& trace, RenderFormat format) {
    return format == RenderFormat::Svg ? svg_2d(trace) : ascii_grid_2d(trace);
}

} // namespace twobridge
