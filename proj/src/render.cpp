#include "arrowhead/render.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace arrowhead {

namespace {

std::string fmt6(double value) {
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "%.6f", value);
    return buffer;
}

void validate_color(const std::string& name, const std::string& value) {
    bool ok = value.size() == 7 && value[0] == '#';
    for (std::size_t i = 1; ok && i < value.size(); ++i) {
        ok = std::isxdigit(static_cast<unsigned char>(value[i])) != 0;
    }
    if (!ok) {
        throw std::invalid_argument(name + ": '" + value + "' is not a 6-digit hex color");
    }
}

void validate_chart_style(const ChartStyle& style) {
    validate_color("active_color", style.active_color);
    validate_color("inactive_color", style.inactive_color);
    validate_color("separator_color", style.separator_color);
    if (style.row_height_px <= 0 || style.total_width_px <= 0 || style.level_gap_px < 0) {
        throw std::invalid_argument("chart style sizes must be positive");
    }
}

std::string svg_open(double width, double height) {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           fmt6(width) + "\" height=\"" + fmt6(height) + "\" viewBox=\"0 0 " + fmt6(width) +
           " " + fmt6(height) + "\">\n";
}

void append_rect(std::string& out, double x, double y, double w, double h,
                 const std::string& fill) {
    out += "<rect x=\"" + fmt6(x) + "\" y=\"" + fmt6(y) + "\" width=\"" + fmt6(w) +
           "\" height=\"" + fmt6(h) + "\" fill=\"" + fill + "\"/>\n";
}

void append_line(std::string& out, double x1, double y1, double x2, double y2,
                 const std::string& stroke, double stroke_width) {
    out += "<line x1=\"" + fmt6(x1) + "\" y1=\"" + fmt6(y1) + "\" x2=\"" + fmt6(x2) +
           "\" y2=\"" + fmt6(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
           fmt6(stroke_width) + "\"/>\n";
}

} // namespace

Projection axis_pair(int i, int j) {
    Projection p;
    p.mode = Projection::Mode::AxisPair;
    p.axes = {i, j, 0};
    return p;
}

Projection orthographic(int i, int j, int k, double azimuth_deg, double elevation_deg) {
    Projection p;
    p.mode = Projection::Mode::Orthographic;
    p.axes = {i, j, k};
    p.azimuth_deg = azimuth_deg;
    p.elevation_deg = elevation_deg;
    return p;
}

namespace {

void validate_projection(const Projection& projection, int dimension) {
    const int used = projection.mode == Projection::Mode::AxisPair ? 2 : 3;
    for (int a = 0; a < used; ++a) {
        const int axis = projection.axes[static_cast<std::size_t>(a)];
        if (axis < 0 || axis >= dimension) {
            throw std::invalid_argument("projection axis " + std::to_string(axis) +
                                        " out of range for dimension " +
                                        std::to_string(dimension));
        }
        for (int b = 0; b < a; ++b) {
            if (projection.axes[static_cast<std::size_t>(b)] == axis) {
                throw std::invalid_argument("projection axes must be distinct");
            }
        }
    }
}

std::array<double, 2> project_one(std::span<const double> p, const Projection& projection) {
    if (projection.mode == Projection::Mode::AxisPair) {
        return {p[static_cast<std::size_t>(projection.axes[0])],
                p[static_cast<std::size_t>(projection.axes[1])]};
    }
    const double x = p[static_cast<std::size_t>(projection.axes[0])];
    const double y = p[static_cast<std::size_t>(projection.axes[1])];
    const double z = p[static_cast<std::size_t>(projection.axes[2])];
    const double az = projection.azimuth_deg * std::numbers::pi / 180.0;
    const double el = projection.elevation_deg * std::numbers::pi / 180.0;
    const double u = -std::sin(az) * x + std::cos(az) * y;
    const double v =
        -std::sin(el) * (std::cos(az) * x + std::sin(az) * y) + std::cos(el) * z;
    return {u, v};
}

} // namespace

std::vector<std::array<double, 2>> project_points(const Polyline& poly,
                                                  const Projection& projection) {
    validate_projection(projection, poly.dimension);
    std::vector<std::array<double, 2>> out;
    out.reserve(poly.point_count());
    for (std::size_t j = 0; j < poly.point_count(); ++j) {
        out.push_back(project_one(poly.point(j), projection));
    }
    return out;
}

ChartLayout layout_sequence_chart(std::span<const BinarySequence> sequences,
                                  const ChartStyle& style) {
    validate_chart_style(style);
    if (sequences.empty()) {
        throw std::invalid_argument("sequence chart: no sequences given");
    }
    const int dimension = sequences.front().dimension;
    for (std::size_t i = 0; i < sequences.size(); ++i) {
        if (sequences[i].dimension != dimension) {
            throw std::invalid_argument("sequence chart: sequences differ in dimension");
        }
        if (sequences[i].level != static_cast<int>(i) + 1) {
            throw std::invalid_argument("sequence chart: levels must run 1.." +
                                        std::to_string(sequences.size()) + " in order");
        }
    }

    ChartLayout layout;
    layout.width_px = style.total_width_px;
    layout.height_px = static_cast<double>(sequences.size()) * style.row_height_px +
                       static_cast<double>(sequences.size() - 1) * style.level_gap_px;
    for (const BinarySequence& seq : sequences) {
        ChartLayout::Band band;
        band.level = seq.level;
        band.cells = seq.bits;
        band.cell_width_px = style.total_width_px / static_cast<double>(seq.bits.size());
        band.group_size = seq.group_size();
        layout.bands.push_back(std::move(band));
    }
    return layout;
}

std::string render_sequence_chart(std::span<const BinarySequence> sequences,
                                  const ChartStyle& style) {
    const ChartLayout layout = layout_sequence_chart(sequences, style);
    std::string out = svg_open(layout.width_px, layout.height_px);
    double y = 0.0;
    for (const ChartLayout::Band& band : layout.bands) {
        for (std::size_t c = 0; c < band.cells.size(); ++c) {
            append_rect(out, static_cast<double>(c) * band.cell_width_px, y,
                        band.cell_width_px, style.row_height_px,
                        band.cells[c] ? style.active_color : style.inactive_color);
        }
        const std::size_t groups = band.cells.size() / band.group_size;
        const double group_width = band.cell_width_px * static_cast<double>(band.group_size);
        for (std::size_t g = 1; g < groups; ++g) {
            const double x = static_cast<double>(g) * group_width;
            append_line(out, x, y, x, y + style.row_height_px, style.separator_color, 1.0);
        }
        y += style.row_height_px + style.level_gap_px;
    }
    out += "</svg>\n";
    return out;
}

std::string render_curve_svg(const Polyline& poly, const Projection& projection,
                             const CurveStyle& style,
                             const std::vector<std::vector<Point>>* wireframe) {
    validate_color("stroke_color", style.stroke_color);
    validate_color("wireframe_color", style.wireframe_color);
    if (style.width_px <= 0 || style.height_px <= 0 || style.margin_px < 0) {
        throw std::invalid_argument("curve style sizes must be positive");
    }
    if (poly.point_count() < 2) {
        throw std::invalid_argument("render_curve_svg: polyline needs at least 2 points");
    }

    std::vector<std::array<double, 2>> curve = project_points(poly, projection);
    std::vector<std::vector<std::array<double, 2>>> frames;
    if (wireframe != nullptr) {
        frames.reserve(wireframe->size());
        for (const auto& simplex : *wireframe) {
            std::vector<std::array<double, 2>> frame;
            frame.reserve(simplex.size());
            for (const Point& p : simplex) {
                if (p.dim() != poly.dimension) {
                    throw std::invalid_argument("wireframe dimension mismatch");
                }
                frame.push_back(project_one(p.coords, projection));
            }
            frames.push_back(std::move(frame));
        }
    }

    if (style.rotate_display) {
        // Turn the chord from first to last curve point horizontal, so both
        // endpoints lie on the bottom of the drawing.
        const auto& first = curve.front();
        const auto& last = curve.back();
        const double theta = std::atan2(last[1] - first[1], last[0] - first[0]);
        const double c = std::cos(-theta);
        const double s = std::sin(-theta);
        auto rotate = [&](std::array<double, 2>& p) {
            const double dx = p[0] - first[0];
            const double dy = p[1] - first[1];
            p = {first[0] + c * dx - s * dy, first[1] + s * dx + c * dy};
        };
        for (auto& frame : frames) {
            for (auto& p : frame) {
                rotate(p);
            }
        }
        for (std::size_t j = curve.size(); j-- > 0;) {
            rotate(curve[j]);
        }
    }

    double min_x = std::numeric_limits<double>::max();
    double max_x = std::numeric_limits<double>::lowest();
    double min_y = min_x;
    double max_y = max_x;
    auto extend = [&](const std::array<double, 2>& p) {
        min_x = std::min(min_x, p[0]);
        max_x = std::max(max_x, p[0]);
        min_y = std::min(min_y, p[1]);
        max_y = std::max(max_y, p[1]);
    };
    for (const auto& p : curve) {
        extend(p);
    }
    for (const auto& frame : frames) {
        for (const auto& p : frame) {
            extend(p);
        }
    }

    const double span_x = std::max(max_x - min_x, 1e-12);
    const double span_y = std::max(max_y - min_y, 1e-12);
    const double scale = std::min((style.width_px - 2 * style.margin_px) / span_x,
                                  (style.height_px - 2 * style.margin_px) / span_y);
    const double offset_x = (style.width_px - scale * span_x) / 2.0;
    const double offset_y = (style.height_px - scale * span_y) / 2.0;
    auto to_svg = [&](const std::array<double, 2>& p) -> std::array<double, 2> {
        // y axis points up in the model, down in SVG.
        return {offset_x + (p[0] - min_x) * scale,
                style.height_px - offset_y - (p[1] - min_y) * scale};
    };

    std::string out = svg_open(style.width_px, style.height_px);
    for (const auto& frame : frames) {
        for (std::size_t a = 0; a < frame.size(); ++a) {
            for (std::size_t b = a + 1; b < frame.size(); ++b) {
                const auto pa = to_svg(frame[a]);
                const auto pb = to_svg(frame[b]);
                append_line(out, pa[0], pa[1], pb[0], pb[1], style.wireframe_color,
                            style.wireframe_width);
            }
        }
    }
    out += "<path d=\"";
    for (std::size_t j = 0; j < curve.size(); ++j) {
        const auto p = to_svg(curve[j]);
        out += (j == 0 ? "M " : " L ");
        out += fmt6(p[0]) + " " + fmt6(p[1]);
    }
    out += "\" fill=\"none\" stroke=\"" + style.stroke_color + "\" stroke-width=\"" +
           fmt6(style.stroke_width) + "\"/>\n</svg>\n";
    return out;
}

std::vector<std::vector<Point>> level_wireframe(const SimplexGeometry& geom, int level,
                                                std::uint64_t max_cells) {
    if (level < 0) {
        throw std::invalid_argument("level_wireframe: level must be >= 0");
    }
    const std::uint64_t cells = cell_count(geom.dimension(), level);
    if (cells > max_cells) {
        throw std::length_error("level_wireframe: " + std::to_string(cells) +
                                " cells exceed the cap of " + std::to_string(max_cells));
    }
    const int side = geom.dimension() + 1;
    std::vector<std::uint8_t> digits(static_cast<std::size_t>(level), 0);
    std::vector<std::vector<Point>> out;
    out.reserve(cells);
    for (std::uint64_t c = 0; c < cells; ++c) {
        std::uint64_t rest = c;
        // Lexicographic order: leftmost digit most significant.
        for (std::size_t i = digits.size(); i-- > 0;) {
            digits[i] = static_cast<std::uint8_t>(rest % static_cast<std::uint64_t>(side));
            rest /= static_cast<std::uint64_t>(side);
        }
        out.push_back(geom.simplex_vertices(digits));
    }
    return out;
}

KnitLayout layout_knit_chart(std::span<const BinarySequence> sequences, const KnitSpec& spec) {
    validate_color("main_color", spec.main_color);
    validate_color("active_color", spec.active_color);
    validate_color("inactive_color", spec.inactive_color);
    if (sequences.empty()) {
        throw std::invalid_argument("knit chart: no sequences given");
    }
    if (spec.stitches.size() != sequences.size()) {
        throw std::invalid_argument("knit chart: " + std::to_string(spec.stitches.size()) +
                                    " stitch counts for " + std::to_string(sequences.size()) +
                                    " levels");
    }
    if (spec.pattern_rows < 1 || spec.separator_rows < 0 || spec.edge_separator_rows < 0 ||
        spec.cell_px <= 0) {
        throw std::invalid_argument("knit chart: invalid row or cell configuration");
    }

    KnitLayout layout;
    layout.pattern_rows = spec.pattern_rows;
    layout.separator_rows = spec.separator_rows;
    layout.edge_separator_rows = spec.edge_separator_rows;
    for (std::size_t i = 0; i < sequences.size(); ++i) {
        const BinarySequence& seq = sequences[i];
        const int stitches = spec.stitches[i];
        const std::size_t entries = seq.bits.size();
        if (stitches <= 0) {
            throw std::invalid_argument("knit chart: level " + std::to_string(seq.level) +
                                        " has non-positive stitch count");
        }
        if (static_cast<std::size_t>(stitches) % entries != 0) {
            throw std::invalid_argument(
                "knit chart: level " + std::to_string(seq.level) + " has " +
                std::to_string(stitches) + " stitches, not divisible by its " +
                std::to_string(entries) + " sequence entries");
        }
        layout.levels.push_back({seq.level, stitches, entries,
                                 stitches / static_cast<int>(entries)});
        layout.columns = std::max(layout.columns, stitches);
    }
    layout.total_rows =
        2 * spec.edge_separator_rows +
        static_cast<int>(sequences.size()) * spec.pattern_rows +
        (static_cast<int>(sequences.size()) - 1) * spec.separator_rows;
    return layout;
}

std::string render_knit_chart(std::span<const BinarySequence> sequences,
                              const KnitSpec& spec) {
    const KnitLayout layout = layout_knit_chart(sequences, spec);
    const double width = static_cast<double>(layout.columns) * spec.cell_px;
    const double height = static_cast<double>(layout.total_rows) * spec.cell_px;

    std::string out = svg_open(width, height);
    append_rect(out, 0.0, 0.0, width, height, spec.main_color);

    double y = static_cast<double>(spec.edge_separator_rows) * spec.cell_px;
    const double band_height = static_cast<double>(spec.pattern_rows) * spec.cell_px;
    for (std::size_t i = 0; i < sequences.size(); ++i) {
        const BinarySequence& seq = sequences[i];
        // Entry boundaries align across levels: every level spans the full
        // width, wider stitches in the narrower levels.
        const double entry_px = width / static_cast<double>(seq.bits.size());
        for (std::size_t e = 0; e < seq.bits.size(); ++e) {
            append_rect(out, static_cast<double>(e) * entry_px, y, entry_px, band_height,
                        seq.bits[e] ? spec.active_color : spec.inactive_color);
        }
        y += band_height;
        if (i + 1 < sequences.size()) {
            y += static_cast<double>(spec.separator_rows) * spec.cell_px;
        }
    }
    out += "</svg>\n";
    return out;
}

std::string export_obj(const Polyline& poly, bool include_wireframe,
                       const SimplexGeometry& geom, std::uint64_t max_cells) {
    if (poly.dimension != geom.dimension()) {
        throw std::invalid_argument("export_obj: polyline and geometry dimensions differ");
    }
    if (poly.dimension > 3) {
        throw std::invalid_argument("export_obj: dimension " + std::to_string(poly.dimension) +
                                    " not exportable; project to 3 or fewer axes first");
    }

    std::string out = "# curve polyline: dimension " + std::to_string(poly.dimension) +
                      ", level " + std::to_string(poly.level) + "\n";
    auto append_vertex = [&](std::span<const double> p) {
        out += "v";
        for (std::size_t i = 0; i < 3; ++i) {
            out += " " + fmt6(i < p.size() ? p[i] : 0.0);
        }
        out += "\n";
    };

    for (std::size_t j = 0; j < poly.point_count(); ++j) {
        append_vertex(poly.point(j));
    }
    for (std::size_t j = 1; j < poly.point_count(); ++j) {
        out += "l " + std::to_string(j) + " " + std::to_string(j + 1) + "\n";
    }

    if (include_wireframe) {
        out += "# simplex wireframe\n";
        const auto simplices = level_wireframe(geom, poly.level, max_cells);
        std::size_t base = poly.point_count();
        for (const auto& simplex : simplices) {
            for (const Point& p : simplex) {
                append_vertex(p.coords);
            }
            for (std::size_t a = 0; a < simplex.size(); ++a) {
                for (std::size_t b = a + 1; b < simplex.size(); ++b) {
                    out += "l " + std::to_string(base + a + 1) + " " +
                           std::to_string(base + b + 1) + "\n";
                }
            }
            base += simplex.size();
        }
    }
    return out;
}

} // namespace arrowhead
