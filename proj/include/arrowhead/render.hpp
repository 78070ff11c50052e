#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arrowhead/analysis.hpp"
#include "arrowhead/curve.hpp"
#include "arrowhead/geometry.hpp"

namespace arrowhead {

/// Styling for binary-sequence charts. Colors are "#RRGGBB".
struct ChartStyle {
    std::string active_color = "#E8860C";
    std::string inactive_color = "#2A6FB8";
    std::string separator_color = "#000000";
    double row_height_px = 48.0;
    double total_width_px = 1024.0;
    double level_gap_px = 12.0;
};

/// Styling for projected curve drawings.
struct CurveStyle {
    std::string stroke_color = "#E8860C";
    double stroke_width = 1.5;
    std::string wireframe_color = "#B8B8B8";
    double wireframe_width = 0.5;
    double width_px = 800.0;
    double height_px = 800.0;
    double margin_px = 24.0;
    /// Rotate the drawing so the curve's endpoints lie on the bottom
    /// (display-time only; model coordinates are untouched).
    bool rotate_display = false;
};

/// Knitting-yoke chart parameters. stitches[i] is the stitch count of level
/// i+1 and must be divisible by that level's sequence entry count (d+1)^(n+1).
struct KnitSpec {
    std::vector<int> stitches;
    int pattern_rows = 9;
    int separator_rows = 6;
    /// Extra separator rows above the first and below the last level.
    int edge_separator_rows = 0;
    std::string main_color = "#F5F1E6";
    std::string active_color = "#1F3A93";
    std::string inactive_color = "#7FB3E8";
    double cell_px = 4.0;
};

/// Maps d-dimensional points to the drawing plane: either an axis pair kept
/// verbatim, or an axis triple through a fixed orthographic camera.
struct Projection {
    enum class Mode { AxisPair, Orthographic };
    Mode mode = Mode::AxisPair;
    std::array<int, 3> axes{0, 1, 2}; // first 2 (AxisPair) or 3 (Orthographic) used
    double azimuth_deg = 35.0;        // Orthographic only
    double elevation_deg = 30.0;
};

Projection axis_pair(int i, int j);
Projection orthographic(int i, int j, int k, double azimuth_deg = 35.0,
                        double elevation_deg = 30.0);

std::vector<std::array<double, 2>> project_points(const Polyline& poly,
                                                  const Projection& projection);

/// Cell-level layout of a sequence chart, exposed for verification before
/// serialization. Every band spans the same total width.
struct ChartLayout {
    struct Band {
        int level = 0;
        std::vector<std::uint8_t> cells; // activity bits in order
        double cell_width_px = 0.0;
        std::size_t group_size = 0;
    };
    std::vector<Band> bands;
    double width_px = 0.0;
    double height_px = 0.0;
};

ChartLayout layout_sequence_chart(std::span<const BinarySequence> sequences,
                                  const ChartStyle& style);
std::string render_sequence_chart(std::span<const BinarySequence> sequences,
                                  const ChartStyle& style);

std::string render_curve_svg(const Polyline& poly, const Projection& projection,
                             const CurveStyle& style,
                             const std::vector<std::vector<Point>>* wireframe = nullptr);

/// Vertices of every contracted simplex of the given level, in lexicographic
/// address order. Feeds the wireframe underlay and OBJ export.
std::vector<std::vector<Point>> level_wireframe(const SimplexGeometry& geom, int level,
                                                std::uint64_t max_cells = default_cell_cap);

/// Stitch-level layout of a knitting chart, exposed for verification.
struct KnitLayout {
    struct LevelBand {
        int level = 0;
        int stitches = 0;
        std::size_t entries = 0;
        int stitches_per_entry = 0;
    };
    std::vector<LevelBand> levels;
    int pattern_rows = 0;
    int separator_rows = 0;
    int edge_separator_rows = 0;
    int total_rows = 0;
    int columns = 0; // = max stitches
};

KnitLayout layout_knit_chart(std::span<const BinarySequence> sequences, const KnitSpec& spec);
std::string render_knit_chart(std::span<const BinarySequence> sequences, const KnitSpec& spec);

/// Wavefront OBJ with "v" and "l" records. Dimensions below 3 are padded
/// with zero coordinates; dimensions above 3 must be projected first.
std::string export_obj(const Polyline& poly, bool include_wireframe,
                       const SimplexGeometry& geom,
                       std::uint64_t max_cells = default_cell_cap);

} // namespace arrowhead
