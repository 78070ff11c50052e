#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "arrowhead/render.hpp"

using namespace arrowhead;

namespace {

std::vector<BinarySequence> sequences_for(const ReproductionRule& rule, int levels) {
    std::vector<BinarySequence> out;
    for (int n = 1; n <= levels; ++n) {
        out.push_back(binary_sequence(expand_addresses(rule, n)));
    }
    return out;
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

} // namespace

TEST_CASE("sequence chart bands shrink by d+1 per level") {
    const auto seqs = sequences_for(*find_preset("r1", 3), 3);
    const ChartStyle style;
    const ChartLayout layout = layout_sequence_chart(seqs, style);

    REQUIRE(layout.bands.size() == 3);
    CHECK(layout.bands[0].cells.size() == 16);
    CHECK(layout.bands[1].cells.size() == 64);
    CHECK(layout.bands[2].cells.size() == 256);
    for (const auto& band : layout.bands) {
        CHECK(band.cell_width_px * static_cast<double>(band.cells.size()) ==
              doctest::Approx(style.total_width_px));
        CHECK(band.group_size == 4);
    }
    CHECK(layout.bands[0].cell_width_px ==
          doctest::Approx(layout.bands[1].cell_width_px * 4));

    // One simplex group spans total width / (d+1)^n.
    const double group_width = layout.bands[1].cell_width_px * 4;
    CHECK(group_width == doctest::Approx(style.total_width_px / 16.0));
}

TEST_CASE("dimension-7 chart has the expected cell counts") {
    const auto seqs = sequences_for(*find_preset("r3", 7), 3);
    const ChartLayout layout = layout_sequence_chart(seqs, ChartStyle{});
    CHECK(layout.bands[0].cells.size() == 64);
    CHECK(layout.bands[1].cells.size() == 512);
    CHECK(layout.bands[2].cells.size() == 4096);
}

TEST_CASE("a symmetric sequence renders to a mirror-symmetric band") {
    const auto seqs = sequences_for(canonical_rule(2), 2);
    const ChartLayout layout = layout_sequence_chart(seqs, ChartStyle{});
    for (const auto& band : layout.bands) {
        std::vector<std::uint8_t> reversed(band.cells.rbegin(), band.cells.rend());
        CHECK(reversed == band.cells);
    }
}

TEST_CASE("sequence chart validates input") {
    const ChartStyle style;
    CHECK_THROWS_AS(layout_sequence_chart({}, style), std::invalid_argument);

    auto seqs = sequences_for(canonical_rule(2), 2);
    std::swap(seqs[0], seqs[1]);
    CHECK_THROWS_AS(layout_sequence_chart(seqs, style), std::invalid_argument);

    ChartStyle bad_color;
    bad_color.active_color = "orange";
    const auto good = sequences_for(canonical_rule(2), 1);
    CHECK_THROWS_AS(layout_sequence_chart(good, bad_color), std::invalid_argument);

    ChartStyle bad_size;
    bad_size.row_height_px = 0;
    CHECK_THROWS_AS(layout_sequence_chart(good, bad_size), std::invalid_argument);
}

TEST_CASE("chart SVG is byte-deterministic") {
    const auto seqs = sequences_for(*find_preset("r2", 3), 2);
    const std::string a = render_sequence_chart(seqs, ChartStyle{});
    const std::string b = render_sequence_chart(seqs, ChartStyle{});
    CHECK(a == b);
    CHECK(a.rfind("<?xml", 0) == 0);
    CHECK(count_occurrences(a, "<rect") == 16 + 64);
}

TEST_CASE("projections") {
    const SimplexGeometry geom(2);
    const Polyline poly = curve_polyline(geom, expand_addresses(canonical_rule(2), 2));

    const auto identity = project_points(poly, axis_pair(0, 1));
    REQUIRE(identity.size() == poly.point_count());
    for (std::size_t j = 0; j < identity.size(); ++j) {
        CHECK(identity[j][0] == poly.point(j)[0]);
        CHECK(identity[j][1] == poly.point(j)[1]);
    }

    CHECK_THROWS_AS(project_points(poly, axis_pair(0, 2)), std::invalid_argument);
    CHECK_THROWS_AS(project_points(poly, axis_pair(1, 1)), std::invalid_argument);

    const SimplexGeometry geom3(3);
    const Polyline poly3 = curve_polyline(geom3, expand_addresses(*find_preset("r1", 3), 2));
    CHECK(project_points(poly3, axis_pair(0, 1)).size() == 17);
    CHECK(project_points(poly3, orthographic(0, 1, 2)).size() == 17);
    CHECK_THROWS_AS(project_points(poly, orthographic(0, 1, 2)), std::invalid_argument);
}

TEST_CASE("curve SVG holds one path point per polyline point") {
    const SimplexGeometry geom(2);
    const Polyline poly = curve_polyline(geom, expand_addresses(canonical_rule(2), 6));
    REQUIRE(poly.point_count() == 730);

    CurveStyle style;
    style.rotate_display = true;
    const std::string svg = render_curve_svg(poly, axis_pair(0, 1), style);
    CHECK(count_occurrences(svg, " L ") == 729);
    CHECK(render_curve_svg(poly, axis_pair(0, 1), style) == svg);

    const SimplexGeometry geom3(3);
    const Polyline poly3 = curve_polyline(geom3, expand_addresses(*find_preset("r1", 3), 2));
    const std::string svg3 = render_curve_svg(poly3, axis_pair(0, 1), CurveStyle{});
    CHECK(count_occurrences(svg3, " L ") == 16);
}

TEST_CASE("curve SVG with wireframe underlay") {
    const SimplexGeometry geom(3);
    const Polyline poly = curve_polyline(geom, expand_addresses(*find_preset("r1", 3), 1));
    const auto frames = level_wireframe(geom, 1);
    REQUIRE(frames.size() == 4);
    for (const auto& simplex : frames) {
        CHECK(simplex.size() == 4);
    }
    const std::string svg =
        render_curve_svg(poly, orthographic(0, 1, 2), CurveStyle{}, &frames);
    CHECK(count_occurrences(svg, "<line") == 4 * 6);
}

TEST_CASE("display rotation puts the endpoints on the bottom") {
    const SimplexGeometry geom(2);
    const Polyline poly = curve_polyline(geom, expand_addresses(canonical_rule(2), 3));

    CurveStyle style;
    style.rotate_display = true;
    const std::string svg = render_curve_svg(poly, axis_pair(0, 1), style);

    // With the chord horizontal, the path's first and last y coordinates
    // are maximal in SVG coordinates (y grows downward).
    const std::size_t path_pos = svg.find("<path d=\"M ");
    REQUIRE(path_pos != std::string::npos);
    std::vector<std::pair<double, double>> pts;
    {
        const std::size_t start = path_pos + 10;
        const std::size_t end = svg.find('"', start);
        std::string data = svg.substr(start, end - start);
        for (char& c : data) {
            if (c == 'M' || c == 'L') {
                c = ' ';
            }
        }
        std::istringstream in(data);
        double x = 0, y = 0;
        while (in >> x >> y) {
            pts.emplace_back(x, y);
        }
    }
    REQUIRE(pts.size() == poly.point_count());
    const double first_y = pts.front().second;
    const double last_y = pts.back().second;
    for (const auto& [x, y] : pts) {
        CHECK(y <= std::max(first_y, last_y) + 1e-6);
    }
    CHECK(first_y == doctest::Approx(last_y).epsilon(1e-9));
}

TEST_CASE("knit chart arithmetic") {
    const auto seqs = sequences_for(*find_preset("r1", 3), 3);
    KnitSpec spec;
    spec.stitches = {128, 192, 256};

    const KnitLayout layout = layout_knit_chart(seqs, spec);
    REQUIRE(layout.levels.size() == 3);
    CHECK(layout.levels[0].stitches_per_entry == 8);
    CHECK(layout.levels[1].stitches_per_entry == 3);
    CHECK(layout.levels[2].stitches_per_entry == 1);
    CHECK(layout.levels[0].entries == 16);
    CHECK(layout.levels[1].entries == 64);
    CHECK(layout.levels[2].entries == 256);
    CHECK(layout.columns == 256);
    CHECK(layout.total_rows == 3 * 9 + 2 * 6);

    KnitSpec with_edges = spec;
    with_edges.edge_separator_rows = 6;
    CHECK(layout_knit_chart(seqs, with_edges).total_rows == 3 * 9 + 4 * 6);
}

TEST_CASE("knit chart divisibility failure names the level") {
    const auto seqs = sequences_for(*find_preset("r1", 3), 2);
    KnitSpec spec;
    spec.stitches = {128, 150};
    CHECK_THROWS_WITH_AS(static_cast<void>(layout_knit_chart(seqs, spec)),
                         doctest::Contains("level 2"), std::invalid_argument);

    spec.stitches = {128};
    CHECK_THROWS_AS(layout_knit_chart(seqs, spec), std::invalid_argument);
}

TEST_CASE("knit chart SVG uses the configured colors deterministically") {
    const auto seqs = sequences_for(*find_preset("r1", 3), 2);
    KnitSpec spec;
    spec.stitches = {128, 192};
    const std::string svg = render_knit_chart(seqs, spec);
    CHECK(svg == render_knit_chart(seqs, spec));
    CHECK(svg.find("#1F3A93") != std::string::npos);
    CHECK(svg.find("#7FB3E8") != std::string::npos);
    CHECK(svg.find("#F5F1E6") != std::string::npos);
    CHECK(count_occurrences(svg, "<rect") == 1 + 16 + 64);
}

TEST_CASE("OBJ export") {
    const SimplexGeometry geom(3);
    const Polyline poly = curve_polyline(geom, expand_addresses(*find_preset("r1", 3), 1));

    const std::string plain = export_obj(poly, false, geom);
    CHECK(count_occurrences(plain, "\nv ") + (plain.rfind("v ", 0) == 0 ? 1 : 0) == 5);
    CHECK(count_occurrences(plain, "\nl ") == 4);
    CHECK(export_obj(poly, false, geom) == plain);

    const std::string with_frame = export_obj(poly, true, geom);
    CHECK(count_occurrences(with_frame, "\nv ") == 5 + 4 * 4);
    CHECK(count_occurrences(with_frame, "\nl ") == 4 + 4 * 6);

    const SimplexGeometry geom2(2);
    const Polyline flat = curve_polyline(geom2, expand_addresses(canonical_rule(2), 1));
    const std::string padded = export_obj(flat, false, geom2);
    CHECK(padded.find("v 1.000000 0.000000 0.000000\n") != std::string::npos);

    const SimplexGeometry geom4(4);
    const Polyline poly4 = curve_polyline(geom4, expand_addresses(canonical_rule(4), 1));
    CHECK_THROWS_AS(export_obj(poly4, false, geom4), std::invalid_argument);
}
