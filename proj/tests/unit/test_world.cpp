#include <doctest.h>

#include <stdexcept>

#include "solarsim/world.hpp"

using namespace solarsim;

TEST_CASE("workspace layout: single panel gives dock plus panel") {
    ArrayLayout layout; // defaults: one 1.0 x 0.6 panel at 30 deg, dock 0.2
    Workspace ws = build_workspace(layout);
    REQUIRE(ws.regions.size() == 2);
    CHECK(ws.regions[0].kind == RegionKind::Dock);
    CHECK(ws.regions[0].x0 == doctest::Approx(0.0));
    CHECK(ws.regions[0].x1 == doctest::Approx(0.2));
    CHECK(ws.regions[0].incline_deg == 0.0);
    CHECK(ws.regions[1].kind == RegionKind::Panel);
    CHECK(ws.regions[1].x0 == doctest::Approx(0.2));
    CHECK(ws.regions[1].x1 == doctest::Approx(0.8));
    CHECK(ws.regions[1].y1 == doctest::Approx(1.0));
    CHECK(ws.regions[1].incline_deg == doctest::Approx(30.0));
    CHECK(ws.bump_lines.empty());
}

TEST_CASE("workspace layout: three railed panels give six regions") {
    ArrayLayout layout;
    layout.panels = {PanelSpec{1.0, 0.6, 30.0}, PanelSpec{1.0, 0.6, 30.0},
                     PanelSpec{1.0, 0.6, 30.0}};
    layout.rail_length_m = 0.1;
    Workspace ws = build_workspace(layout);
    REQUIRE(ws.regions.size() == 6); // dock, P0, rail, P1, rail, P2
    CHECK(ws.regions[2].kind == RegionKind::Rail);
    CHECK(ws.regions[2].incline_deg == 0.0);
    REQUIRE(ws.bump_lines.size() == 2);
    // junction midpoint of the railed gap
    CHECK(ws.bump_lines[0].coord_m == doctest::Approx(0.8 + 0.05));
    CHECK(ws.bump_lines[1].coord_m == doctest::Approx(1.5 + 0.05));
}

TEST_CASE("workspace rejects bad panels") {
    ArrayLayout layout;
    layout.panels = {PanelSpec{1.0, 0.6, 31.0}};
    CHECK_THROWS_AS(build_workspace(layout), std::invalid_argument);
    layout.panels = {PanelSpec{0.0, 0.6, 10.0}};
    CHECK_THROWS_AS(build_workspace(layout), std::invalid_argument);
    layout.panels.clear();
    CHECK_THROWS_AS(build_workspace(layout), std::invalid_argument);
}

TEST_CASE("region_at resolves points and off-surface") {
    Workspace ws = build_workspace(ArrayLayout{});
    auto dock = region_at(ws, 0.1, 0.5);
    REQUIRE(dock.has_value());
    CHECK(dock->kind == RegionKind::Dock);
    auto panel = region_at(ws, 0.5, 0.5);
    REQUIRE(panel.has_value());
    CHECK(panel->kind == RegionKind::Panel);
    CHECK(panel->incline_deg == doctest::Approx(30.0));
    CHECK_FALSE(region_at(ws, 0.5, 1.5).has_value());
    CHECK_FALSE(region_at(ws, -0.1, 0.5).has_value());
}

TEST_CASE("footprint containment rotates with heading") {
    Footprint fp;
    fp.cx = 1.0;
    fp.cy = 1.0;
    fp.heading_rad = 0.0; // facing +x
    fp.forward_m = 0.12;
    fp.back_m = 0.02;
    fp.half_width_m = 0.05;
    CHECK(fp.contains(1.10, 1.0));
    CHECK_FALSE(fp.contains(1.13, 1.0));
    CHECK(fp.contains(0.99, 1.04));
    CHECK_FALSE(fp.contains(0.97, 1.0)); // behind the back edge
    fp.heading_rad = 1.5707963267948966; // facing +y
    CHECK(fp.contains(1.0, 1.10));
    CHECK_FALSE(fp.contains(1.10, 1.0));
}

TEST_CASE("coverage grid sizing and cleaning") {
    Workspace ws = build_workspace(ArrayLayout{});
    CoverageGrid grid = make_coverage_grid(ws, 0.02);
    REQUIRE(grid.panels.size() == 1);
    CHECK(grid.panels[0].nx == 30); // 0.6 / 0.02
    CHECK(grid.panels[0].ny == 50); // 1.0 / 0.02
    CHECK(grid.cell_count() == 1500);
    CHECK(coverage_fraction(grid, 0.1) == doctest::Approx(0.0));

    Footprint fp;
    fp.cx = 0.5;
    fp.cy = 0.5;
    fp.heading_rad = 1.5707963267948966;
    fp.forward_m = 0.12;
    fp.back_m = 0.12;
    fp.half_width_m = 0.09;
    apply_cleaning(grid, fp, 0.8);
    double frac1 = coverage_fraction(grid, 0.25); // one pass: dust 0.2
    CHECK(frac1 > 0.0);
    // second pass over the same spot: dust 0.04, composition of (1-eff)
    apply_cleaning(grid, fp, 0.8);
    const auto& cells = grid.panels[0];
    bool saw_two_pass = false;
    for (std::size_t i = 0; i < cells.dust.size(); ++i) {
        if (cells.pass_count[i] == 2) {
            CHECK(cells.dust[i] == doctest::Approx(0.04));
            saw_two_pass = true;
        }
    }
    CHECK(saw_two_pass);
    CHECK(coverage_fraction(grid, 0.1) > 0.0);
}

TEST_CASE("cleaning is monotone and validates efficiency") {
    Workspace ws = build_workspace(ArrayLayout{});
    CoverageGrid grid = make_coverage_grid(ws, 0.05);
    Footprint fp;
    fp.cx = 0.5;
    fp.cy = 0.5;
    CHECK_THROWS_AS(apply_cleaning(grid, fp, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(apply_cleaning(grid, fp, 1.5), std::invalid_argument);
    apply_cleaning(grid, fp, 1.0);
    for (const auto& p : grid.panels)
        for (double d : p.dust)
            CHECK(d >= 0.0);
    CHECK_THROWS_AS(coverage_fraction(grid, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_coverage_grid(ws, 0.0), std::invalid_argument);
}
