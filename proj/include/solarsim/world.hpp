#pragma once

#include <optional>
#include <vector>

namespace solarsim {

// One solar panel. length_m runs along the up-slope (+y) axis, width_m
// across it. Panels steeper than 30 degrees are rejected.
struct PanelSpec {
    double length_m = 1.0;
    double width_m = 0.6;
    double incline_deg = 30.0;
};

struct ArrayLayout {
    std::vector<PanelSpec> panels{PanelSpec{}};
    double rail_length_m = 0.0;
    double dock_offset_m = 0.2;
};

enum class RegionKind { Dock, Panel, Rail };

struct Region {
    RegionKind kind = RegionKind::Panel;
    int index = 0; // panel or rail index; 0 for the dock
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    double incline_deg = 0;

    bool contains(double x, double y) const {
        return x >= x0 && x <= x1 && y >= y0 && y <= y1;
    }
};

enum class BumpAxis { X, Y }; // axis held constant along the line

struct BumpLine {
    BumpAxis axis = BumpAxis::X;
    double coord_m = 0.0;
};

// The array unfolded into a planar strip along +x: Dock, P0, Rail, P1, ...
// Incline is a per-region attribute, not a geometric rotation.
struct Workspace {
    std::vector<Region> regions;
    std::vector<BumpLine> bump_lines;
};

struct RegionInfo {
    RegionKind kind;
    int index;
    double incline_deg;
};

Workspace build_workspace(const ArrayLayout& layout);

// Returns the lowest-indexed region containing the point, or nullopt when
// the point is off the surface.
std::optional<RegionInfo> region_at(const Workspace& ws, double x, double y);

// Rectangle in workspace coordinates, possibly rotated about its center.
struct Footprint {
    double cx = 0, cy = 0;
    double heading_rad = 0;   // body +x direction of the rectangle
    double forward_m = 0.12;  // extent ahead of the center along heading
    double back_m = 0.02;     // extent behind the center
    double half_width_m = 0.05;

    bool contains(double x, double y) const;
};

// Per-panel dust/pass grids. Rails and the dock carry no cells.
struct CoverageGrid {
    struct PanelCells {
        double x0 = 0, y0 = 0;
        int nx = 0, ny = 0;
        std::vector<double> dust;
        std::vector<int> pass_count;
    };
    double cell_size_m = 0.02;
    std::vector<PanelCells> panels;

    std::size_t cell_count() const;
};

CoverageGrid make_coverage_grid(const Workspace& ws, double cell_size_m,
                                double initial_dust = 1.0);

// Every cell whose center lies inside the footprint gets
// dust *= (1 - efficiency) and pass_count += 1.
void apply_cleaning(CoverageGrid& grid, const Footprint& fp, double efficiency);

double coverage_fraction(const CoverageGrid& grid, double clean_threshold);

} // namespace solarsim
