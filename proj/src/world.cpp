#include "solarsim/world.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace solarsim {

Workspace build_workspace(const ArrayLayout& layout) {
    if (layout.panels.empty())
        throw std::invalid_argument("layout needs at least one panel");
    if (layout.rail_length_m < 0 || layout.dock_offset_m < 0)
        throw std::invalid_argument("rail_length_m and dock_offset_m must be >= 0");
    for (const PanelSpec& p : layout.panels) {
        if (p.length_m <= 0 || p.width_m <= 0)
            throw std::invalid_argument("panel dimensions must be positive");
        if (p.incline_deg < 0 || p.incline_deg > 30)
            throw std::invalid_argument("incline_deg must be in [0, 30]");
    }

    Workspace ws;
    double cx = 0.0;

    // Dock sits at ground level at the start of the strip.
    Region dock;
    dock.kind = RegionKind::Dock;
    dock.index = 0;
    dock.x0 = 0;
    dock.x1 = layout.dock_offset_m;
    dock.y0 = 0;
    dock.y1 = layout.panels.front().length_m;
    dock.incline_deg = 0;
    ws.regions.push_back(dock);
    cx = layout.dock_offset_m;

    for (std::size_t i = 0; i < layout.panels.size(); ++i) {
        const PanelSpec& p = layout.panels[i];
        if (i > 0) {
            const double prev_len = layout.panels[i - 1].length_m;
            if (layout.rail_length_m > 0) {
                Region rail;
                rail.kind = RegionKind::Rail;
                rail.index = static_cast<int>(i) - 1;
                rail.x0 = cx;
                rail.x1 = cx + layout.rail_length_m;
                rail.y0 = 0;
                rail.y1 = std::min(prev_len, p.length_m);
                rail.incline_deg = 0;
                ws.regions.push_back(rail);
            }
            // Bump line where consecutive panels meet (mid-gap when railed).
            ws.bump_lines.push_back(
                BumpLine{BumpAxis::X, cx + layout.rail_length_m / 2.0});
            cx += layout.rail_length_m;
        }
        Region panel;
        panel.kind = RegionKind::Panel;
        panel.index = static_cast<int>(i);
        panel.x0 = cx;
        panel.x1 = cx + p.width_m;
        panel.y0 = 0;
        panel.y1 = p.length_m;
        panel.incline_deg = p.incline_deg;
        ws.regions.push_back(panel);
        cx += p.width_m;
    }
    return ws;
}

std::optional<RegionInfo> region_at(const Workspace& ws, double x, double y) {
    for (const Region& r : ws.regions) {
        if (r.contains(x, y))
            return RegionInfo{r.kind, r.index, r.incline_deg};
    }
    return std::nullopt;
}

bool Footprint::contains(double x, double y) const {
    const double dx = x - cx;
    const double dy = y - cy;
    const double c = std::cos(heading_rad);
    const double s = std::sin(heading_rad);
    const double fwd = dx * c + dy * s;
    const double lat = -dx * s + dy * c;
    return fwd >= -back_m && fwd <= forward_m && std::abs(lat) <= half_width_m;
}

std::size_t CoverageGrid::cell_count() const {
    std::size_t n = 0;
    for (const PanelCells& p : panels)
        n += p.dust.size();
    return n;
}

CoverageGrid make_coverage_grid(const Workspace& ws, double cell_size_m,
                                double initial_dust) {
    if (cell_size_m <= 0)
        throw std::invalid_argument("cell_size_m must be positive");
    if (initial_dust < 0 || initial_dust > 1)
        throw std::invalid_argument("initial_dust must be in [0,1]");
    CoverageGrid grid;
    grid.cell_size_m = cell_size_m;
    for (const Region& r : ws.regions) {
        if (r.kind != RegionKind::Panel)
            continue;
        CoverageGrid::PanelCells cells;
        cells.x0 = r.x0;
        cells.y0 = r.y0;
        cells.nx = std::max(1, static_cast<int>(std::ceil((r.x1 - r.x0) / cell_size_m - 1e-9)));
        cells.ny = std::max(1, static_cast<int>(std::ceil((r.y1 - r.y0) / cell_size_m - 1e-9)));
        cells.dust.assign(static_cast<std::size_t>(cells.nx) * cells.ny, initial_dust);
        cells.pass_count.assign(cells.dust.size(), 0);
        grid.panels.push_back(std::move(cells));
    }
    return grid;
}

void apply_cleaning(CoverageGrid& grid, const Footprint& fp, double efficiency) {
    if (efficiency <= 0 || efficiency > 1)
        throw std::invalid_argument("efficiency must be in (0,1]");
    const double keep = 1.0 - efficiency;
    const double reach = fp.forward_m + fp.back_m + fp.half_width_m;
    for (CoverageGrid::PanelCells& p : grid.panels) {
        // Cheap reject: footprint bounding circle vs panel bounds.
        const double px1 = p.x0 + p.nx * grid.cell_size_m;
        const double py1 = p.y0 + p.ny * grid.cell_size_m;
        if (fp.cx + reach < p.x0 || fp.cx - reach > px1 ||
            fp.cy + reach < p.y0 || fp.cy - reach > py1)
            continue;
        const int ix0 = std::max(0, static_cast<int>((fp.cx - reach - p.x0) / grid.cell_size_m));
        const int ix1 = std::min(p.nx - 1, static_cast<int>((fp.cx + reach - p.x0) / grid.cell_size_m));
        const int iy0 = std::max(0, static_cast<int>((fp.cy - reach - p.y0) / grid.cell_size_m));
        const int iy1 = std::min(p.ny - 1, static_cast<int>((fp.cy + reach - p.y0) / grid.cell_size_m));
        for (int iy = iy0; iy <= iy1; ++iy) {
            for (int ix = ix0; ix <= ix1; ++ix) {
                const double cxm = p.x0 + (ix + 0.5) * grid.cell_size_m;
                const double cym = p.y0 + (iy + 0.5) * grid.cell_size_m;
                if (!fp.contains(cxm, cym))
                    continue;
                const std::size_t idx = static_cast<std::size_t>(iy) * p.nx + ix;
                p.dust[idx] *= keep;
                p.pass_count[idx] += 1;
            }
        }
    }
}

double coverage_fraction(const CoverageGrid& grid, double clean_threshold) {
    if (clean_threshold < 0 || clean_threshold >= 1)
        throw std::invalid_argument("clean_threshold must be in [0,1)");
    const std::size_t total = grid.cell_count();
    if (total == 0)
        throw std::invalid_argument("coverage_fraction on empty grid");
    std::size_t clean = 0;
    for (const CoverageGrid::PanelCells& p : grid.panels)
        for (double d : p.dust)
            if (d <= clean_threshold)
                ++clean;
    return static_cast<double>(clean) / static_cast<double>(total);
}

} // namespace solarsim
