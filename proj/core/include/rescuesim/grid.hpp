#pragma once

#include "rescuesim/scene.hpp"

#include <vector>

namespace rescuesim {

// Uniform floor grid holding the per-cell maximum obstacle height plus the
// agent's explored flags. Cell (0,0) spans [origin.x, origin.x+cell_size) x
// [origin.z, origin.z+cell_size).
struct GridMap {
    double cell_size = 0.25;
    Vec3 origin;
    int width = 0;   // cells along x
    int height = 0;  // cells along z
    std::vector<double> height_of;   // row-major: iz * width + ix
    std::vector<uint8_t> explored;

    int index(GridCoord c) const { return c.iz * width + c.ix; }
    bool in_bounds(GridCoord c) const {
        return c.ix >= 0 && c.ix < width && c.iz >= 0 && c.iz < height;
    }
    GridCoord cell_at(const Vec3& p) const {
        return {static_cast<int>(std::floor((p.x - origin.x) / cell_size)),
                static_cast<int>(std::floor((p.z - origin.z) / cell_size))};
    }
    Vec3 cell_center(GridCoord c) const {
        return {origin.x + (c.ix + 0.5) * cell_size, 0.0,
                origin.z + (c.iz + 0.5) * cell_size};
    }
    double height_at(GridCoord c) const { return height_of[index(c)]; }
    bool is_explored(GridCoord c) const { return explored[index(c)] != 0; }
    size_t explored_count() const;
};

// Builds the grid over scene.bounds: height_of[c] is the max top height of
// static boxes and active, non-held objects overlapping c (positive-area
// overlap), else 0. Explored flags start false.
GridMap rasterize_grid(const Scene& scene, double cell_size = 0.25);

// Recomputes heights in place, preserving explored flags. Grid geometry must
// match the scene it was built from.
void refresh_grid_heights(GridMap& grid, const Scene& scene);

// Grid ray march between two world points; true when no strictly
// intermediate cell rises above eye_height.
bool line_of_sight(const GridMap& grid, const Vec3& from, const Vec3& to, double eye_height);

} // namespace rescuesim
