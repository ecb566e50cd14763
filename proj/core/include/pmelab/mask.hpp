#pragma once

#include <cstdint>
#include <vector>

#include "pmelab/grid.hpp"

namespace pmelab {

/// Boolean set of cells of a grid.
class CellMask {
public:
    explicit CellMask(Grid grid) : grid_(grid), bits_(grid.cell_count(), 0) {}

    const Grid& grid() const { return grid_; }
    std::size_t size() const { return bits_.size(); }

    bool operator[](std::size_t i) const { return bits_[i] != 0; }
    void set(std::size_t i, bool v = true) { bits_[i] = v ? 1 : 0; }

    std::size_t count() const;
    bool empty() const { return count() == 0; }

    /// Indices of member cells, ascending.
    std::vector<std::size_t> cells() const;

    /// True when every member cell center lies in the ball (with slack added
    /// to the radius, typically one cell diagonal).
    bool is_contained_in(const RegionBall& ball, double slack = 0.0) const;

    /// Member cells with at least one von-Neumann neighbor outside the mask;
    /// cells on the box edge count their missing neighbors as outside.
    CellMask boundary_cells() const;

    bool is_subset_of(const CellMask& other) const;

private:
    Grid grid_;
    std::vector<std::uint8_t> bits_;
};

} // namespace pmelab
