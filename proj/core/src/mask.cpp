#include "pmelab/mask.hpp"

#include <numeric>

namespace pmelab {

std::size_t CellMask::count() const {
    std::size_t n = 0;
    for (auto b : bits_) n += b;
    return n;
}

std::vector<std::size_t> CellMask::cells() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) out.push_back(i);
    return out;
}

bool CellMask::is_contained_in(const RegionBall& ball, double slack) const {
    RegionBall b = ball;
    b.radius += slack;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] && !b.contains(grid_.center(i), grid_.dim())) return false;
    return true;
}

CellMask CellMask::boundary_cells() const {
    CellMask out(grid_);
    const int n = grid_.cells_per_axis();
    for (std::size_t c = 0; c < bits_.size(); ++c) {
        if (!bits_[c]) continue;
        const int i = grid_.ix(c);
        const int j = grid_.iy(c);
        bool boundary = false;
        if (i == 0 || !bits_[grid_.index(i - 1, j)]) boundary = true;
        else if (i == n - 1 || !bits_[grid_.index(i + 1, j)]) boundary = true;
        else if (grid_.dim() == 2) {
            if (j == 0 || !bits_[grid_.index(i, j - 1)]) boundary = true;
            else if (j == n - 1 || !bits_[grid_.index(i, j + 1)]) boundary = true;
        }
        if (boundary) out.set(c);
    }
    return out;
}

bool CellMask::is_subset_of(const CellMask& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] && !other[i]) return false;
    return true;
}

} // namespace pmelab
