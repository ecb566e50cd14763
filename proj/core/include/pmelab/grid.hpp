#pragma once

#include <cstddef>
#include <stdexcept>

#include "pmelab/geometry.hpp"

namespace pmelab {

/// Uniform cell-centered box grid in dimension 1 or 2. The box is the same
/// interval [lower, upper] along every axis, so the spacing is identical per
/// axis by construction. Immutable after construction.
class Grid {
public:
    Grid(int dim, double lower, double upper, int cells_per_axis)
        : dim_(dim), n_(cells_per_axis), lo_(lower), up_(upper),
          h_((upper - lower) / cells_per_axis) {
        if (dim != 1 && dim != 2) throw std::invalid_argument("grid: dim must be 1 or 2");
        if (cells_per_axis < 8) throw std::invalid_argument("grid: need >= 8 cells per axis");
        if (!(h_ > 0.0)) throw std::invalid_argument("grid: upper must exceed lower");
    }

    int dim() const { return dim_; }
    int cells_per_axis() const { return n_; }
    double lower() const { return lo_; }
    double upper() const { return up_; }
    double h() const { return h_; }
    double cell_volume() const { return dim_ == 1 ? h_ : h_ * h_; }

    std::size_t cell_count() const {
        return dim_ == 1 ? static_cast<std::size_t>(n_)
                         : static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_);
    }

    int ix(std::size_t idx) const { return static_cast<int>(idx % static_cast<std::size_t>(n_)); }
    int iy(std::size_t idx) const { return static_cast<int>(idx / static_cast<std::size_t>(n_)); }

    std::size_t index(int i, int j = 0) const {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(i);
    }

    double coord(int i) const { return lo_ + (i + 0.5) * h_; }

    Pt center(std::size_t idx) const {
        Pt x;
        x[0] = coord(ix(idx));
        if (dim_ == 2) x[1] = coord(iy(idx));
        return x;
    }

    bool operator==(const Grid& o) const {
        return dim_ == o.dim_ && n_ == o.n_ && lo_ == o.lo_ && up_ == o.up_;
    }
    bool operator!=(const Grid& o) const { return !(*this == o); }

private:
    int dim_;
    int n_;
    double lo_, up_, h_;
};

} // namespace pmelab
