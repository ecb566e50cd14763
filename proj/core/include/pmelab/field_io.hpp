#pragma once

#include <iosfwd>
#include <string>

#include "pmelab/field.hpp"
#include "pmelab/mask.hpp"

namespace pmelab {

/// Shortest round-trip decimal for a double ("%.17g"), identical across runs.
std::string format_double(double v);

/// CSV format: header line `# t=<time> kind=<kind> dim=<d> h=<h>`, then one
/// `x[,y],value` row per cell in row-major cell order.
void write_field_csv(std::ostream& os, const ScalarField& f);
void write_field_csv(const std::string& path, const ScalarField& f);
ScalarField read_field_csv(std::istream& is, const Grid& grid);
ScalarField read_field_csv(const std::string& path, const Grid& grid);

/// Masks serialize as CSV of member cell center coordinates.
void write_mask_csv(std::ostream& os, const CellMask& m);
void write_mask_csv(const std::string& path, const CellMask& m);

} // namespace pmelab
