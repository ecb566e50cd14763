#include "pmelab/field_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pmelab {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_field_csv(std::ostream& os, const ScalarField& f) {
    const Grid& g = f.grid();
    os << "# t=" << format_double(f.time_stamp()) << " kind=" << to_string(f.kind())
       << " dim=" << g.dim() << " h=" << format_double(g.h()) << "\n";
    for (std::size_t c = 0; c < f.size(); ++c) {
        const Pt x = g.center(c);
        os << format_double(x[0]);
        if (g.dim() == 2) os << "," << format_double(x[1]);
        os << "," << format_double(f[c]) << "\n";
    }
}

void write_field_csv(const std::string& path, const ScalarField& f) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for write: " + path);
    write_field_csv(os, f);
}

ScalarField read_field_csv(std::istream& is, const Grid& grid) {
    std::string header;
    if (!std::getline(is, header) || header.empty() || header[0] != '#')
        throw std::runtime_error("field csv: missing header line");
    double t = 0.0;
    std::string kind_str = "density";
    {
        std::istringstream hs(header.substr(1));
        std::string tok;
        while (hs >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            if (key == "t") t = std::stod(val);
            else if (key == "kind") kind_str = val;
        }
    }
    ScalarField f(grid, field_kind_from_string(kind_str), t);
    std::string line;
    std::size_t c = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (c >= f.size()) throw std::runtime_error("field csv: too many rows");
        const auto last_comma = line.rfind(',');
        if (last_comma == std::string::npos) throw std::runtime_error("field csv: bad row");
        f[c++] = std::stod(line.substr(last_comma + 1));
    }
    if (c != f.size()) throw std::runtime_error("field csv: row count does not match grid");
    return f;
}

ScalarField read_field_csv(const std::string& path, const Grid& grid) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open for read: " + path);
    return read_field_csv(is, grid);
}

void write_mask_csv(std::ostream& os, const CellMask& m) {
    const Grid& g = m.grid();
    os << "# mask dim=" << g.dim() << " h=" << format_double(g.h()) << "\n";
    for (std::size_t c : m.cells()) {
        const Pt x = g.center(c);
        os << format_double(x[0]);
        if (g.dim() == 2) os << "," << format_double(x[1]);
        os << "\n";
    }
}

void write_mask_csv(const std::string& path, const CellMask& m) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for write: " + path);
    write_mask_csv(os, m);
}

} // namespace pmelab
