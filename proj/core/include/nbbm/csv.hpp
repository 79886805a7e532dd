#pragma once

#include <string>
#include <vector>

namespace nbbm {

struct DensityGrid;
struct TailFunction;

/// Minimal CSV table: header row + double-valued columns, written with
/// enough digits to round-trip exactly.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    void write(const std::string& path) const;
    static CsvTable read(const std::string& path);
};

/// Two-column `x,value` files: x is the left edge of each cell.
void write_density_csv(const DensityGrid& u, const std::string& path);
DensityGrid read_density_csv(const std::string& path);
void write_tail_csv(const TailFunction& f, const std::string& path);

std::string format_double(double v);

}  // namespace nbbm
