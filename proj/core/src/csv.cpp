#include "nbbm/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nbbm/grid.hpp"

namespace nbbm {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void CsvTable::write(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out << ',';
        out << header[i];
    }
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << format_double(row[i]);
        }
        out << '\n';
    }
}

CsvTable CsvTable::read(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    CsvTable t;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty csv: " + path);
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) t.header.push_back(cell);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ls(line);
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        t.rows.push_back(std::move(row));
    }
    return t;
}

void write_density_csv(const DensityGrid& u, const std::string& path) {
    CsvTable t;
    t.header = {"x", "value"};
    t.rows.reserve(u.values.size());
    for (std::size_t i = 0; i < u.values.size(); ++i) t.rows.push_back({u.edge(i), u.values[i]});
    t.write(path);
}

DensityGrid read_density_csv(const std::string& path) {
    CsvTable t = CsvTable::read(path);
    if (t.header.size() < 2 || t.header[0] != "x" || t.header[1] != "value")
        throw std::runtime_error("density csv must have header x,value: " + path);
    if (t.rows.size() < 2) throw std::runtime_error("density csv needs at least two rows: " + path);
    DensityGrid u;
    u.x_lo = t.rows.front()[0];
    u.dx = (t.rows.back()[0] - u.x_lo) / static_cast<double>(t.rows.size() - 1);
    u.values.reserve(t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        double expect = u.x_lo + u.dx * static_cast<double>(i);
        if (std::abs(t.rows[i][0] - expect) > 1e-6 * u.dx + 1e-12)
            throw std::runtime_error("density csv grid is not uniform: " + path);
        u.values.push_back(t.rows[i][1]);
    }
    u.validate();
    return u;
}

void write_tail_csv(const TailFunction& f, const std::string& path) {
    CsvTable t;
    t.header = {"x", "value"};
    t.rows.reserve(f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i) t.rows.push_back({f.edge(i), f.values[i]});
    t.write(path);
}

}  // namespace nbbm
