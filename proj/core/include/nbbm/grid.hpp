#pragma once

#include <cstdint>
#include <vector>

namespace nbbm {

/// Nonnegative density on a uniform 1-D grid. `values[i]` is the cell
/// average over [x_lo + i*dx, x_lo + (i+1)*dx), so the cell carries mass
/// dx*values[i]. `leak` accounts every unit of mass deliberately dropped
/// (kernel truncation, edge trimming); mass() + leak is conserved by the
/// operations below.
///
/// Values are immutable by convention: operations return new grids.
struct DensityGrid {
    double x_lo = 0.0;
    double dx = 1.0;
    std::vector<double> values;
    double leak = 0.0;

    std::size_t size() const { return values.size(); }
    double x_hi() const { return x_lo + dx * static_cast<double>(values.size()); }
    double edge(std::size_t i) const { return x_lo + dx * static_cast<double>(i); }
    double mass() const;

    /// Density value at a point (cell lookup; 0 outside the grid).
    double value_at(double x) const;

    /// Throws std::invalid_argument if a structural invariant is broken
    /// (negative/non-finite value, dx <= 0).
    void validate() const;
};

/// Right tail F(r) = integral of the density over [r, inf), stored at the
/// n+1 cell edges. Nonincreasing, F(x_lo) = mass, F(x_hi) = 0.
struct TailFunction {
    double x_lo = 0.0;
    double dx = 1.0;
    std::vector<double> values;  // size n+1
    double leak = 0.0;

    std::size_t size() const { return values.size(); }
    double edge(std::size_t i) const { return x_lo + dx * static_cast<double>(i); }
    /// Piecewise-linear evaluation; clamps to mass on the left, 0 on the right.
    double at(double r) const;
};

/// Budget on accumulated `leak` that well-behaved operation sequences are
/// expected to respect. Checked by tests, not enforced by the operations.
inline constexpr double kLeakBudget = 1e-8;

/// Tail integral over [a, inf) with sub-cell linear interpolation.
/// a <= x_lo gives mass(u); a beyond the right edge gives 0.
double tail(const DensityGrid& u, double a);

/// Full tail function of u at cell edges.
TailFunction tail_function(const DensityGrid& u);

/// Tail order: true iff tail(u, a) <= tail(v, a) + tol at every grid point
/// of the aligned pair. Grids are aligned by integrating the finer one onto
/// the coarser; throws std::invalid_argument when the spacings are not
/// integer multiples or the origins are offset by a fraction of a cell.
bool dominates(const DensityGrid& u, const DensityGrid& v, double tol);

/// Cutting point q_m(u) = inf{a : tail(u, a) < m}, located by a
/// right-cumulative scan with sub-cell interpolation so that
/// tail(u, q) = min(m, mass(u)). Returns x_lo when m >= mass(u).
/// Throws std::invalid_argument when m <= 0.
double cut_point(const DensityGrid& u, double m);

/// Zeroes the density left of cut_point(u, m), scaling the boundary cell so
/// mass(result) = min(m, mass(u)) holds exactly. Tails at cell edges equal
/// min(tail(u, .), m) exactly.
DensityGrid cut(const DensityGrid& u, double m);

/// Grow-diffuse step: e^delta * (heat kernel of variance delta applied to u).
/// The kernel is cell-averaged from Gaussian CDF differences, which keeps the
/// discrete operation mass-exact; it is truncated at radius 8*sqrt(delta) and
/// the truncated tail is charged to `leak`. The grid is extended by the
/// truncation radius on both sides, then edge cells carrying cumulative mass
/// below 1e-13 per side are trimmed back into `leak`.
/// Throws std::invalid_argument when delta <= 0.
DensityGrid heat_grow(const DensityGrid& u, double delta);

/// dx * sum |u - v| after aligning the pair (finer grid integrated onto the
/// coarser). Throws on non-alignable grids.
double l1_distance(const DensityGrid& u, const DensityGrid& v);

/// n iid draws by inverse CDF on the grid, uniform within the landing cell.
/// Deterministic for a fixed seed. Throws std::invalid_argument on zero mass.
std::vector<double> sample(const DensityGrid& u, std::size_t n, std::uint64_t seed);

/// Exact representation of u on a grid with dx/factor spacing (each cell is
/// split into `factor` equal cells of the same value).
DensityGrid refine(const DensityGrid& u, int factor);

/// Cell-integration resample onto a grid with dx*factor spacing. The output
/// covers [x_lo_out, ...] where x_lo_out aligns with `anchor` modulo the
/// coarse spacing; cells extending past the input carry the input's partial
/// mass only.
DensityGrid coarsen(const DensityGrid& u, int factor, double anchor);

namespace detail {
/// Resolves a pair of grids to a common partition: returns {factor_u,
/// factor_v, offset_cells} such that coarsening u by factor_u and v by
/// factor_v yields identical (x_lo, dx) lattices. Throws when impossible.
struct Alignment {
    int coarsen_u = 1;   // integration factor applied to u
    int coarsen_v = 1;   // integration factor applied to v
    double dx = 0.0;     // common spacing
};
Alignment align(const DensityGrid& u, const DensityGrid& v);
}  // namespace detail

}  // namespace nbbm
