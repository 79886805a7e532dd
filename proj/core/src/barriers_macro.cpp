#include "nbbm/barriers_macro.hpp"

#include <cmath>
#include <stdexcept>

namespace nbbm {

std::pair<DensityGrid, double> step_plus(const DensityGrid& u, double delta) {
    DensityGrid grown = heat_grow(u, delta);
    double q = cut_point(grown, 1.0);
    return {cut(grown, 1.0), q};
}

std::pair<DensityGrid, double> step_minus(const DensityGrid& u, double delta) {
    double keep = std::exp(-delta);
    double q = cut_point(u, keep);
    return {heat_grow(cut(u, keep), delta), q};
}

BarrierTrajectory evolve(const DensityGrid& u, double delta, int k, BarrierSide side) {
    if (k < 0) throw std::invalid_argument("evolve: k must be >= 0");
    BarrierTrajectory traj;
    traj.side = side;
    traj.delta = delta;
    traj.snapshots.reserve(static_cast<std::size_t>(k) + 1);
    traj.cut_points.reserve(static_cast<std::size_t>(k));
    traj.snapshots.push_back(u);
    DensityGrid cur = u;
    for (int i = 0; i < k; ++i) {
        auto [next, q] = (side == BarrierSide::plus) ? step_plus(cur, delta) : step_minus(cur, delta);
        traj.cut_points.push_back(q);
        traj.snapshots.push_back(next);
        cur = std::move(next);
    }
    return traj;
}

double dx_for_delta(double delta, double dx_base) {
    double target = std::sqrt(delta) / 50.0;
    double dx = dx_base;
    while (dx > target) dx *= 0.5;
    return dx;
}

SqueezeResult squeeze(const DensityGrid& u, double t, double tol, int n_max, int n_start) {
    if (!(t > 0.0)) throw std::invalid_argument("squeeze: t must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("squeeze: tol must be positive");
    if (n_start < 0 || n_max < n_start) throw std::invalid_argument("squeeze: bad level range");

    SqueezeResult res;
    res.t = t;
    for (int n = n_start; n <= n_max; ++n) {
        int k = 1 << n;
        double delta = t / static_cast<double>(k);
        double dx = dx_for_delta(delta, u.dx);
        int factor = static_cast<int>(std::lround(u.dx / dx));
        DensityGrid base = refine(u, factor);

        DensityGrid up = base;
        DensityGrid lo = base;
        for (int i = 0; i < k; ++i) {
            up = step_plus(up, delta).first;
            lo = step_minus(lo, delta).first;
        }

        SqueezeLevel level;
        level.n = n;
        level.delta = delta;
        level.gap_l1 = l1_distance(up, lo);
        level.lower = tail_function(lo);
        level.upper = tail_function(up);
        res.levels.push_back(level);

        res.n_final = n;
        res.gap_l1 = level.gap_l1;
        res.lower = res.levels.back().lower;
        res.upper = res.levels.back().upper;
        if (level.gap_l1 <= tol) {
            res.converged = true;
            break;
        }
    }
    return res;
}

}  // namespace nbbm
