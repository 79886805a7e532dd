#pragma once

#include <utility>
#include <vector>

#include "nbbm/grid.hpp"

namespace nbbm {

enum class BarrierSide { minus, plus };

/// One barrier run at fixed delta: snapshots at times k*delta plus the cut
/// point recorded by each step. Every snapshot has unit mass.
struct BarrierTrajectory {
    BarrierSide side = BarrierSide::plus;
    double delta = 0.0;
    std::vector<DensityGrid> snapshots;  // k+1 entries, snapshots[0] = initial
    std::vector<double> cut_points;      // one per step
};

/// Upper step: grow-diffuse for delta, then cut from the left back to mass 1.
/// Returns the new density and the cutting point of the grown density.
std::pair<DensityGrid, double> step_plus(const DensityGrid& u, double delta);

/// Lower step: cut from the left to mass e^{-delta}, then grow-diffuse for
/// delta (back to mass 1). Returns the new density and the cutting point.
std::pair<DensityGrid, double> step_minus(const DensityGrid& u, double delta);

/// k applications of the chosen step, recording all snapshots and cut points.
BarrierTrajectory evolve(const DensityGrid& u, double delta, int k, BarrierSide side);

/// Record of one dyadic level of the squeeze.
struct SqueezeLevel {
    int n = 0;          // delta = t / 2^n
    double delta = 0.0;
    double gap_l1 = 0.0;
    TailFunction lower;  // tail of the minus barrier at time t
    TailFunction upper;  // tail of the plus barrier at time t
};

/// Dyadic squeeze output: a certified tail bracket
/// lower(a) <= F(a; psi(.,t)) <= upper(a) at the final level.
struct SqueezeResult {
    double t = 0.0;
    int n_final = 0;
    TailFunction lower;
    TailFunction upper;
    double gap_l1 = 0.0;
    bool converged = false;          // gap_l1 <= tol reached before n_max
    std::vector<SqueezeLevel> levels;
};

/// Doubles the dyadic level n (delta = t/2^n) until the L1 distance between
/// the plus and minus barriers at time t is <= tol, or n reaches n_max. The
/// grid is refined per level so that dx <= min(1e-3, sqrt(delta)/50), using
/// power-of-two subdivisions of the input spacing to keep levels alignable.
/// An unmet tolerance yields converged = false, never a silent result.
SqueezeResult squeeze(const DensityGrid& u, double t, double tol, int n_max, int n_start = 1);

/// Level-dependent grid spacing rule used by squeeze.
double dx_for_delta(double delta, double dx_base = 1e-3);

}  // namespace nbbm
