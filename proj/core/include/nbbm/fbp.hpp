#pragma once

#include <cstdint>
#include <vector>

#include "nbbm/grid.hpp"

namespace nbbm {

/// Piecewise-linear curve t -> L_t. Knot times strictly increasing;
/// evaluation clamps to the end slopes' values outside the knot range
/// (constant extrapolation of the boundary value).
struct BoundaryCurve {
    std::vector<double> t;
    std::vector<double> L;

    static BoundaryCurve constant(double value, double t_max);
    static BoundaryCurve linear(double slope, double intercept, double t_max, std::size_t knots = 2);

    double at(double time) const;
    void validate() const;
};

/// Traveling-wave profile of the moving-boundary heat problem: the unique
/// unit-mass solution of (1/2) w'' + alpha w' + w = 0 with w(0) = 0.
/// For alpha = sqrt(2):  w(x) = 2 x e^{-sqrt(2) x};
/// for alpha > sqrt(2):  w(x) = (2/beta) e^{-alpha x} sinh(beta x),
/// beta = sqrt(alpha^2 - 2). No normalizable solution exists below sqrt(2).
struct TravelingWave {
    double alpha = 0.0;
    double normalization = 0.0;  // M_alpha
    DensityGrid density;         // cell-averaged profile on [0, x_max]

    double value(double x) const;  // analytic point value
    double tail(double r) const;   // analytic integral over [r, inf)
};

/// Builds the wave on a grid. x_max <= 0 picks the smallest edge beyond
/// which the analytic tail is < 1e-10 (charged to leak). Cell averages are
/// computed from closed-form antiderivatives, so the grid mass is exact.
/// Throws std::invalid_argument when alpha < sqrt(2).
TravelingWave traveling_wave(double alpha, double dx = 1e-3, double x_max = 0.0);

/// Max over interior grid points of |(1/2) w'' + alpha w' + w| by central
/// differences on the stored cell averages. O(dx^2) for the true wave.
double wave_residual(const TravelingWave& w);

/// One time-point of a Monte Carlo survival estimate.
struct SurvivalPoint {
    double t = 0.0;
    double estimate = 0.0;  // e^t * mean survival weight
    double stderr_ = 0.0;   // standard error of the estimate
};

struct SurvivalCurve {
    std::vector<SurvivalPoint> points;
};

/// Estimates e^t * integral rho(x) P_x(tau_L > t) dx on a t-grid of spacing
/// record_dt, by Euler paths of step h with a Brownian-bridge crossing factor
/// per step. Instead of killing paths, each path carries the product of
/// per-step non-crossing probabilities; for a boundary that is linear within
/// every step this weight is an unbiased survival estimator. Curved
/// boundaries are linearized per step, which is the accuracy model.
SurvivalCurve hitting_survival(const DensityGrid& rho, const BoundaryCurve& L, double t_max,
                               std::size_t n_paths, double h, std::uint64_t seed,
                               double record_dt = 0.0);

/// MC estimate of the forward tail e^t * integral rho(x) P_x(B_t > a,
/// tau_L > t) dx. With the same (seed, h) the a = -inf value reproduces
/// hitting_survival at t bitwise.
SurvivalPoint forward_tail_mc(const DensityGrid& rho, const BoundaryCurve& L, double a, double t,
                              std::size_t n_paths, double h, std::uint64_t seed);

/// MC estimate of the backward representation
/// u(x,t) = e^t E_x[rho(B_t) 1{B_s > L_{t-s} for all s <= t}].
SurvivalPoint backward_density_mc(const DensityGrid& rho, const BoundaryCurve& L, double x, double t,
                                  std::size_t n_paths, double h, std::uint64_t seed);

struct SpeedEstimate {
    double slope = 0.0;           // least-squares drift of the leftmost particle
    double front_gap_rate = 0.0;  // (N-1) * mean gap between two leftmost particles
    std::vector<double> times;
    std::vector<double> leftmost;
};

/// Drift of the leftmost particle of the N-particle selection system,
/// regressed over [burn_in, horizon]. All particles start at 0.
SpeedEstimate speed_estimate(std::size_t n_particles, double horizon, double burn_in,
                             std::uint64_t seed, double record_dt = 0.1);

}  // namespace nbbm
