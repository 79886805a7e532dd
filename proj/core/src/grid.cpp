#include "nbbm/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "nbbm/rng.hpp"

namespace nbbm {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTrimMassPerSide = 1e-13;
constexpr double kKernelRadiusSigmas = 8.0;

double std_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double std_normal_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * kPi); }

// Antiderivative of the standard normal CDF: Psi(z) = z*Phi(z) + phi(z).
double cdf_antiderivative(double z) { return z * std_normal_cdf(z) + std_normal_pdf(z); }

}  // namespace

double DensityGrid::mass() const {
    double s = 0.0;
    for (double v : values) s += v;
    return dx * s;
}

double DensityGrid::value_at(double x) const {
    if (x < x_lo) return 0.0;
    auto i = static_cast<std::size_t>((x - x_lo) / dx);
    if (i >= values.size()) return 0.0;
    return values[i];
}

void DensityGrid::validate() const {
    if (!(dx > 0.0) || !std::isfinite(dx)) throw std::invalid_argument("DensityGrid: dx must be positive");
    if (!std::isfinite(x_lo)) throw std::invalid_argument("DensityGrid: x_lo must be finite");
    if (!(leak >= 0.0)) throw std::invalid_argument("DensityGrid: leak must be nonnegative");
    for (double v : values) {
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("DensityGrid: values must be finite and nonnegative");
    }
}

double TailFunction::at(double r) const {
    if (values.empty()) return 0.0;
    if (r <= x_lo) return values.front();
    double pos = (r - x_lo) / dx;
    if (pos >= static_cast<double>(values.size() - 1)) return values.back();
    auto i = static_cast<std::size_t>(pos);
    double f = pos - static_cast<double>(i);
    return values[i] + f * (values[i + 1] - values[i]);
}

double tail(const DensityGrid& u, double a) {
    if (u.values.empty()) return 0.0;
    if (a <= u.x_lo) return u.mass();
    double pos = (a - u.x_lo) / u.dx;
    auto n = u.values.size();
    if (pos >= static_cast<double>(n)) return 0.0;
    auto i = static_cast<std::size_t>(pos);
    double t = 0.0;
    for (std::size_t j = n; j-- > i + 1;) t += u.values[j];
    t *= u.dx;
    // partial cell i: density constant, so the tail is linear inside the cell
    t += u.values[i] * (u.edge(i + 1) - a);
    return t;
}

TailFunction tail_function(const DensityGrid& u) {
    TailFunction f;
    f.x_lo = u.x_lo;
    f.dx = u.dx;
    f.leak = u.leak;
    f.values.assign(u.values.size() + 1, 0.0);
    double acc = 0.0;
    for (std::size_t j = u.values.size(); j-- > 0;) {
        acc += u.dx * u.values[j];
        f.values[j] = acc;
    }
    return f;
}

double cut_point(const DensityGrid& u, double m) {
    if (!(m > 0.0)) throw std::invalid_argument("cut_point: m must be positive");
    TailFunction f = tail_function(u);
    if (f.values.empty() || m >= f.values.front()) return u.x_lo;
    // last edge i with tail >= m; the crossing lies inside cell i
    std::size_t i = 0;
    for (std::size_t j = f.values.size(); j-- > 0;) {
        if (f.values[j] >= m) {
            i = j;
            break;
        }
    }
    double t0 = f.values[i];
    double t1 = (i + 1 < f.values.size()) ? f.values[i + 1] : 0.0;
    if (t0 <= t1) return u.edge(i);
    double frac = (t0 - m) / (t0 - t1);
    return u.edge(i) + frac * u.dx;
}

DensityGrid cut(const DensityGrid& u, double m) {
    if (!(m > 0.0)) throw std::invalid_argument("cut: m must be positive");
    TailFunction f = tail_function(u);
    DensityGrid out = u;
    if (f.values.empty() || m >= f.values.front()) return out;
    std::size_t i = 0;
    for (std::size_t j = f.values.size(); j-- > 0;) {
        if (f.values[j] >= m) {
            i = j;
            break;
        }
    }
    for (std::size_t j = 0; j < i; ++j) out.values[j] = 0.0;
    double t1 = (i + 1 < f.values.size()) ? f.values[i + 1] : 0.0;
    // boundary cell keeps exactly the mass needed for mass(out) == m
    out.values[i] = std::max(m - t1, 0.0) / u.dx;
    return out;
}

DensityGrid heat_grow(const DensityGrid& u, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("heat_grow: delta must be positive");
    const double sigma = std::sqrt(delta);
    const int radius = std::max(1, static_cast<int>(std::ceil(kKernelRadiusSigmas * sigma / u.dx)));
    const double h = u.dx / sigma;

    // Discrete kernel: probability that a point uniform in a cell, plus
    // N(0, delta) noise, lands d cells away. Second difference of Psi, so it
    // is nonnegative and sums to 1 up to the truncated tail.
    std::vector<double> kernel(2 * radius + 1);
    double ksum = 0.0;
    for (int d = -radius; d <= radius; ++d) {
        double k = (cdf_antiderivative(h * (d + 1)) - 2.0 * cdf_antiderivative(h * d) +
                    cdf_antiderivative(h * (d - 1))) /
                   h;
        k = std::max(k, 0.0);
        kernel[static_cast<std::size_t>(d + radius)] = k;
        ksum += k;
    }
    if (ksum > 1.0) {
        for (double& k : kernel) k /= ksum;  // keep the kernel substochastic
    }

    const auto n = u.values.size();
    const auto m = n + 2 * static_cast<std::size_t>(radius);
    const double growth = std::exp(delta);

    std::vector<double> padded(n + 4 * static_cast<std::size_t>(radius), 0.0);
    for (std::size_t i = 0; i < n; ++i) padded[i + 2 * static_cast<std::size_t>(radius)] = u.values[i];

    DensityGrid out;
    out.x_lo = u.x_lo - radius * u.dx;
    out.dx = u.dx;
    out.leak = u.leak;
    out.values.assign(m, 0.0);
    const std::size_t klen = kernel.size();
    for (std::size_t j = 0; j < m; ++j) {
        const double* src = padded.data() + j;
        double acc = 0.0;
        for (std::size_t d = 0; d < klen; ++d) acc += kernel[d] * src[klen - 1 - d];
        out.values[j] = growth * acc;
    }

    out.leak += std::max(growth * u.mass() - out.mass(), 0.0);

    // trim near-empty edge cells so iterated steps do not grow the grid
    std::size_t lo = 0, hi = out.values.size();
    double dropped = 0.0, acc = 0.0;
    while (lo < hi && acc + out.dx * out.values[lo] < kTrimMassPerSide) acc += out.dx * out.values[lo++];
    dropped += acc;
    acc = 0.0;
    while (hi > lo && acc + out.dx * out.values[hi - 1] < kTrimMassPerSide) acc += out.dx * out.values[--hi];
    dropped += acc;
    if (lo > 0 || hi < out.values.size()) {
        out.values = std::vector<double>(out.values.begin() + static_cast<std::ptrdiff_t>(lo),
                                         out.values.begin() + static_cast<std::ptrdiff_t>(hi));
        out.x_lo += static_cast<double>(lo) * out.dx;
        out.leak += dropped;
    }
    return out;
}

namespace detail {

Alignment align(const DensityGrid& u, const DensityGrid& v) {
    Alignment a;
    double ratio = u.dx / v.dx;
    if (ratio >= 1.0) {
        double f = ratio;
        a.coarsen_v = static_cast<int>(std::lround(f));
        if (a.coarsen_v < 1 || std::abs(f - a.coarsen_v) > 1e-9 * f)
            throw std::invalid_argument("align: grid spacings are not integer multiples");
        a.coarsen_u = 1;
        a.dx = u.dx;
    } else {
        double f = 1.0 / ratio;
        a.coarsen_u = static_cast<int>(std::lround(f));
        if (a.coarsen_u < 1 || std::abs(f - a.coarsen_u) > 1e-9 * f)
            throw std::invalid_argument("align: grid spacings are not integer multiples");
        a.coarsen_v = 1;
        a.dx = v.dx;
    }
    double fine_dx = std::min(u.dx, v.dx);
    double off = (u.x_lo - v.x_lo) / fine_dx;
    if (std::abs(off - std::lround(off)) > 1e-6)
        throw std::invalid_argument("align: grid origins differ by a fraction of a cell");
    return a;
}

}  // namespace detail

DensityGrid refine(const DensityGrid& u, int factor) {
    if (factor < 1) throw std::invalid_argument("refine: factor must be >= 1");
    if (factor == 1) return u;
    DensityGrid out;
    out.x_lo = u.x_lo;
    out.dx = u.dx / factor;
    out.leak = u.leak;
    out.values.resize(u.values.size() * static_cast<std::size_t>(factor));
    for (std::size_t i = 0; i < u.values.size(); ++i)
        for (int k = 0; k < factor; ++k) out.values[i * factor + static_cast<std::size_t>(k)] = u.values[i];
    return out;
}

DensityGrid coarsen(const DensityGrid& u, int factor, double anchor) {
    if (factor < 1) throw std::invalid_argument("coarsen: factor must be >= 1");
    DensityGrid out;
    out.dx = u.dx * factor;
    out.leak = u.leak;
    // start the coarse lattice at or below u.x_lo, on the anchor lattice
    double k = std::floor((u.x_lo - anchor) / out.dx + 1e-9);
    out.x_lo = anchor + k * out.dx;
    double offset = (u.x_lo - out.x_lo) / u.dx;
    auto shift = static_cast<std::size_t>(std::lround(offset));
    std::size_t n_out = (u.values.size() + shift + static_cast<std::size_t>(factor) - 1) /
                        static_cast<std::size_t>(factor);
    out.values.assign(std::max<std::size_t>(n_out, 1), 0.0);
    for (std::size_t i = 0; i < u.values.size(); ++i)
        out.values[(i + shift) / static_cast<std::size_t>(factor)] += u.values[i] / factor;
    return out;
}

bool dominates(const DensityGrid& u, const DensityGrid& v, double tol) {
    auto a = detail::align(u, v);
    DensityGrid uu = (a.coarsen_u > 1) ? coarsen(u, a.coarsen_u, v.x_lo) : u;
    DensityGrid vv = (a.coarsen_v > 1) ? coarsen(v, a.coarsen_v, u.x_lo) : v;
    TailFunction fu = tail_function(uu);
    TailFunction fv = tail_function(vv);
    double lo = std::min(fu.x_lo, fv.x_lo);
    double hi = std::max(fu.edge(fu.size() - 1), fv.edge(fv.size() - 1));
    auto count = static_cast<std::size_t>(std::lround((hi - lo) / a.dx));
    for (std::size_t i = 0; i <= count; ++i) {
        double x = lo + static_cast<double>(i) * a.dx;
        if (fu.at(x) > fv.at(x) + tol) return false;
    }
    return true;
}

double l1_distance(const DensityGrid& u, const DensityGrid& v) {
    auto a = detail::align(u, v);
    DensityGrid uu = (a.coarsen_u > 1) ? coarsen(u, a.coarsen_u, v.x_lo) : u;
    DensityGrid vv = (a.coarsen_v > 1) ? coarsen(v, a.coarsen_v, u.x_lo) : v;
    double lo = std::min(uu.x_lo, vv.x_lo);
    auto iu = static_cast<std::ptrdiff_t>(std::lround((uu.x_lo - lo) / a.dx));
    auto iv = static_cast<std::ptrdiff_t>(std::lround((vv.x_lo - lo) / a.dx));
    auto n = std::max(iu + static_cast<std::ptrdiff_t>(uu.values.size()),
                      iv + static_cast<std::ptrdiff_t>(vv.values.size()));
    double s = 0.0;
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        double a_val = (i >= iu && i - iu < static_cast<std::ptrdiff_t>(uu.values.size()))
                           ? uu.values[static_cast<std::size_t>(i - iu)]
                           : 0.0;
        double b_val = (i >= iv && i - iv < static_cast<std::ptrdiff_t>(vv.values.size()))
                           ? vv.values[static_cast<std::size_t>(i - iv)]
                           : 0.0;
        s += std::abs(a_val - b_val);
    }
    return a.dx * s;
}

std::vector<double> sample(const DensityGrid& u, std::size_t n, std::uint64_t seed) {
    double total = u.mass();
    if (!(total > 0.0)) throw std::invalid_argument("sample: density has zero mass");
    std::vector<double> cum(u.values.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        acc += u.dx * u.values[i];
        cum[i] = acc;
    }
    Rng rng(derive_seed(seed, 0));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        double target = unif(rng) * total;
        auto it = std::upper_bound(cum.begin(), cum.end(), target);
        if (it == cum.end()) --it;
        auto i = static_cast<std::size_t>(it - cum.begin());
        double lo_mass = (i == 0) ? 0.0 : cum[i - 1];
        double cell_mass = cum[i] - lo_mass;
        double frac = cell_mass > 0.0 ? (target - lo_mass) / cell_mass : 0.5;
        out.push_back(u.edge(i) + frac * u.dx);
    }
    return out;
}

}  // namespace nbbm
