#include "nbbm/density_spec.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "nbbm/csv.hpp"
#include "nbbm/fbp.hpp"

namespace nbbm {

namespace {

double std_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

DensityGrid from_cell_masses(double x_lo, double dx, std::vector<double> masses, double truncated) {
    DensityGrid u;
    u.x_lo = x_lo;
    u.dx = dx;
    u.leak = truncated;
    u.values.resize(masses.size());
    for (std::size_t i = 0; i < masses.size(); ++i) u.values[i] = std::max(masses[i], 0.0) / dx;
    return u;
}

}  // namespace

DensitySpec DensitySpec::parse_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    DensitySpec s;
    s.kind = j.at("kind").get<std::string>();
    s.a = j.value("a", s.a);
    s.b = j.value("b", s.b);
    s.rate = j.value("rate", s.rate);
    s.alpha = j.value("alpha", s.alpha);
    s.x_max = j.value("x_max", s.x_max);
    s.dx = j.value("dx", s.dx);
    s.normalize = j.value("normalize", s.normalize);
    s.path = j.value("path", s.path);
    return s;
}

DensitySpec DensitySpec::from_file_or_json(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return parse_json(arg);
    if (arg.size() > 4 && arg.substr(arg.size() - 4) == ".csv") {
        DensitySpec s;
        s.kind = "file";
        s.path = arg;
        return s;
    }
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("density spec: cannot open " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

std::string DensitySpec::to_json() const {
    nlohmann::json j;
    j["kind"] = kind;
    j["a"] = a;
    j["b"] = b;
    j["rate"] = rate;
    j["alpha"] = alpha;
    j["x_max"] = x_max;
    j["dx"] = dx;
    j["normalize"] = normalize;
    if (!path.empty()) j["path"] = path;
    return j.dump();
}

DensityGrid make_density(const DensitySpec& spec) {
    if (!(spec.dx > 0.0)) throw std::invalid_argument("make_density: dx must be positive");
    DensityGrid u;

    if (spec.kind == "uniform") {
        if (!(spec.b > spec.a)) throw std::invalid_argument("make_density: uniform needs b > a");
        auto n = static_cast<std::size_t>(std::ceil((spec.b - spec.a) / spec.dx - 1e-9));
        std::vector<double> masses(n, 0.0);
        double height = 1.0 / (spec.b - spec.a);
        for (std::size_t i = 0; i < n; ++i) {
            double lo = spec.a + spec.dx * static_cast<double>(i);
            double hi = std::min(lo + spec.dx, spec.b);
            masses[i] = height * (hi - lo);
        }
        u = from_cell_masses(spec.a, spec.dx, std::move(masses), 0.0);
    } else if (spec.kind == "exponential") {
        if (!(spec.rate > 0.0)) throw std::invalid_argument("make_density: rate must be positive");
        double width = spec.x_max > 0.0 ? spec.x_max : 40.0 / spec.rate;
        auto n = static_cast<std::size_t>(std::ceil(width / spec.dx));
        std::vector<double> masses(n);
        for (std::size_t i = 0; i < n; ++i) {
            double lo = spec.dx * static_cast<double>(i);
            double hi = spec.dx * static_cast<double>(i + 1);
            masses[i] = std::exp(-spec.rate * lo) - std::exp(-spec.rate * hi);
        }
        double truncated = std::exp(-spec.rate * spec.dx * static_cast<double>(n));
        u = from_cell_masses(spec.a, spec.dx, std::move(masses), truncated);
    } else if (spec.kind == "gaussian") {
        if (!(spec.b > 0.0)) throw std::invalid_argument("make_density: gaussian sigma must be positive");
        double half = spec.x_max > 0.0 ? spec.x_max : 8.0 * spec.b;
        auto n = static_cast<std::size_t>(std::ceil(2.0 * half / spec.dx));
        double x_lo = spec.a - half;
        std::vector<double> masses(n);
        for (std::size_t i = 0; i < n; ++i) {
            double lo = (x_lo + spec.dx * static_cast<double>(i) - spec.a) / spec.b;
            double hi = (x_lo + spec.dx * static_cast<double>(i + 1) - spec.a) / spec.b;
            masses[i] = std_normal_cdf(hi) - std_normal_cdf(lo);
        }
        double truncated = 2.0 * std_normal_cdf(-half / spec.b);
        u = from_cell_masses(x_lo, spec.dx, std::move(masses), truncated);
    } else if (spec.kind == "wave") {
        double alpha = spec.alpha > 0.0 ? spec.alpha : std::sqrt(2.0);
        u = traveling_wave(alpha, spec.dx, spec.x_max).density;
    } else if (spec.kind == "file") {
        u = read_density_csv(spec.path);
    } else {
        throw std::invalid_argument("make_density: unknown kind '" + spec.kind + "'");
    }

    if (spec.normalize) {
        double m = u.mass();
        if (!(m > 0.0)) throw std::invalid_argument("make_density: cannot normalize zero mass");
        for (double& v : u.values) v /= m;
        u.leak = 0.0;
    }
    u.validate();
    return u;
}

}  // namespace nbbm
