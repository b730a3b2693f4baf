#include "berrut/barycentric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "berrut/parallel.hpp"
#include "berrut/summation.hpp"

namespace berrut {

WeightScheme WeightScheme::custom(std::vector<double> weights) {
    for (double w : weights)
        if (w == 0.0) throw std::invalid_argument("WeightScheme: zero custom weight");
    WeightScheme s(Kind::Custom);
    s.custom_ = std::move(weights);
    return s;
}

double WeightScheme::weight(int k, int n) const {
    switch (kind_) {
    case Kind::Berrut:
        return (k % 2 == 0) ? 1.0 : -1.0;
    case Kind::EndpointHalved: {
        const double s = (k % 2 == 0) ? 1.0 : -1.0;
        return (k == 0 || k == n) ? 0.5 * s : s;
    }
    case Kind::Custom:
        if (custom_.size() != static_cast<std::size_t>(n) + 1)
            throw std::invalid_argument("WeightScheme: custom weight count != n + 1");
        return custom_[static_cast<std::size_t>(k)];
    }
    return 0.0;
}

SampledFunction::SampledFunction(UniformGrid g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
    if (values.size() != static_cast<std::size_t>(grid.n) + 1)
        throw std::invalid_argument("SampledFunction: need n + 1 values");
}

SampledFunction SampledFunction::sample(const std::function<double(double)>& f, int n) {
    UniformGrid grid(n);
    std::vector<double> v(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) v[static_cast<std::size_t>(k)] = f(grid.node(k));
    return {grid, std::move(v)};
}

double denominator(int n, double x) {
    UniformGrid grid(n);
    CompensatedSum den;
    for (int k = 0; k <= n; ++k) {
        const double d = x - grid.node(k);
        if (d == 0.0) throw std::domain_error("node singularity");
        const double s = (k % 2 == 0) ? 1.0 : -1.0;
        den.add(s / d);
    }
    return den.value();
}

double numerator(const SampledFunction& samples, double x) {
    const UniformGrid& grid = samples.grid;
    CompensatedSum num;
    for (int k = 0; k <= grid.n; ++k) {
        const double d = x - grid.node(k);
        if (d == 0.0) throw std::domain_error("node singularity");
        const double s = (k % 2 == 0) ? 1.0 : -1.0;
        // same per-term arithmetic as evaluate(), so the two routes agree bitwise
        num.add((s / d) * samples.values[static_cast<std::size_t>(k)]);
    }
    return num.value();
}

double evaluate(const SampledFunction& samples, const WeightScheme& weights, double x) {
    const UniformGrid& grid = samples.grid;
    const int n = grid.n;
    CompensatedSum num, den;
    for (int k = 0; k <= n; ++k) {
        const double d = x - grid.node(k);
        if (d == 0.0) return samples.values[static_cast<std::size_t>(k)];
        const double w = weights.weight(k, n);
        const double inv = w / d;
        den.add(inv);
        num.add(inv * samples.values[static_cast<std::size_t>(k)]);
    }
    return num.value() / den.value();
}

std::vector<double> probe_grid(int probes) {
    if (probes < 2) throw std::invalid_argument("probe_grid: need probes >= 2");
    std::vector<double> xs(static_cast<std::size_t>(probes));
    for (int j = 0; j < probes; ++j)
        xs[static_cast<std::size_t>(j)] = -1.0 + (2.0 * j + 1.0) / probes;
    return xs;
}

double sup_error(const std::function<double(double)>& f, int n,
                 const WeightScheme& weights, int probes) {
    const SampledFunction samples = SampledFunction::sample(f, n);
    const std::vector<double> xs = probe_grid(probes);
    std::vector<double> errs(xs.size(), 0.0);
    parallel_for(xs.size(), [&](std::size_t j) {
        const double x = xs[j];
        if (decompose(n, x).is_node) return; // backstop: exact value there
        errs[j] = std::fabs(evaluate(samples, weights, x) - f(x));
    });
    return *std::max_element(errs.begin(), errs.end());
}

} // namespace berrut
