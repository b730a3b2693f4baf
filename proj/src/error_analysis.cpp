#include "berrut/error_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "berrut/barycentric.hpp"
#include "berrut/parallel.hpp"
#include "berrut/summation.hpp"

namespace berrut {

double numerator_remainder(const FunctionModel& model, int n, double x) {
    UniformGrid grid(n);
    if (!(x >= -1.0 && x <= 1.0))
        throw std::invalid_argument("numerator_remainder: x outside [-1,1]");

    const double fx = model.f(x);
    CompensatedSum acc;
    double g0 = 0.0, gn = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double d = x - grid.node(k);
        if (d == 0.0) return 0.0;
        const double g = (model.f(grid.node(k)) - fx) / d;
        if (k == 0) { g0 = g; continue; }
        if (k == n) { gn = g; continue; }
        acc.add((k % 2 == 0) ? g : -g);
    }
    acc.add(0.5 * g0);
    acc.add((n % 2 == 0) ? 0.5 * gn : -0.5 * gn);
    return acc.value();
}

double decomposition_residual(const FunctionModel& model, int n, double x) {
    const SampledFunction samples = SampledFunction::sample(model.f, n);
    if (decompose(n, x).is_node) throw std::domain_error("node singularity");

    const double lhs = evaluate(samples, WeightScheme::berrut(), x) - model.f(x);
    const BiasPair b = bias(model, x);
    const double bias_value = (n % 2 != 0) ? b.odd_bias : b.even_bias;
    const double rhs =
        (numerator_remainder(model, n, x) + bias_value) / denominator(n, x);
    return std::fabs(lhs - rhs);
}

std::vector<ConvergenceRecord> uniform_study(const FunctionModel& model,
                                             std::span<const int> n_values,
                                             Parity parity, int probes) {
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        const int n = n_values[i];
        if ((parity == Parity::Odd) != (n % 2 != 0))
            throw std::invalid_argument("uniform_study: n parity mismatch");
        if (i > 0 && n_values[i - 1] >= n)
            throw std::invalid_argument("uniform_study: n values must ascend");
    }

    const std::vector<double> xs = probe_grid(probes);
    std::vector<ConvergenceRecord> records(n_values.size());
    parallel_for(n_values.size(), [&](std::size_t i) {
        const int n = n_values[i];
        const SampledFunction samples = SampledFunction::sample(model.f, n);
        double sup = 0.0, sup_corr = 0.0;
        for (const double x : xs) {
            if (decompose(n, x).is_node) continue;
            const double fx = model.f(x);
            const double err = evaluate(samples, WeightScheme::berrut(), x) - fx;
            sup = std::max(sup, std::fabs(err));
            const BiasPair b = bias(model, x);
            const double bias_value = (parity == Parity::Odd) ? b.odd_bias : b.even_bias;
            const double corr = err - bias_value / denominator(n, x);
            sup_corr = std::max(sup_corr, std::fabs(corr));
        }
        records[i] = {n, sup, n * sup, n * sup_corr};
    });
    return records;
}

double bias_sup_norm(const FunctionModel& model, Parity parity, int probes) {
    const std::vector<double> xs = probe_grid(probes);
    double sup = 0.0;
    for (double x : xs) {
        const double xc = std::clamp(x, -1.0 + 1e-6, 1.0 - 1e-6);
        const BiasPair b = bias(model, xc);
        sup = std::max(sup, std::fabs(parity == Parity::Odd ? b.odd_bias : b.even_bias));
    }
    return sup;
}

bool bv_bound_check(const FunctionModel& model, int n, int probes) {
    if (!model.tv_fprime)
        throw std::invalid_argument("bv_bound_check: model lacks tv_fprime");
    const double lhs = n * sup_error(model.f, n, WeightScheme::berrut(), probes);
    const double norm = std::max(bias_sup_norm(model, Parity::Odd, probes),
                                 bias_sup_norm(model, Parity::Even, probes));
    return lhs <= *model.tv_fprime / 2.0 + norm + 1e-6;
}

} // namespace berrut
