#pragma once

#include <functional>
#include <vector>

#include "berrut/grid.hpp"

namespace berrut {

/// Barycentric weights on a uniform grid. Berrut: w_k = (-1)^k. The
/// endpoint-halved variant keeps the signs and halves |w_0| and |w_n|,
/// which is the d = 1 member of the Floater-Hormann family.
class WeightScheme {
  public:
    enum class Kind { Berrut, EndpointHalved, Custom };

    static WeightScheme berrut() { return WeightScheme(Kind::Berrut); }
    static WeightScheme endpoint_halved() { return WeightScheme(Kind::EndpointHalved); }
    /// Custom weights must be nonzero and of length n + 1.
    static WeightScheme custom(std::vector<double> weights);

    [[nodiscard]] Kind kind() const { return kind_; }

    /// Weight for node k of a grid with n intervals.
    [[nodiscard]] double weight(int k, int n) const;

  private:
    explicit WeightScheme(Kind kind) : kind_(kind) {}
    Kind kind_;
    std::vector<double> custom_;
};

/// Values of a function at the nodes of a uniform grid.
struct SampledFunction {
    UniformGrid grid;
    std::vector<double> values;

    SampledFunction(UniformGrid g, std::vector<double> v);
    static SampledFunction sample(const std::function<double(double)>& f, int n);
};

/// D_n(x) = sum_k (-1)^k / (x - x_k), compensated. Throws
/// std::domain_error("node singularity") when x is a node bitwise.
double denominator(int n, double x);

/// N_n(f,x) = sum_k (-1)^k f(x_k) / (x - x_k), compensated. Throws on nodes.
double numerator(const SampledFunction& samples, double x);

/// Second barycentric form with the given weights. At a node (bitwise hit)
/// returns the stored sample, which removes the singularity.
double evaluate(const SampledFunction& samples, const WeightScheme& weights, double x);

/// Probe grid of P points x_j = -1 + (2j+1)/P, j = 0..P-1; never contains
/// the endpoints, and bitwise node collisions are filtered by callers.
std::vector<double> probe_grid(int probes);

/// max_j |evaluate(f_n, w, x_j) - f(x_j)| over the probe grid, skipping
/// probes that coincide bitwise with grid nodes.
double sup_error(const std::function<double(double)>& f, int n,
                 const WeightScheme& weights, int probes);

} // namespace berrut
