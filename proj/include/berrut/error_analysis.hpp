#pragma once

#include <span>
#include <vector>

#include "berrut/limits.hpp"
#include "berrut/models.hpp"

namespace berrut {

/// Remainder of the error numerator after the parity bias is removed:
///   g_k = (f(x_k) - f(x)) / (x - x_k),
///   remainder = g_0/2 + (-1)^n g_n/2 + sum_{k=1}^{n-1} (-1)^k g_k,
/// and 0 when x is a node (bitwise). Satisfies exactly
///   B_n f(x) - f(x) = (remainder + bias)/D_n(x)
/// with bias = odd_bias for odd n and even_bias for even n.
double numerator_remainder(const FunctionModel& model, int n, double x);

/// |(B_n f(x) - f(x)) - (remainder + bias)/D_n(x)|; an algebraic identity,
/// so the result is pure rounding noise. Throws on nodes.
double decomposition_residual(const FunctionModel& model, int n, double x);

struct ConvergenceRecord {
    int n;
    double sup_err;        // max |B_n f - f| over the probe grid
    double scaled_err;     // n * sup_err
    double bias_corrected; // n * max |B_n f - f - bias/D_n|
};

/// One record per n (ascending, all of the requested parity), probing on
/// probe_grid(probes). Parallel over n; output order is deterministic.
std::vector<ConvergenceRecord> uniform_study(const FunctionModel& model,
                                             std::span<const int> n_values,
                                             Parity parity, int probes);

/// Sup of |odd_bias| (or |even_bias|) over the probe grid, with probes
/// clamped to +-(1 - 1e-6) in place of the endpoint limits.
double bias_sup_norm(const FunctionModel& model, Parity parity, int probes);

/// n * sup_err <= tv_fprime/2 + max(odd norm, even norm) + 1e-6 on the
/// probe grid. Throws std::invalid_argument when tv_fprime is missing.
bool bv_bound_check(const FunctionModel& model, int n, int probes);

} // namespace berrut
