#pragma once

#include <cstdint>

#include "berrut/grid.hpp"

namespace berrut {

/// Truncation control for the alternating series behind limit_scale.
struct SeriesConfig {
    double tol = 1e-12;      // absolute error target, >= 1e-15
    int max_pairs = 1000000; // hard cap on summed term pairs, >= 8
};

/// The increasing homeomorphism S : [0,1] -> [pi/2, +inf] with
///   S(r) = sum_{k>=0} (-1)^k (4k+2)/((2k+1)^2 - r).
/// S(rho^2) is the limiting value of |D_n(x)|/n at cell offset rho.
/// S(1) = +infinity; elsewhere the absolute error is <= cfg.tol.
/// Throws std::invalid_argument outside [0,1].
ExtendedReal limit_scale(double r, const SeriesConfig& cfg = {});

/// limit_scale(r) - 2/(1-r); bounded, decreasing, in [-1/2, (pi-4)/2].
double limit_scale_tail(double r, const SeriesConfig& cfg = {});

/// Inverse of limit_scale on [pi/2, +inf]; +infinity maps to 1.
/// |limit_scale(result) - y| <= 1e-10 * max(1, |y|). Throws for y < pi/2.
double limit_scale_inverse(ExtendedReal y, const SeriesConfig& cfg = {});

/// | |D_n(x)|/n - limit_scale(rho_n(x)^2) | at a regular point. Throws
/// std::domain_error("node singularity") when x is a node.
double scale_residual(int n, double x, const SeriesConfig& cfg = {});

/// Quarter-cell form of the residual bound: 1/(4(1+iota)) + 1/(4(n-iota)).
/// The exact tail analysis shows this can be exceeded by up to about
/// 1/(8 (1+iota)^2) + 1/(8 (n-iota)^2); see residual_bound_tail for a
/// bound that always holds.
double residual_bound_quarter(std::int64_t iota, int n);

/// Provable residual bound: each one-sided tail of the node sum is a
/// convex decreasing pair series, so it is at most its midpoint integral:
///   (1/4) log(1 + 2/(2 iota + 1 + rho)) + (1/4) log(1 + 2/(2(n-iota) - 1 - rho)),
/// and the global cap 1/2 (attained only in the n = 1, |rho| -> 1 limit)
/// applies on top.
double residual_bound_tail(std::int64_t iota, double rho, int n);

/// Double-precision measurement limit of scale_residual: the computed
/// offset carries ~n*eps of node rounding and the series slope grows like
/// 2/(1-rho^2)^2, so comparisons against residual bounds need this much
/// headroom near cell edges.
double scale_residual_slack(int n, double rho);

} // namespace berrut
