#pragma once

#include <optional>
#include <vector>

#include "berrut/grid.hpp"
#include "berrut/models.hpp"

namespace berrut {

enum class Parity { Odd, Even };

/// The two parity-dependent leading terms of the interpolation error
/// numerator:
///   odd_bias  = (f(x)-f(1))/(2(x-1)) - (f(x)-f(-1))/(2(x+1))
///   even_bias = (f(1)-f(x))/(2(x-1)) + (f(-1)-f(x))/(2(x+1))
/// odd_bias vanishes identically for linear f, even_bias for constants.
struct BiasPair {
    double odd_bias;
    double even_bias;
};

/// Throws std::domain_error at x = +-1 (one-sided limits are not formed).
BiasPair bias(const FunctionModel& model, double x);

/// Set of accumulation points, either finite (rational x) or a symmetric
/// closed interval (irrational x).
struct LimitSet {
    Parity parity;
    bool is_interval = false;
    std::vector<double> values; // finite case: sorted, deduplicated
    double lo = 0.0, hi = 0.0;  // interval case
};

/// Accumulation points of D_n(x)/n along sequences of the given parity for
/// rational x. With x + 1 = a/b in lowest terms the three parity classes
/// of (a,b) give three different finite sets of +-S(m^2/q^2) values.
LimitSet denominator_limit_set(const RationalPoint& x, Parity parity);

/// Accumulation points of n (B_n f(x) - f(x)). Rational x: the bias divided
/// by each denominator limit. Irrational x (no rational form passed): the
/// interval [-2|bias|/pi, 2|bias|/pi].
LimitSet error_limit_set(const FunctionModel& model, double x,
                         const std::optional<RationalPoint>& x_rational,
                         Parity parity);

struct ScanPoint {
    int n;
    double scaled_error; // n (B_n f(x) - f(x))
};

/// Scaled interpolation errors along n of one parity in [n_min, n_max],
/// skipping n for which x is a node. Deterministic order, ascending n.
std::vector<ScanPoint> accumulation_scan(const FunctionModel& model, double x,
                                         Parity parity, int n_min, int n_max);

} // namespace berrut
