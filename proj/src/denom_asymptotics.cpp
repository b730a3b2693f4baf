#include "berrut/denom_asymptotics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "berrut/barycentric.hpp"
#include "berrut/summation.hpp"

namespace berrut {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_config(const SeriesConfig& cfg) {
    if (!(cfg.tol >= 1e-15)) throw std::invalid_argument("SeriesConfig: tol below 1e-15");
    if (cfg.max_pairs < 8) throw std::invalid_argument("SeriesConfig: max_pairs < 8");
}

// Sum of the k >= 1 terms of the series, with the terms paired two by two
// into a positive decreasing sequence p_l, plus the analytic remainder.
// The pair sequence behaves like 1/(4 l^2); the midpoint-rule integral
//   int_{L+1/2}^inf p(t) dt = (1/4) log(((4L+3)^2 - r)/((4L+1)^2 - r))
// replaces the tail with error below 1/(48 L^3), so L ~ (24 tol)^(-1/3)
// pairs reach the requested absolute tolerance.
double tail_series(double r, const SeriesConfig& cfg) {
    const double l_min = std::cbrt(1.0 / (24.0 * cfg.tol));
    CompensatedSum pairs;
    long long l = 1;
    for (;; ++l) {
        const double a1 = (8.0 * l - 2.0) / ((4.0 * l - 1.0) * (4.0 * l - 1.0) - r);
        const double a2 = (8.0 * l + 2.0) / ((4.0 * l + 1.0) * (4.0 * l + 1.0) - r);
        const double p = a1 - a2;
        pairs.add(p);
        if (l >= cfg.max_pairs) break;
        if (static_cast<double>(l) >= l_min || p < cfg.tol) break;
    }
    const double T = static_cast<double>(l) + 0.5;
    const double lo = (4.0 * T - 1.0) * (4.0 * T - 1.0) - r;
    const double remainder = 0.25 * std::log1p(16.0 * T / lo);
    return -(pairs.value() + remainder);
}

} // namespace

ExtendedReal limit_scale(double r, const SeriesConfig& cfg) {
    check_config(cfg);
    if (!(r >= 0.0 && r <= 1.0))
        throw std::invalid_argument("limit_scale: argument outside [0,1]");
    if (r == 1.0) return std::numeric_limits<double>::infinity();
    return 2.0 / (1.0 - r) + tail_series(r, cfg);
}

double limit_scale_tail(double r, const SeriesConfig& cfg) {
    check_config(cfg);
    if (!(r >= 0.0 && r <= 1.0))
        throw std::invalid_argument("limit_scale_tail: argument outside [0,1]");
    return tail_series(r, cfg);
}

double limit_scale_inverse(ExtendedReal y, const SeriesConfig& cfg) {
    check_config(cfg);
    if (std::isinf(y) && y > 0.0) return 1.0;
    if (!(y >= kPi / 2.0 - 1e-12))
        throw std::invalid_argument("limit_scale_inverse: y below pi/2");

    // The sandwich -1/2 <= S(r) - 2/(1-r) <= (pi-4)/2 brackets the root:
    // r in [1 - 2/(y + (4-pi)/2), 1 - 2/(y + 1/2)].
    double lo = 1.0 - 2.0 / (y + (4.0 - kPi) / 2.0);
    double hi = 1.0 - 2.0 / (y + 0.5);
    lo = std::max(0.0, lo - 1e-15);
    hi = std::min(1.0, hi + 1e-15);

    const double target_tol = 1e-10 * std::max(1.0, std::fabs(y));
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double v = limit_scale(mid, cfg);
        if (std::fabs(v - y) <= 0.25 * target_tol) return mid;
        if (v < y) lo = mid; else hi = mid;
        if (hi - lo <= 1e-17 * std::max(1.0, mid)) break;
    }
    return 0.5 * (lo + hi);
}

double scale_residual(int n, double x, const SeriesConfig& cfg) {
    const PositionDecomposition d = decompose(n, x);
    if (d.is_node) throw std::domain_error("node singularity");
    const double scaled = std::fabs(denominator(n, x)) / n;
    return std::fabs(scaled - limit_scale(d.rho * d.rho, cfg));
}

double residual_bound_quarter(std::int64_t iota, int n) {
    return 1.0 / (4.0 * (1.0 + static_cast<double>(iota))) +
           1.0 / (4.0 * (static_cast<double>(n) - static_cast<double>(iota)));
}

double residual_bound_tail(std::int64_t iota, double rho, int n) {
    const double i = static_cast<double>(iota);
    const double left = 0.25 * std::log1p(2.0 / (2.0 * i + 1.0 + rho));
    const double right = 0.25 * std::log1p(2.0 / (2.0 * (n - i) - 1.0 - rho));
    return std::min(left + right, 0.5);
}

double scale_residual_slack(int n, double rho) {
    constexpr double eps = 2.220446049250313e-16;
    const double r = rho * rho;
    const double pole = 2.0 / (1.0 - r);
    const double slope = pole * pole / 2.0 + 0.25;
    const double dr = (2.0 * std::fabs(rho) * (n + 3.0) + 1.0) * eps;
    return slope * dr + 4.0 * eps * pole + 2e-12;
}

} // namespace berrut
