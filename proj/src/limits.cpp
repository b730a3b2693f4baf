#include "berrut/limits.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "berrut/barycentric.hpp"
#include "berrut/denom_asymptotics.hpp"
#include "berrut/parallel.hpp"

namespace berrut {

namespace {

constexpr double kPi = 3.14159265358979323846;

void push_value(std::vector<double>& out, double v) {
    for (double w : out)
        if (std::fabs(w - v) <= 1e-12 * std::max(1.0, std::fabs(v))) return;
    out.push_back(v);
}

double scale_of(std::int64_t m, std::int64_t q) {
    const double r = static_cast<double>(m) / static_cast<double>(q);
    return limit_scale(r * r);
}

} // namespace

BiasPair bias(const FunctionModel& model, double x) {
    if (!(x > -1.0 && x < 1.0))
        throw std::domain_error("bias: x must lie strictly inside (-1,1)");
    const double fm = model.f(-1.0), fp = model.f(1.0), fx = model.f(x);
    const double left = (fx - fm) / (2.0 * (x + 1.0));
    const double right = (fx - fp) / (2.0 * (x - 1.0));
    return {right - left, -right - left};
}

LimitSet denominator_limit_set(const RationalPoint& x, Parity parity) {
    LimitSet set;
    set.parity = parity;

    const std::int64_t a = x.num, b = x.den;
    switch (x.parity_class()) {
    case RationalPoint::ParityClass::OddOdd: {
        const std::int64_t q = b;
        if (parity == Parity::Odd) {
            for (std::int64_t l = 0; l <= (q - 1) / 2; ++l) {
                const double v = scale_of(2 * l, q);
                push_value(set.values, v);
                push_value(set.values, -v);
            }
        } else {
            for (std::int64_t l = 0; l <= (q - 3) / 2; ++l) {
                const double v = scale_of(2 * l + 1, q);
                push_value(set.values, v);
                push_value(set.values, -v);
            }
        }
        break;
    }
    case RationalPoint::ParityClass::EvenNum: {
        // (a,b) = (2p, q) with q odd; index ranges taken verbatim, the set
        // need not be symmetric under negation.
        const std::int64_t p = a / 2, q = b;
        for (std::int64_t s = 0; s <= 1; ++s) {
            const std::int64_t lo = (parity == Parity::Odd) ? s - p + 1 : s + 1;
            const std::int64_t hi = (parity == Parity::Odd) ? s - p + q - 1 : s + q - 1;
            for (std::int64_t two_l = lo; two_l <= hi; ++two_l) {
                if (two_l % 2 != 0) continue;
                const std::int64_t m = (parity == Parity::Odd)
                                           ? 2 * two_l + 2 * p - 2 * s - q
                                           : 2 * two_l - 2 * s - q;
                const double v = scale_of(m < 0 ? -m : m, q);
                push_value(set.values, (s % 2 == 0) ? v : -v);
            }
        }
        break;
    }
    case RationalPoint::ParityClass::EvenDen: {
        // the numerator does not enter the sets in this class
        const std::int64_t q = b / 2;
        if (parity == Parity::Odd) {
            for (std::int64_t l = 0; l <= q - 1; ++l) {
                const double v = scale_of(2 * l + 1, 2 * q);
                push_value(set.values, v);
                push_value(set.values, -v);
            }
        } else {
            for (std::int64_t l = 0; l <= q - 1; ++l) {
                const double v = scale_of(l, q);
                push_value(set.values, v);
                push_value(set.values, -v);
            }
        }
        break;
    }
    }

    std::sort(set.values.begin(), set.values.end());
    return set;
}

LimitSet error_limit_set(const FunctionModel& model, double x,
                         const std::optional<RationalPoint>& x_rational,
                         Parity parity) {
    const BiasPair b = bias(model, x);
    const double bias_value = (parity == Parity::Odd) ? b.odd_bias : b.even_bias;

    LimitSet set;
    set.parity = parity;
    if (x_rational) {
        const LimitSet den = denominator_limit_set(*x_rational, parity);
        for (double y : den.values) push_value(set.values, bias_value / y);
        std::sort(set.values.begin(), set.values.end());
        return set;
    }
    set.is_interval = true;
    set.hi = 2.0 * std::fabs(bias_value) / kPi;
    set.lo = -set.hi;
    return set;
}

std::vector<ScanPoint> accumulation_scan(const FunctionModel& model, double x,
                                         Parity parity, int n_min, int n_max) {
    if (n_min >= n_max) throw std::invalid_argument("accumulation_scan: need n_min < n_max");
    if (!(x > -1.0 && x < 1.0))
        throw std::invalid_argument("accumulation_scan: x must lie inside (-1,1)");

    int first = n_min;
    if ((parity == Parity::Odd) != (first % 2 != 0)) ++first;
    std::vector<int> ns;
    for (int n = first; n <= n_max; n += 2) ns.push_back(n);

    const double fx = model.f(x);
    std::vector<ScanPoint> out(ns.size());
    std::vector<char> keep(ns.size(), 0);
    parallel_for(ns.size(), [&](std::size_t i) {
        const int n = ns[i];
        if (decompose(n, x).is_node) return;
        const SampledFunction samples = SampledFunction::sample(model.f, n);
        const double err = evaluate(samples, WeightScheme::berrut(), x) - fx;
        out[i] = {n, n * err};
        keep[i] = 1;
    });

    std::vector<ScanPoint> result;
    result.reserve(out.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        if (keep[i]) result.push_back(out[i]);
    return result;
}

} // namespace berrut
