#include "berrut/sawtooth.hpp"

#include <cmath>
#include <stdexcept>

#include "berrut/summation.hpp"

namespace berrut {

namespace {

// sum_{l=lo}^{hi} 1/(16 l^2 - 1)
double pair_kernel_sum(std::int64_t lo, std::int64_t hi) {
    CompensatedSum acc;
    for (std::int64_t l = lo; l <= hi; ++l) {
        const double dl = static_cast<double>(l);
        acc.add(1.0 / (16.0 * dl * dl - 1.0));
    }
    return acc.value();
}

// sum_{k=k_lo}^{k_hi} (-1)^(k+1) f(k/(2qm)) / (2k - 1) via the evaluator
double direct_node_sum(std::int64_t q, const SawtoothParams& params,
                       std::int64_t k_lo, std::int64_t k_hi) {
    const double scale = 2.0 * static_cast<double>(q) * static_cast<double>(params.m);
    CompensatedSum acc;
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
        const double x = static_cast<double>(k) / scale;
        const double v = sawtooth(params, x);
        const double sign = (k % 2 == 0) ? -1.0 : 1.0;
        acc.add(sign * v / (2.0 * static_cast<double>(k) - 1.0));
    }
    return acc.value();
}

} // namespace

SawtoothParams SawtoothParams::of(std::int64_t m) {
    if (m < 16) throw std::invalid_argument("SawtoothParams: m too small");
    const auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(m))));
    if (s * s != m || s % 4 != 0)
        throw std::invalid_argument("SawtoothParams: sqrt(m) must be an integer multiple of 4");
    return {m, s};
}

double sawtooth(const SawtoothParams& params, double x) {
    const double m = static_cast<double>(params.m);
    const double s = static_cast<double>(params.sqrt_m);
    if (x < 1.0 / m || x >= (s - 3.0) / m) return 0.0;

    const auto j = static_cast<std::int64_t>(std::floor(x * m));
    const std::int64_t p = j / 4;
    const std::int64_t r = j % 4;
    if (r <= 1) return x - (4.0 * static_cast<double>(p) + 1.0) / m;
    return (4.0 * static_cast<double>(p) + 3.0) / m - x;
}

double sawtooth_node_value(const SawtoothParams& params, std::int64_t k) {
    const std::int64_t half = params.m / 2;
    const std::int64_t last = half + (params.sqrt_m - 4) / 2;
    if (k <= half || k > last) return 0.0;
    const double v = 1.0 / static_cast<double>(params.m);
    return (k % 2 == 0) ? -v : v;
}

HarmonicBound shifted_harmonic(double a, std::int64_t l) {
    if (!(a > 0.0) || l < 1)
        throw std::invalid_argument("shifted_harmonic: need a > 0 and l >= 1");
    CompensatedSum acc;
    for (std::int64_t j = l - 1; j >= 0; --j)
        acc.add(1.0 / (a + static_cast<double>(j)));
    const double dl = static_cast<double>(l);
    const double lower = std::log1p(dl / a) + 0.5 / a - 0.5 / (a + dl);
    return {acc.value(), lower};
}

HatSums hat_sums(std::int64_t q, const SawtoothParams& params, std::int64_t p) {
    if (q < 16) throw std::invalid_argument("hat_sums: need q >= 16");
    const std::int64_t h = (params.sqrt_m - 8) / 4;
    if (p < 0 || p > h) throw std::invalid_argument("hat_sums: p out of range");

    const double m = static_cast<double>(params.m);
    const double qd = static_cast<double>(q);
    const double pd = static_cast<double>(p);

    HatSums out{};
    if (p == 0) {
        out.raise_direct = direct_node_sum(q, params, 2 * q, 4 * q - 1);
        out.raise_closed =
            (4.0 * qd - 1.0) / (2.0 * qd * m) * pair_kernel_sum(q, 2 * q - 1);
    } else {
        out.raise_direct = direct_node_sum(q, params, 8 * p * q, 8 * p * q + 4 * q - 1);
        out.raise_closed = (16.0 * pd * qd + 4.0 * qd - 1.0) / (2.0 * qd * m) *
                           pair_kernel_sum(4 * p * q, 4 * p * q + 2 * q - 1);
    }
    out.fall_direct =
        direct_node_sum(q, params, 8 * p * q + 4 * q, 8 * (p + 1) * q - 1);
    out.fall_closed = -(16.0 * pd * qd + 12.0 * qd - 1.0) / (2.0 * qd * m) *
                      pair_kernel_sum(4 * p * q + 2 * q, 4 * (p + 1) * q - 1);
    return out;
}

EdgeSums edge_raise(std::int64_t q, const SawtoothParams& params) {
    if (q < 16) throw std::invalid_argument("edge_raise: need q >= 16");
    const std::int64_t s = params.sqrt_m;
    const std::int64_t cap = (s - 4) / 4; // raise index of the final half-raise
    const double m = static_cast<double>(params.m);
    const double qd = static_cast<double>(q);
    const double pd = static_cast<double>(cap);

    EdgeSums out{};
    out.plus_direct =
        direct_node_sum(q, params, 2 * q * (s - 4), 2 * q * (s - 3) - 1);
    out.plus_closed = (16.0 * pd * qd + 4.0 * qd - 1.0) / (2.0 * qd * m) *
                      pair_kernel_sum(4 * cap * q, 4 * cap * q + q - 1);
    return out;
}

HatTermRoutes hat_term_routes(std::int64_t q, std::int64_t p, double xi) {
    if (q < 16 || p < 1 || !(xi >= 0.0 && xi < 2.0))
        throw std::invalid_argument("hat_term_routes: need q >= 16, p >= 1, xi in [0,2)");
    const double qd = static_cast<double>(q);
    const double pd = static_cast<double>(p);
    const double k = 4.0 * pd * qd + xi * qd;

    const double a = 16.0 * pd * qd + 4.0 * qd - 1.0;
    const double b = 16.0 * pd * qd + 12.0 * qd - 1.0;
    const double kq = k + 2.0 * qd;
    const double direct = a * (16.0 * kq * kq - 1.0) - b * (16.0 * k * k - 1.0);

    const double expanded =
        8.0 * qd *
        (256.0 * pd * pd * qd * qd + 256.0 * pd * qd * qd - 32.0 * pd * qd -
         16.0 * qd * qd * xi * xi + 32.0 * qd * qd + 32.0 * qd * qd * xi -
         8.0 * qd * xi - 8.0 * qd + 1.0);
    return {direct, expanded};
}

MainTerm main_term(const SawtoothParams& params) {
    const std::int64_t m = params.m;
    const std::int64_t s = params.sqrt_m;
    if (s < 8) throw std::invalid_argument("main_term: need sqrt(m) >= 8");

    const double md = static_cast<double>(m);
    const double t = 1.0 / md;

    CompensatedSum direct;
    for (std::int64_t k = 0; k <= m; ++k) {
        const double xk = 2.0 * static_cast<double>(k) / md - 1.0;
        const double v = sawtooth(params, xk);
        if (v == 0.0) continue;
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        direct.add(sign * v / (t - xk));
    }

    CompensatedSum reduced;
    for (std::int64_t i = (s - 4) / 2; i >= 1; --i)
        reduced.add(1.0 / (2.0 * static_cast<double>(i) - 1.0));

    const double sd = static_cast<double>(s);
    const double delta = 1.0 + std::log1p(-3.0 / sd) - 1.0 / (sd - 3.0);
    const double formula = std::log(md) / 4.0 + delta / 2.0;
    return {direct.value(), reduced.value(), formula, delta};
}

bool support_disjoint(int j_max) {
    if (j_max < 3 || j_max > 5)
        throw std::invalid_argument("support_disjoint: j_max must be in [3,5]");
    for (int j = 2; j < j_max; ++j) {
        const std::int64_t n1 = std::int64_t{1} << (std::int64_t{1} << j);
        const std::int64_t n2 = std::int64_t{1} << (std::int64_t{1} << (j + 1));
        // (sqrt(n2) - 3) / n2 < 1 / n1 with sqrt(n2) = n1, cross-multiplied
        const auto lhs = static_cast<__int128>(n1 - 3) * n1;
        const auto rhs = static_cast<__int128>(n2);
        if (!(lhs < rhs)) return false;
    }
    return true;
}

bool cross_terms_vanish(int i, int j) {
    if (i < 2 || i > 5 || j < 2 || j > 5 || i == j)
        throw std::invalid_argument("cross_terms_vanish: need distinct i, j in [2,5]");
    const auto mi = std::int64_t{1} << (std::int64_t{1} << i);
    const auto mj = std::int64_t{1} << (std::int64_t{1} << j);
    const SawtoothParams fi = SawtoothParams::of(mi);

    if (sawtooth(fi, 1.0 / static_cast<double>(mj)) != 0.0) return false;
    if (i > j && j <= 4) {
        for (std::int64_t k = 0; k <= mj; ++k) {
            const double xk = 2.0 * static_cast<double>(k) / static_cast<double>(mj) - 1.0;
            if (sawtooth(fi, xk) != 0.0) return false;
        }
    }
    return true;
}

bool growth_chain_holds(int j) {
    if (j < 16 || j > 1000)
        throw std::invalid_argument("growth_chain_holds: j out of [16,1000]");
    const double log2_lo = 0.69314718055994528;
    const double log2_hi = 0.69314718055994531;
    const double p = std::exp2(static_cast<double>(j)); // exact power of two
    const double L_lo = p * log2_lo * (1.0 - 1e-14);
    const double L_hi = p * log2_hi * (1.0 + 1e-14);
    if (!(static_cast<double>(j) < L_lo / 1000.0)) return false;
    return L_lo / 16.0 - 9.0 * static_cast<double>(j) / 8.0 >= L_hi / 20.0;
}

} // namespace berrut
