#pragma once

#include <cstdint>

namespace berrut {

/// Parameters of the 1-Lipschitz sawtooth family: m with sqrt(m) an
/// integer multiple of 4. Support of the function is [1/m, (sqrt(m)-3)/m);
/// every slope is -1, 0 or +1.
struct SawtoothParams {
    std::int64_t m;
    std::int64_t sqrt_m;

    /// Validates and takes the exact integer square root.
    static SawtoothParams of(std::int64_t m);
};

/// Piecewise-linear value at x in [-1,1]. Inside the support the cell
/// index j = floor(x*m) decides: j mod 4 in {0,1} is a rising segment with
/// value x - (4p+1)/m, j mod 4 in {2,3} a falling one with (4p+3)/m - x,
/// where p = j div 4. Intervals are half-open as written.
double sawtooth(const SawtoothParams& params, double x);

/// Value at grid node 2k/m - 1 by the closed law: (-1)^(k+1)/m for
/// k = m/2 + 1 .. m/2 + (sqrt(m)-4)/2 and 0 otherwise.
double sawtooth_node_value(const SawtoothParams& params, std::int64_t k);

struct HarmonicBound {
    double sum;         // sum_{j=0}^{l-1} 1/(a+j)
    double lower_bound; // log(a+l) - log(a) + 1/(2a) - 1/(2(a+l))
};

/// Shifted harmonic sum and its logarithmic lower bound; sum >= lower_bound.
HarmonicBound shifted_harmonic(double a, std::int64_t l);

/// Alternating node sums over one raise/fall cell pair of the sawtooth on
/// the refined grid with 4*q*m intervals, evaluated both directly (through
/// the piecewise evaluator) and by the telescoped closed forms. For p = 0
/// the raise component is the trailing half of the first raise.
struct HatSums {
    double raise_direct;
    double raise_closed;
    double fall_direct;
    double fall_closed;
};
HatSums hat_sums(std::int64_t q, const SawtoothParams& params, std::int64_t p);

/// The two half-raises at the edges of the support (closed forms > 0).
struct EdgeSums {
    double plus_direct;
    double plus_closed;
};
EdgeSums edge_raise(std::int64_t q, const SawtoothParams& params);

/// The hat-positivity kernel u at k = 4pq + xi*q, computed from the product
/// definition and from its polynomial expansion; both must agree and be
/// positive for q >= 16, p >= 1, xi in [0,2).
struct HatTermRoutes {
    double direct;
    double expanded;
};
HatTermRoutes hat_term_routes(std::int64_t q, std::int64_t p, double xi);

/// Numerator of the interpolant for the sawtooth at t = 1/m, three ways:
///   direct  - full alternating sum over all m+1 nodes (piecewise evaluator);
///   reduced - the equivalent odd harmonic sum  sum_{i} 1/(2i-1);
///   formula - log(m)/4 + delta/2 with delta = 1 + log(1-3/sqrt(m)) - 1/(sqrt(m)-3),
/// where direct == reduced exactly and direct >= formula (the harmonic
/// lower bound); delta > 0 makes direct >= log(m)/4.
struct MainTerm {
    double direct;
    double reduced;
    double formula;
    double delta;
};
MainTerm main_term(const SawtoothParams& params);

/// Supports of consecutive family members m_j = 2^(2^j) are disjoint:
/// (sqrt(m_{j+1}) - 3)/m_{j+1} < 1/m_j for j = 2..j_max-1. Exact integer
/// arithmetic; j_max <= 5 keeps everything in range.
bool support_disjoint(int j_max);

/// f_{m_i} vanishes at 1/m_j for i != j, and at every node of the m_j grid
/// for i > j (checked exhaustively when m_j's grid is enumerable).
bool cross_terms_vanish(int i, int j);

/// The assembly arithmetic behind the log(n)/(20 n) lower bound: with
/// L = 2^j log 2, checks j < L/1000 and L/16 - 9 j/8 >= L/20 using
/// directed rounding slack. Valid for any j >= 16 (2^j exact in double).
bool growth_chain_holds(int j);

} // namespace berrut
