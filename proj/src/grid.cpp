#include "berrut/grid.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace berrut {

UniformGrid::UniformGrid(int intervals) : n(intervals) {
    if (n < 1) throw std::invalid_argument("UniformGrid: need n >= 1");
}

std::vector<double> UniformGrid::nodes() const {
    std::vector<double> xs(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) xs[static_cast<std::size_t>(k)] = node(k);
    return xs;
}

PositionDecomposition decompose(int n, double x) {
    UniformGrid grid(n);
    if (!(x > -1.0 && x < 1.0))
        throw std::domain_error("decompose: x outside (-1,1)");

    auto i = static_cast<std::int64_t>(std::floor(n * (x + 1.0) / 2.0));
    if (i < 0) i = 0;
    if (i > n - 1) i = n - 1;

    if (x == grid.node(static_cast<int>(i)))
        return {i, -1.0, true};
    if (x == grid.node(static_cast<int>(i) + 1))
        return {i + 1, -1.0, true};

    const double rho = n * (x - grid.node(static_cast<int>(i))) - 1.0;
    return {i, rho, false};
}

RationalPoint RationalPoint::of(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("RationalPoint: den must be positive");
    if (num <= 0 || num >= 2 * den)
        throw std::invalid_argument("RationalPoint: x + 1 = num/den must lie in (0,2)");
    const std::int64_t g = std::gcd(num, den);
    return RationalPoint{num / g, den / g};
}

RationalPoint::ParityClass RationalPoint::parity_class() const {
    if (num % 2 == 0) return ParityClass::EvenNum;
    if (den % 2 == 0) return ParityClass::EvenDen;
    return ParityClass::OddOdd;
}

RationalDecomposition decompose(int n, const RationalPoint& x) {
    if (n < 1) throw std::invalid_argument("decompose: need n >= 1");
    if (x.num > std::numeric_limits<std::int64_t>::max() / (2 * static_cast<std::int64_t>(n)))
        throw std::invalid_argument("decompose: n * num would overflow");
    const std::int64_t na = static_cast<std::int64_t>(n) * x.num;
    const std::int64_t two_b = 2 * x.den;

    if (na % two_b == 0) {
        RationalDecomposition d;
        d.is_node = true;
        d.node_index = na / two_b;
        d.iota = d.node_index;
        d.rho = {-1, 1};
        return d;
    }

    const std::int64_t iota = na / two_b; // na > 0, so this is the floor
    std::int64_t rnum = na - (2 * iota + 1) * x.den;
    std::int64_t rden = x.den;
    const std::int64_t g = std::gcd(rnum < 0 ? -rnum : rnum, rden);
    if (g > 1) { rnum /= g; rden /= g; }
    return {iota, {rnum, rden}, false, -1};
}

} // namespace berrut
