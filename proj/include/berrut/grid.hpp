#pragma once

#include <cstdint>
#include <vector>

namespace berrut {

/// Extended reals are plain IEEE doubles; +/-infinity are the two added
/// endpoints and the usual ordering of doubles is the total order.
using ExtendedReal = double;

/// Equally spaced grid on [-1,1] with n intervals, nodes 2k/n - 1.
struct UniformGrid {
    int n;

    explicit UniformGrid(int intervals);

    /// Node k = 0..n; endpoints are exactly -1 and +1.
    [[nodiscard]] double node(int k) const { return 2.0 * k / n - 1.0; }

    [[nodiscard]] std::vector<double> nodes() const;
};

/// Location of x between the nodes of a grid: iota is the index of the
/// left neighboring node and rho in (-1,1) the normalized offset, so that
/// x = (2*iota + rho + 1)/n - 1. When is_node holds, iota is the index of
/// the coinciding node and rho is -1 (the formula's value at a node hit).
struct PositionDecomposition {
    std::int64_t iota = 0;
    double rho = 0.0;
    bool is_node = false;
};

/// Floating-point decomposition of x in (-1,1). Node membership uses exact
/// bitwise equality against the two neighboring nodes; no epsilon snapping.
/// Throws std::domain_error for x outside (-1,1).
PositionDecomposition decompose(int n, double x);

/// A point of (-1,1) stored exactly: x + 1 = num/den in lowest terms with
/// 0 < num < 2*den.
struct RationalPoint {
    std::int64_t num = 1;
    std::int64_t den = 1;

    /// Normalizes to lowest terms; throws std::invalid_argument when the
    /// value falls outside (-1,1) or den <= 0.
    static RationalPoint of(std::int64_t num, std::int64_t den);

    [[nodiscard]] double value() const {
        return static_cast<double>(num) / static_cast<double>(den) - 1.0;
    }

    /// Exactly one of the three classes holds for a reduced fraction.
    enum class ParityClass { OddOdd, EvenNum, EvenDen };
    [[nodiscard]] ParityClass parity_class() const;
};

/// Exact rational offset rho = num/den.
struct RationalOffset {
    std::int64_t num = 0;
    std::int64_t den = 1;

    [[nodiscard]] double value() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
};

struct RationalDecomposition {
    std::int64_t iota = 0;
    RationalOffset rho;
    bool is_node = false;
    std::int64_t node_index = -1;
};

/// Integer-only decomposition: with x + 1 = a/b, x is a node of grid n iff
/// 2b divides n*a (node index n*a/(2b)); otherwise iota = floor(n*a/(2b))
/// and rho = (n*a - (2*iota + 1)*b)/b exactly.
RationalDecomposition decompose(int n, const RationalPoint& x);

} // namespace berrut
