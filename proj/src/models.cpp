#include "berrut/models.hpp"

#include <cmath>
#include <stdexcept>

namespace berrut {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<FunctionModel> build_library() {
    std::vector<FunctionModel> lib;

    lib.push_back({"const1",
                   [](double) { return 1.0; },
                   [](double) { return 0.0; },
                   [](double) { return 0.0; },
                   0.0, true, true, true});

    lib.push_back({"linear",
                   [](double x) { return 0.25 + 0.5 * x; },
                   [](double) { return 0.5; },
                   [](double) { return 0.0; },
                   0.0, true, true, true});

    lib.push_back({"quadratic",
                   [](double x) { return x * x; },
                   [](double x) { return 2.0 * x; },
                   [](double) { return 2.0; },
                   4.0, true, true, true});

    // f' = |x|: defined everywhere, absolutely continuous, variation 2.
    lib.push_back({"xabsx",
                   [](double x) { return 0.5 * x * std::fabs(x); },
                   [](double x) { return std::fabs(x); },
                   nullptr,
                   2.0, true, true, true});

    lib.push_back({"exp",
                   [](double x) { return std::exp(x); },
                   [](double x) { return std::exp(x); },
                   [](double x) { return std::exp(x); },
                   std::exp(1.0) - std::exp(-1.0), true, true, true});

    // f' = pi cos(pi x); four monotone runs of size pi each.
    lib.push_back({"sinpi",
                   [](double x) { return std::sin(kPi * x); },
                   [](double x) { return kPi * std::cos(kPi * x); },
                   [](double x) { return -kPi * kPi * std::sin(kPi * x); },
                   4.0 * kPi, true, true, true});

    // f' = -50x/(1+25x^2)^2, extrema +-1.875*sqrt(3) at x = -+1/sqrt(75).
    lib.push_back({"runge",
                   [](double x) { return 1.0 / (1.0 + 25.0 * x * x); },
                   [](double x) {
                       const double q = 1.0 + 25.0 * x * x;
                       return -50.0 * x / (q * q);
                   },
                   [](double x) {
                       const double q = 1.0 + 25.0 * x * x;
                       return (3750.0 * x * x - 50.0) / (q * q * q);
                   },
                   7.5 * std::sqrt(3.0) - 25.0 / 169.0, true, true, true});

    return lib;
}

} // namespace

const std::vector<FunctionModel>& model_library() {
    static const std::vector<FunctionModel> lib = build_library();
    return lib;
}

const FunctionModel& model_by_name(const std::string& name) {
    for (const FunctionModel& m : model_library())
        if (m.name == name) return m;
    throw std::invalid_argument("unknown function model: " + name);
}

} // namespace berrut
