#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace berrut {

/// An analytic test function on [-1,1] with whatever regularity data the
/// convergence studies need. Class tags follow the usual meanings:
///   lip1 - f is Lipschitz;
///   ac1  - f' exists everywhere on [-1,1] and is absolutely continuous;
///   bv1  - f' exists everywhere and has bounded variation (tv_fprime set).
struct FunctionModel {
    std::string name;
    std::function<double(double)> f;
    std::function<double(double)> f_prime;         // empty when unavailable
    std::function<double(double)> f_second;        // empty when unavailable
    std::optional<double> tv_fprime;               // total variation of f' on [-1,1]
    bool lip1 = false;
    bool ac1 = false;
    bool bv1 = false;

    [[nodiscard]] double operator()(double x) const { return f(x); }
};

/// Built-in models: const1, linear, quadratic, xabsx, exp, sinpi, runge.
const std::vector<FunctionModel>& model_library();

/// Lookup by name; throws std::invalid_argument for unknown names.
const FunctionModel& model_by_name(const std::string& name);

} // namespace berrut
