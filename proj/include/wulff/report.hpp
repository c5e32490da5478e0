#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "wulff/sphere.hpp"

namespace wulff {

enum class CheckStatus { Pass, Fail, NotApplicable };

std::string_view status_name(CheckStatus s);

struct Residual {
    std::string label;
    double value = 0.0;
    double tolerance = 0.0;
};

using Witness = std::variant<SphericalPoint, PlanarPoint>;

struct CheckReport {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::vector<Residual> residuals;
    /// Measured quantities that do not gate the verdict.
    std::vector<std::pair<std::string, double>> measurements;
    std::vector<Witness> witnesses;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::string note;

    /// Pass and not-applicable both count as passed.
    bool passed() const { return status != CheckStatus::Fail; }

    /// Records a residual and returns whether it is within tolerance.
    bool add(std::string label, double value, double tolerance) {
        residuals.push_back({std::move(label), value, tolerance});
        return std::abs(value) <= tolerance;
    }
    void measure(std::string label, double value) { measurements.emplace_back(std::move(label), value); }
};

}  // namespace wulff
