#pragma once

#include <concepts>
#include <optional>
#include <string_view>

namespace vndf {

/// Anisotropic GGX roughness (alpha_x, alpha_y). The stretch matrix
/// M^{-1} = diag(alpha_x, alpha_y, 1) maps the ellipsoid configuration to
/// the unit hemisphere; every other matrix of the model is derived from it.
class RoughnessAlpha {
public:
    static constexpr double kMinAlpha = 1e-4;

    /// Throws std::invalid_argument when either value is below kMinAlpha or
    /// not finite.
    RoughnessAlpha(double alpha_x, double alpha_y);
    explicit RoughnessAlpha(double alpha) : RoughnessAlpha(alpha, alpha) {}

    double x() const { return alpha_x_; }
    double y() const { return alpha_y_; }

    /// |det M^T| = 1 / (alpha_x alpha_y).
    double det_mt() const { return 1.0 / (alpha_x_ * alpha_y_); }

    bool is_identity() const { return alpha_x_ == 1.0 && alpha_y_ == 1.0; }

    bool operator==(const RoughnessAlpha&) const = default;

private:
    double alpha_x_;
    double alpha_y_;
};

/// The pair (u1, u2) in [0,1)^2 that drives a sampler. Aggregate on purpose:
/// it sits on the hot path. Use checked() at trust boundaries.
template <std::floating_point T>
struct UnitSquareSample {
    T u1{};
    T u2{};

    /// Throws std::invalid_argument unless 0 <= u < 1 for both coordinates.
    static UnitSquareSample checked(T u1, T u2);
};

enum class SamplerMethod { CrossSection, SphericalCap };

std::string_view to_string(SamplerMethod method);
std::optional<SamplerMethod> parse_sampler_method(std::string_view name);

}  // namespace vndf
