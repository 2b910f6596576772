#include "vndf/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vndf {

RoughnessAlpha::RoughnessAlpha(double alpha_x, double alpha_y)
    : alpha_x_(alpha_x), alpha_y_(alpha_y) {
    auto check = [](double a, const char* name) {
        if (!std::isfinite(a) || a < kMinAlpha) {
            throw std::invalid_argument(std::string(name) + " must be finite and >= 1e-4, got " +
                                        std::to_string(a));
        }
    };
    check(alpha_x, "alpha_x");
    check(alpha_y, "alpha_y");
}

template <std::floating_point T>
UnitSquareSample<T> UnitSquareSample<T>::checked(T u1, T u2) {
    auto in_range = [](T u) { return u >= T(0) && u < T(1); };
    if (!in_range(u1) || !in_range(u2)) {
        throw std::invalid_argument("unit-square sample outside [0,1)^2");
    }
    return {u1, u2};
}

template struct UnitSquareSample<float>;
template struct UnitSquareSample<double>;

std::string_view to_string(SamplerMethod method) {
    switch (method) {
        case SamplerMethod::CrossSection: return "cross-section";
        case SamplerMethod::SphericalCap: return "cap";
    }
    return "unknown";
}

std::optional<SamplerMethod> parse_sampler_method(std::string_view name) {
    if (name == "cap") return SamplerMethod::SphericalCap;
    if (name == "cross-section") return SamplerMethod::CrossSection;
    return std::nullopt;
}

}  // namespace vndf
