#pragma once

#include <concepts>

#include "vndf/vec3.hpp"

namespace vndf {

/// Mirror reflection of wi about wm: 2 (wm.wi) wm - wi.
template <std::floating_point T>
constexpr Direction3<T> reflect(const Direction3<T>& wi, const Direction3<T>& wm) {
    return T(2) * dot(wm, wi) * wm - wi;
}

/// (wi + wo) / |wi + wo|. Throws AntipodalInput when |wi + wo| < 1e-6.
Direction3<double> half_vector(const Direction3<double>& wi, const Direction3<double>& wo);

/// |d wh / d wo| = 1 / (4 |wo.wh|). Throws DivisionGuard when |wo.wh| < 1e-8.
double reflect_jacobian(const Direction3<double>& wo, const Direction3<double>& wh);

/// Density of mirror reflections of parallel rays off the unit hemisphere:
/// uniform 1 / (2 pi (1 + z_i)) over the cap z_o > -z_i, zero elsewhere.
/// Throws DegenerateIncidence when wi is the lower pole.
double cap_density(const Direction3<double>& wo, const Direction3<double>& wi);

}  // namespace vndf
