#pragma once

// Visible normals of the unit hemisphere ("standard" configuration): the
// NDF, its projected area, the VNDF density and the two samplers.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <numbers>

#include "vndf/errors.hpp"
#include "vndf/types.hpp"
#include "vndf/vec3.hpp"

namespace vndf {

/// Projected area of the unit hemisphere seen from wi: (1 + z_i) / 2.
inline double sigma_std(const Direction3<double>& wi) {
    return 0.5 * (1.0 + wi.z);
}

/// NDF of the unit hemisphere: 1/pi above the horizon, 0 otherwise.
inline double ndf_std(const Direction3<double>& wm) {
    return wm.z > 0.0 ? std::numbers::inv_pi : 0.0;
}

/// VNDF of the unit hemisphere, max(wm.wi, 0) D_std(wm) / sigma_std(wi).
/// Throws DegenerateIncidence when wi is the lower pole.
double pdf_vndf_std(const Direction3<double>& wm, const Direction3<double>& wi);

namespace detail {

template <std::floating_point T>
inline void require_incidence(const Direction3<T>& wi) {
    if (!(wi.z > T(-1))) {
        throw DegenerateIncidence("incident direction is the lower pole (z = -1)");
    }
}

/// Cross-section sampler, unchecked. The result is unit up to rounding.
template <std::floating_point T>
inline Vec3<T> cross_section_kernel(UnitSquareSample<T> u, const Direction3<T>& wi) {
    // orthonormal basis; the pole case falls back to the x axis
    const T tmp = wi.x * wi.x + wi.y * wi.y;
    const Vec3<T> w1 =
        tmp >= T(1e-12) ? Vec3<T>(-wi.y, wi.x, T(0)) * (T(1) / std::sqrt(tmp)) : Vec3<T>(1, 0, 0);
    const Vec3<T> w2 = cross(wi, w1);
    // parameterization of the projected disk
    const T phi = T(2) * std::numbers::pi_v<T> * u.u1;
    const T r = std::sqrt(u.u2);
    const T t1 = r * std::cos(phi);
    T t2 = r * std::sin(phi);
    const T s = (T(1) + wi.z) / T(2);
    t2 = (T(1) - s) * std::sqrt(T(1) - t1 * t1) + s * t2;
    const T ti = std::sqrt(std::max(T(1) - t1 * t1 - t2 * t2, T(0)));
    // reprojection onto the hemisphere
    return t1 * w1 + t2 * w2 + ti * wi;
}

/// Spherical-cap sampler, unchecked. Returns the half-vector c + wi without
/// normalizing it.
template <std::floating_point T>
inline Vec3<T> spherical_cap_kernel(UnitSquareSample<T> u, const Direction3<T>& wi) {
    // uniform direction in the cap z in (-wi.z, 1]
    const T phi = T(2) * std::numbers::pi_v<T> * u.u1;
    const T z = std::fma(T(1) - u.u2, T(1) + wi.z, -wi.z);
    const T sin_theta = std::sqrt(std::clamp(T(1) - z * z, T(0), T(1)));
    const Vec3<T> c(sin_theta * std::cos(phi), sin_theta * std::sin(phi), z);
    return c + wi;
}

}  // namespace detail

/// Visible normal of the unit hemisphere by the projected cross-section
/// (disk) construction. Renormalized, so its rounding matches the GGX path
/// at alpha = (1, 1). Throws DegenerateIncidence for wi.z == -1.
template <std::floating_point T>
Direction3<T> sample_vndf_hemisphere_cross_section(UnitSquareSample<T> u,
                                                   const Direction3<T>& wi) {
    detail::require_incidence(wi);
    return normalize(detail::cross_section_kernel(u, wi));
}

/// Visible normal of the unit hemisphere as the half-vector between wi and a
/// direction drawn uniformly from the spherical cap z > -wi.z. Normalized.
template <std::floating_point T>
Direction3<T> sample_vndf_hemisphere_cap(UnitSquareSample<T> u, const Direction3<T>& wi) {
    detail::require_incidence(wi);
    return normalize(detail::spherical_cap_kernel(u, wi));
}

}  // namespace vndf
