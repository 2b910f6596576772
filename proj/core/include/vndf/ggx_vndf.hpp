#pragma once

// GGX visible normals: the hemisphere samplers lifted to the ellipsoid
// configuration by the diagonal stretch diag(alpha_x, alpha_y, 1).

#include <concepts>

#include "vndf/hemisphere.hpp"
#include "vndf/types.hpp"
#include "vndf/vec3.hpp"

namespace vndf {

/// Stretches x and y by alpha and renormalizes. This one map serves both
/// ways: it takes the incident direction to the hemisphere configuration
/// (M^{-1} wi) and the sampled hemisphere normal back to the ellipsoid
/// (M^{-T} wm).
template <std::floating_point T>
inline Direction3<T> stretch_xy(const Vec3<T>& v, const RoughnessAlpha& alpha) {
    return normalize(Vec3<T>(v.x * static_cast<T>(alpha.x()), v.y * static_cast<T>(alpha.y()), v.z));
}

/// Samples a GGX visible normal for incident direction wi. The cap method
/// hands its unnormalized half-vector straight to the final stretch, which
/// normalizes anyway.
template <std::floating_point T>
Direction3<T> sample_vndf_ggx(UnitSquareSample<T> u, const Direction3<T>& wi,
                              const RoughnessAlpha& alpha, SamplerMethod method) {
    detail::require_incidence(wi);
    const Direction3<T> wi_std = stretch_xy(wi, alpha);
    const Vec3<T> wm_std = method == SamplerMethod::SphericalCap
                               ? detail::spherical_cap_kernel(u, wi_std)
                               : detail::cross_section_kernel(u, wi_std);
    return stretch_xy(wm_std, alpha);
}

/// GGX VNDF density per steradian:
///   D_vis,std(M^T wm / |M^T wm|, M^{-1} wi / |M^{-1} wi|) |det M^T| / |M^T wm|^3.
/// Throws DegenerateIncidence when wi is the lower pole.
double pdf_vndf_ggx(const Direction3<double>& wm, const Direction3<double>& wi,
                    const RoughnessAlpha& alpha);

}  // namespace vndf
