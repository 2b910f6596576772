#include <algorithm>
#include <cmath>
#include <numbers>

#include "vndf/errors.hpp"
#include "vndf/ggx_vndf.hpp"
#include "vndf/hemisphere.hpp"
#include "vndf/reflection.hpp"

namespace vndf {

double pdf_vndf_std(const Direction3<double>& wm, const Direction3<double>& wi) {
    detail::require_incidence(wi);
    return std::max(dot(wm, wi), 0.0) * ndf_std(wm) / sigma_std(wi);
}

double pdf_vndf_ggx(const Direction3<double>& wm, const Direction3<double>& wi,
                    const RoughnessAlpha& alpha) {
    detail::require_incidence(wi);
    const Direction3<double> wi_std = stretch_xy(wi, alpha);
    if (!(sigma_std(wi_std) > 0.0)) {
        throw DegenerateIncidence("warped incident direction is the lower pole");
    }
    const Vec3d mt_wm(wm.x / alpha.x(), wm.y / alpha.y(), wm.z);
    const double n = length(mt_wm);
    return pdf_vndf_std(mt_wm / n, wi_std) * alpha.det_mt() / (n * n * n);
}

Direction3<double> half_vector(const Direction3<double>& wi, const Direction3<double>& wo) {
    const Vec3d h = wi + wo;
    const double n = length(h);
    if (n < 1e-6) throw AntipodalInput("half_vector: directions are antipodal");
    return h / n;
}

double reflect_jacobian(const Direction3<double>& wo, const Direction3<double>& wh) {
    const double c = std::abs(dot(wo, wh));
    if (c < 1e-8) throw DivisionGuard("reflect_jacobian: |wo.wh| < 1e-8");
    return 1.0 / (4.0 * c);
}

double cap_density(const Direction3<double>& wo, const Direction3<double>& wi) {
    detail::require_incidence(wi);
    // z_h > 0 <=> z_i + z_o > 0, and wo = -wi falls on the zero side
    if (!(wi.z + wo.z > 0.0)) return 0.0;
    return 1.0 / (2.0 * std::numbers::pi * (1.0 + wi.z));
}

}  // namespace vndf
