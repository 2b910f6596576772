#include "vndf/brdf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vndf/errors.hpp"
#include "vndf/ggx_vndf.hpp"
#include "vndf/hemisphere.hpp"
#include "vndf/reflection.hpp"

namespace vndf {

FresnelSpec FresnelSpec::schlick(double f0) {
    if (!(f0 >= 0.0 && f0 <= 1.0)) throw std::invalid_argument("Schlick f0 must be in [0, 1]");
    return {Mode::Schlick, f0};
}

double FresnelSpec::eval(double cos_theta) const {
    if (mode == Mode::Unit) return 1.0;
    const double m = std::clamp(1.0 - cos_theta, 0.0, 1.0);
    const double m2 = m * m;
    return f0 + (1.0 - f0) * m2 * m2 * m;
}

double ndf_ggx(const Direction3<double>& wm, const RoughnessAlpha& alpha) {
    const Vec3d mt_wm(wm.x / alpha.x(), wm.y / alpha.y(), wm.z);
    const double n2 = dot(mt_wm, mt_wm);
    return ndf_std(mt_wm / std::sqrt(n2)) * alpha.det_mt() / (n2 * n2);
}

double smith_g1(const Direction3<double>& wm, const Direction3<double>& wk,
                const RoughnessAlpha& alpha) {
    detail::require_incidence(wk);
    const Direction3<double> wk_std = stretch_xy(wk, alpha);
    const double sigma = sigma_std(wk_std);
    if (!(sigma > 0.0)) throw DegenerateIncidence("smith_g1: warped direction is the lower pole");
    // M^T wm . M^{-1} wk == wm . wk, so the sign test needs no warp
    if (!(dot(wm, wk) > 0.0) || !(wk_std.z > 0.0)) return 0.0;
    return wk_std.z / sigma;
}

double smith_g2(const Direction3<double>& wm, const Direction3<double>& wi,
                const Direction3<double>& wo, const RoughnessAlpha& alpha) {
    const double gi = smith_g1(wm, wi, alpha);
    const double go = smith_g1(wm, wo, alpha);
    const double denom = gi + go - gi * go;
    if (!(denom > 0.0)) return 0.0;
    return gi * go / denom;
}

double eval_brdf(const Direction3<double>& wi, const Direction3<double>& wo,
                 const RoughnessAlpha& alpha, const FresnelSpec& fresnel) {
    if (!(wi.z > 0.0) || !(wo.z > 0.0)) return 0.0;
    const Direction3<double> wh = half_vector(wi, wo);
    if (!(wh.z > 0.0)) return 0.0;
    return fresnel.eval(dot(wh, wo)) * smith_g2(wh, wi, wo, alpha) * ndf_ggx(wh, alpha) /
           (4.0 * wi.z * wo.z);
}

double pdf_reflected(const Direction3<double>& wb, const Direction3<double>& wa,
                     const RoughnessAlpha& alpha) {
    if (!(wa.z >= 1e-8)) throw DivisionGuard("pdf_reflected: cos theta_a < 1e-8");
    const Direction3<double> wm = half_vector(wa, wb);
    return smith_g1(wm, wa, alpha) * ndf_ggx(wm, alpha) / (4.0 * wa.z);
}

template <std::floating_point T>
BrdfSample sample_brdf_direction(UnitSquareSample<T> u, const Direction3<double>& wa,
                                 const RoughnessAlpha& alpha, SamplerMethod method,
                                 const FresnelSpec& fresnel) {
    if (!(wa.z > 0.0)) throw std::invalid_argument("sample_brdf_direction: wa.z must be > 0");
    const Direction3<T> wm_t = sample_vndf_ggx(u, Direction3<T>(wa), alpha, method);

    BrdfSample s;
    s.wm = normalize(Vec3d(wm_t));
    s.wb = reflect(wa, s.wm);
    const double g1 = smith_g1(s.wm, wa, alpha);
    s.pdf = g1 * ndf_ggx(s.wm, alpha) / (4.0 * wa.z);
    if (!(s.wb.z > 0.0) || !(s.pdf > 0.0)) {
        s.absorbed = true;
        s.weight = 0.0;
        return s;
    }
    s.weight = fresnel.eval(dot(s.wm, s.wb)) * smith_g2(s.wm, wa, s.wb, alpha) / g1;
    return s;
}

template BrdfSample sample_brdf_direction<float>(UnitSquareSample<float>, const Direction3<double>&,
                                                 const RoughnessAlpha&, SamplerMethod,
                                                 const FresnelSpec&);
template BrdfSample sample_brdf_direction<double>(UnitSquareSample<double>,
                                                  const Direction3<double>&,
                                                  const RoughnessAlpha&, SamplerMethod,
                                                  const FresnelSpec&);

}  // namespace vndf
