#pragma once

// Single-scattering GGX microfacet BRDF (Cook-Torrance form) with Smith
// height-correlated shadowing, and reflected-direction sampling through the
// visible normals.

#include <concepts>

#include "vndf/types.hpp"
#include "vndf/vec3.hpp"

namespace vndf {

/// Fresnel policy. Unit is F = 1; Schlick is f0 + (1 - f0)(1 - cos)^5.
struct FresnelSpec {
    enum class Mode { Unit, Schlick };

    Mode mode = Mode::Schlick;
    double f0 = 1.0;

    static FresnelSpec unit() { return {Mode::Unit, 1.0}; }
    /// Throws std::invalid_argument unless f0 is in [0, 1].
    static FresnelSpec schlick(double f0);

    double eval(double cos_theta) const;
    /// Upper bound of eval over [0, 1]; Schlick reaches 1 at grazing.
    double max_value() const { return 1.0; }
};

struct BrdfSample {
    Direction3<double> wb;  ///< reflected direction
    Direction3<double> wm;  ///< sampled visible normal
    double pdf = 0.0;       ///< per steradian, over wb
    double weight = 0.0;    ///< f_r |cos theta_b| / pdf
    bool absorbed = false;  ///< wb fell below the horizon; weight is 0
};

/// GGX NDF, D_std(M^T wm / |M^T wm|) |det M^T| / |M^T wm|^4.
double ndf_ggx(const Direction3<double>& wm, const RoughnessAlpha& alpha);

/// Smith monostatic masking of wm seen from wk, evaluated in the hemisphere
/// configuration. Zero when wm faces away from wk or wk is at or below the
/// horizon. Throws DegenerateIncidence when wk is the lower pole.
double smith_g1(const Direction3<double>& wm, const Direction3<double>& wk,
                const RoughnessAlpha& alpha);

/// Height-correlated masking-shadowing G_i G_o / (G_i + G_o - G_i G_o); 0 when
/// both terms vanish.
double smith_g2(const Direction3<double>& wm, const Direction3<double>& wi,
                const Direction3<double>& wo, const RoughnessAlpha& alpha);

/// Cook-Torrance F(wh.wo) G2 D / (4 cos_i cos_o). Zero outside the reflection
/// configuration (either direction at or below the horizon, or wh below it).
double eval_brdf(const Direction3<double>& wi, const Direction3<double>& wo,
                 const RoughnessAlpha& alpha, const FresnelSpec& fresnel);

/// Density of wb produced by reflecting wa about a GGX visible normal:
/// G1(wm, wa) D(wm) / (4 cos_a), wm the half-vector of (wa, wb).
/// Throws DivisionGuard when cos_a < 1e-8 and AntipodalInput for wb = -wa.
double pdf_reflected(const Direction3<double>& wb, const Direction3<double>& wa,
                     const RoughnessAlpha& alpha);

/// Draws wm with sample_vndf_ggx (in precision T), reflects wa about it and
/// returns the estimator weight, which reduces to F G2 / G1. Directions that
/// land at or below the horizon come back absorbed with weight 0.
template <std::floating_point T>
BrdfSample sample_brdf_direction(UnitSquareSample<T> u, const Direction3<double>& wa,
                                 const RoughnessAlpha& alpha, SamplerMethod method,
                                 const FresnelSpec& fresnel);

}  // namespace vndf
