#pragma once

// White-furnace estimator: the directional albedo of the GGX BRDF under
// constant unit radiance, by Monte Carlo through the VNDF sampler and by
// deterministic quadrature.

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "vndf/brdf.hpp"
#include "vndf/types.hpp"
#include "vndf/vec3.hpp"

namespace vndf {

struct FurnaceResult {
    double estimate = 0.0;
    double std_error = 0.0;  ///< sample standard deviation / sqrt(n)
    double variance = 0.0;   ///< unbiased sample variance of the weights
    double min_weight = 0.0;
    double max_weight = 0.0;
    std::uint64_t n = 0;
    SamplerMethod method = SamplerMethod::SphericalCap;
    std::optional<double> reference;  ///< quadrature value, when computed
};

/// Mean estimator weight over n samples. Work is cut into fixed chunks, one
/// RngStream per chunk, and chunk statistics are pooled in chunk order, so
/// the result does not depend on the thread count. Requires wa.z > 0 and
/// n >= 1000.
FurnaceResult furnace_albedo_mc(const Direction3<double>& wa, const RoughnessAlpha& alpha,
                                SamplerMethod method, const FresnelSpec& fresnel, std::uint64_t n,
                                std::uint64_t seed, unsigned threads = 0);

/// Integral of eval_brdf(wb, wa) cos(theta_b) over the upper hemisphere with
/// 1024 x 1024 base nodes: 64 x 64 patches of 16 Gauss-Legendre nodes in
/// theta by 16 midpoints in phi, refined where the lobe is narrower than that.
double furnace_albedo_quadrature(const Direction3<double>& wa, const RoughnessAlpha& alpha,
                                 const FresnelSpec& fresnel);

struct FurnaceRow {
    double alpha_x = 1.0;
    double alpha_y = 1.0;
    double theta_a_deg = 0.0;
    std::uint64_t seed = 0;
    FurnaceResult result;
};

void write_furnace_csv(std::ostream& out, const std::vector<FurnaceRow>& rows);

}  // namespace vndf
