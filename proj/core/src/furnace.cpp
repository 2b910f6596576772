#include "vndf/furnace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "vndf/csv.hpp"
#include "vndf/parallel.hpp"
#include "vndf/quadrature.hpp"
#include "vndf/rng.hpp"

namespace vndf {
namespace {

constexpr std::uint64_t kChunk = 1u << 16;

// Running mean and sum of squared deviations (Welford), mergeable (Chan).
struct Moments {
    std::uint64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double x) {
        ++n;
        lo = std::min(lo, x);
        hi = std::max(hi, x);
        const double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }

    void merge(const Moments& o) {
        if (o.n == 0) return;
        lo = std::min(lo, o.lo);
        hi = std::max(hi, o.hi);
        const double na = static_cast<double>(n);
        const double nb = static_cast<double>(o.n);
        const double d = o.mean - mean;
        const double nt = na + nb;
        mean += d * nb / nt;
        m2 += o.m2 + d * d * na * nb / nt;
        n += o.n;
    }
};

}  // namespace

FurnaceResult furnace_albedo_mc(const Direction3<double>& wa, const RoughnessAlpha& alpha,
                                SamplerMethod method, const FresnelSpec& fresnel, std::uint64_t n,
                                std::uint64_t seed, unsigned threads) {
    if (!(wa.z > 0.0)) throw std::invalid_argument("furnace_albedo_mc: wa.z must be > 0");
    if (n < 1000) throw std::invalid_argument("furnace_albedo_mc: n must be >= 1000");

    const std::uint64_t chunks = (n + kChunk - 1) / kChunk;
    std::vector<Moments> partial(chunks);
    parallel_for(
        chunks,
        [&](std::size_t c) {
            RngStream rng(seed, c);
            const std::uint64_t begin = c * kChunk;
            const std::uint64_t end = std::min(n, begin + kChunk);
            Moments m;
            for (std::uint64_t i = begin; i < end; ++i) {
                m.add(sample_brdf_direction(rng.next_sample<float>(), wa, alpha, method, fresnel)
                          .weight);
            }
            partial[c] = m;
        },
        threads);

    Moments total;
    for (const auto& m : partial) total.merge(m);

    FurnaceResult r;
    r.n = n;
    r.method = method;
    r.estimate = total.mean;
    r.variance = total.m2 / static_cast<double>(n - 1);
    r.std_error = std::sqrt(r.variance / static_cast<double>(n));
    r.min_weight = total.lo;
    r.max_weight = total.hi;
    return r;
}

double furnace_albedo_quadrature(const Direction3<double>& wa, const RoughnessAlpha& alpha,
                                 const FresnelSpec& fresnel) {
    // 64 x 64 patches of 16 x 16 nodes over the upper hemisphere
    constexpr int kPatches = 64;
    const QuadratureRule rule = gauss_legendre(16);
    const double dtheta = 0.5 * std::numbers::pi / kPatches;
    const double dphi = 2.0 * std::numbers::pi / kPatches;
    const auto integrand = [&](const Vec3d& wb) { return eval_brdf(wb, wa, alpha, fresnel) * wb.z; };
    double total = 0.0;
    for (int i = 0; i < kPatches; ++i)
        for (int j = 0; j < kPatches; ++j) {
            total += integrate_sphere_patch(integrand, rule, 16, i * dtheta, (i + 1) * dtheta,
                                            j * dphi, (j + 1) * dphi);
        }
    return total;
}

void write_furnace_csv(std::ostream& out, const std::vector<FurnaceRow>& rows) {
    write_csv_line(out, {"alpha_x", "alpha_y", "theta_a_deg", "method", "n", "estimate", "stderr",
                         "reference", "seed"});
    for (const auto& row : rows) {
        const FurnaceResult& r = row.result;
        write_csv_line(out, {format_number(row.alpha_x), format_number(row.alpha_y),
                             format_number(row.theta_a_deg), to_string(r.method),
                             std::to_string(r.n), format_number(r.estimate),
                             format_number(r.std_error),
                             r.reference ? format_number(*r.reference) : "",
                             std::to_string(row.seed)});
    }
}

}  // namespace vndf
