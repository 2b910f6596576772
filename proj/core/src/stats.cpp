#include "vndf/stats.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "vndf/errors.hpp"
#include "vndf/hemisphere.hpp"
#include "vndf/quadrature.hpp"
#include "vndf/reflection.hpp"
#include "vndf/rng.hpp"

namespace vndf {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phi(double phi) {
    return phi < 0.0 ? phi + kTwoPi : phi;
}

int clamp_bin(double t, int bins) {
    const int i = static_cast<int>(std::floor(t * bins));
    return std::clamp(i, 0, bins - 1);
}

// Integrates pdf over every (slab, sector) cell of a bins_z x bins_phi grid.
// A slab containing one of z_breaks is integrated piecewise on either side.
std::vector<double> cell_masses(const SphereDensity& pdf, int bins_z, int bins_phi, int nodes_z,
                                int nodes_phi, std::span<const double> z_breaks = {}) {
    const QuadratureRule rule = gauss_legendre(nodes_z);
    std::vector<double> masses(static_cast<std::size_t>(bins_z) * bins_phi, 0.0);
    for (int iz = 0; iz < bins_z; ++iz) {
        const double z_lo = -1.0 + 2.0 * iz / bins_z;
        const double z_hi = -1.0 + 2.0 * (iz + 1) / bins_z;
        std::vector<double> edges{z_hi};
        for (double b : z_breaks)
            if (b > z_lo && b < z_hi) edges.push_back(b);
        std::sort(edges.begin() + 1, edges.end(), std::greater<>());
        edges.push_back(z_lo);
        for (std::size_t piece = 0; piece + 1 < edges.size(); ++piece) {
            const double t0 = std::acos(std::clamp(edges[piece], -1.0, 1.0));
            const double t1 = std::acos(std::clamp(edges[piece + 1], -1.0, 1.0));
            for (int ip = 0; ip < bins_phi; ++ip) {
                masses[iz * bins_phi + ip] += integrate_sphere_patch(
                    pdf, rule, nodes_phi, t0, t1, kTwoPi * ip / bins_phi,
                    kTwoPi * (ip + 1) / bins_phi);
            }
        }
    }
    return masses;
}

double gamma_p_series(double a, double x, double log_prefactor) {
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int n = 0; n < 100000; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(log_prefactor);
}

double gamma_q_continued_fraction(double a, double x, double log_prefactor) {
    constexpr double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 100000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return std::exp(log_prefactor) * h;
}

}  // namespace

Histogram2D::Histogram2D(int bins_z, int bins_phi)
    : bins_z_(bins_z), bins_phi_(bins_phi) {
    if (bins_z < 1 || bins_phi < 1) throw std::invalid_argument("Histogram2D: bin counts must be >= 1");
    counts_.assign(static_cast<std::size_t>(bins_z) * bins_phi, 0);
}

int Histogram2D::bin_of(const Direction3<double>& d) const {
    const int iz = clamp_bin(0.5 * (d.z + 1.0), bins_z_);
    const int ip = clamp_bin(wrap_phi(std::atan2(d.y, d.x)) / kTwoPi, bins_phi_);
    return iz * bins_phi_ + ip;
}

void Histogram2D::merge(const Histogram2D& other) {
    if (other.bins_z_ != bins_z_ || other.bins_phi_ != bins_phi_) {
        throw std::invalid_argument("Histogram2D::merge: layouts differ");
    }
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
    total_ += other.total_;
}

double Histogram2D::bin_solid_angle() const {
    return (2.0 / bins_z_) * (kTwoPi / bins_phi_);
}

double Histogram2D::phi_lo(int iphi) const {
    return kTwoPi * iphi / bins_phi_;
}

double Histogram2D::phi_hi(int iphi) const {
    return kTwoPi * (iphi + 1) / bins_phi_;
}

double gamma_q(double a, double x) {
    if (!(a > 0.0) || !(x >= 0.0)) throw std::invalid_argument("gamma_q: need a > 0 and x >= 0");
    if (x == 0.0) return 1.0;
    const double log_prefactor = -x + a * std::log(x) - std::lgamma(a);
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x, log_prefactor);
    return gamma_q_continued_fraction(a, x, log_prefactor);
}

std::vector<double> expected_bin_mass(const SphereDensity& pdf, int bins_z, int bins_phi,
                                      std::span<const double> z_breaks) {
    std::vector<double> masses = cell_masses(pdf, bins_z, bins_phi, 16, 16, z_breaks);
    double sum = 0.0;
    for (double m : masses) sum += m;
    if (!(std::abs(sum - 1.0) <= 1e-3)) {
        throw NormalizationFailure("expected_bin_mass: total mass " + std::to_string(sum) +
                                   " deviates from 1 by more than 1e-3");
    }
    return masses;
}

double integrate_pdf_sphere(const SphereDensity& pdf, std::span<const double> z_breaks) {
    const std::vector<double> masses = cell_masses(pdf, 512, 512, 4, 4, z_breaks);
    double sum = 0.0;
    for (double m : masses) sum += m;
    return sum;
}

GofReport chi_square_test(std::span<const std::uint64_t> observed, std::span<const double> masses) {
    if (observed.size() != masses.size()) {
        throw std::invalid_argument("chi_square_test: observed and expected sizes differ");
    }
    std::uint64_t total = 0;
    double mass_sum = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        total += observed[i];
        mass_sum += masses[i];
    }
    if (total < 10000) throw InsufficientData("chi_square_test: fewer than 1e4 samples");
    if (!(mass_sum > 0.0)) throw InsufficientData("chi_square_test: expected masses are all zero");

    const double n = static_cast<double>(total);
    std::vector<double> obs;
    std::vector<double> exp;
    double tail_obs = 0.0;
    double tail_exp = 0.0;
    int merged = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double e = masses[i] / mass_sum * n;
        if (e >= 5.0) {
            obs.push_back(static_cast<double>(observed[i]));
            exp.push_back(e);
        } else {
            tail_obs += static_cast<double>(observed[i]);
            tail_exp += e;
            ++merged;
        }
    }
    if (tail_exp >= 5.0) {
        obs.push_back(tail_obs);
        exp.push_back(tail_exp);
    } else if ((tail_obs > 0.0 || tail_exp > 0.0) && !exp.empty()) {
        const auto smallest = std::min_element(exp.begin(), exp.end()) - exp.begin();
        obs[smallest] += tail_obs;
        exp[smallest] += tail_exp;
    }
    if (exp.size() < 2) throw InsufficientData("chi_square_test: fewer than 2 usable bins");

    GofReport report;
    for (std::size_t i = 0; i < exp.size(); ++i) {
        const double diff = obs[i] - exp[i];
        report.statistic += diff * diff / exp[i];
    }
    report.dof = static_cast<int>(exp.size()) - 1;
    report.merged_bins = merged;
    report.p_value = gamma_q(0.5 * report.dof, 0.5 * report.statistic);
    return report;
}

GofReport chi_square_test(const Histogram2D& hist, std::span<const double> masses) {
    return chi_square_test(hist.counts(), masses);
}

CapUniformityReport cap_uniformity_test(const Direction3<double>& wi, SamplerMethod method,
                                        std::uint64_t n, std::uint64_t seed, std::uint64_t stream,
                                        int bins) {
    detail::require_incidence(wi);
    if (bins < 2) throw std::invalid_argument("cap_uniformity_test: bins must be >= 2");
    const Vec3f wi_f(wi);
    const double cap_height = 1.0 + wi.z;
    std::vector<std::uint64_t> z_counts(bins, 0);
    std::vector<std::uint64_t> phi_counts(bins, 0);
    double min_z = std::numeric_limits<double>::infinity();
    double max_z = -std::numeric_limits<double>::infinity();

    RngStream rng(seed, stream);
    for (std::uint64_t i = 0; i < n; ++i) {
        const UnitSquareSample<float> u = rng.next_sample<float>();
        const Vec3f wm = method == SamplerMethod::SphericalCap
                             ? sample_vndf_hemisphere_cap(u, wi_f)
                             : sample_vndf_hemisphere_cross_section(u, wi_f);
        const Vec3d wo = reflect(wi, normalize(Vec3d(wm)));
        min_z = std::min(min_z, wo.z);
        max_z = std::max(max_z, wo.z);
        ++z_counts[clamp_bin((wo.z + wi.z) / cap_height, bins)];
        ++phi_counts[clamp_bin(wrap_phi(std::atan2(wo.y, wo.x)) / kTwoPi, bins)];
    }

    const std::vector<double> uniform(bins, 1.0 / bins);
    return {chi_square_test(z_counts, uniform), chi_square_test(phi_counts, uniform), min_z, max_z};
}

}  // namespace vndf
