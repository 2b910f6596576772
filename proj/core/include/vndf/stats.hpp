#pragma once

// Goodness-of-fit machinery: equal-area sphere histograms, quadrature of
// densities into bin masses, Pearson chi-square with small-bin merging, and
// the reflected-direction (spherical cap) uniformity test.

#include <concepts>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "vndf/types.hpp"
#include "vndf/vec3.hpp"

namespace vndf {

using SphereDensity = std::function<double(const Direction3<double>&)>;

/// Counts over an equal-area partition of the sphere: bins_z uniform slabs
/// in z on [-1, 1] times bins_phi uniform sectors in phi on [0, 2 pi).
/// Every bin subtends 4 pi / (bins_z bins_phi) steradians.
class Histogram2D {
public:
    Histogram2D(int bins_z, int bins_phi);

    int bins_z() const { return bins_z_; }
    int bins_phi() const { return bins_phi_; }
    int bin_count() const { return bins_z_ * bins_phi_; }
    std::uint64_t total() const { return total_; }
    std::span<const std::uint64_t> counts() const { return counts_; }
    std::uint64_t count(int iz, int iphi) const { return counts_[iz * bins_phi_ + iphi]; }

    /// Flat index (z-major). z = 1 goes to the top slab, phi wraps to [0, 2pi).
    int bin_of(const Direction3<double>& d) const;

    void accumulate(const Direction3<double>& d) {
        ++counts_[bin_of(d)];
        ++total_;
    }
    template <std::floating_point T>
        requires(!std::same_as<T, double>)
    void accumulate(const Direction3<T>& d) {
        accumulate(Vec3d(d));
    }

    /// Adds the counts of a histogram with the same layout.
    void merge(const Histogram2D& other);

    double bin_solid_angle() const;
    /// Boundaries of the bin's slab and sector.
    double z_lo(int iz) const { return -1.0 + 2.0 * iz / bins_z_; }
    double z_hi(int iz) const { return -1.0 + 2.0 * (iz + 1) / bins_z_; }
    double phi_lo(int iphi) const;
    double phi_hi(int iphi) const;

private:
    int bins_z_;
    int bins_phi_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

struct GofReport {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
    int merged_bins = 0;
};

/// Regularized upper incomplete gamma Q(a, x), series below x = a + 1 and a
/// Lentz continued fraction above.
double gamma_q(double a, double x);

/// Per-bin probability masses of pdf over the histogram layout. Each bin is
/// integrated with 16 Gauss-Legendre nodes in polar angle times 16 midpoint
/// nodes in phi; bins whose node values vary too sharply for that rule are
/// subdivided recursively. Slabs are split at z_breaks, the heights where pdf
/// jumps. Throws NormalizationFailure if the masses sum outside 1 +- 1e-3.
std::vector<double> expected_bin_mass(const SphereDensity& pdf, int bins_z, int bins_phi,
                                      std::span<const double> z_breaks = {});

/// Total mass of pdf over the sphere: 512 x 512 equal-area cells with 4 x 4
/// nodes each (Gauss-Legendre in polar angle, midpoint in phi), refined and
/// split at z_breaks like expected_bin_mass.
double integrate_pdf_sphere(const SphereDensity& pdf, std::span<const double> z_breaks = {});

/// Pearson chi-square of observed counts against probability masses. Masses
/// are renormalized to sum to one; bins expecting fewer than five counts are
/// pooled into one tail bin (folded into the smallest regular bin if the
/// tail itself stays below five). Throws InsufficientData when the total is
/// below 1e4 or fewer than two bins remain.
GofReport chi_square_test(std::span<const std::uint64_t> observed, std::span<const double> masses);
GofReport chi_square_test(const Histogram2D& hist, std::span<const double> masses);

struct CapUniformityReport {
    GofReport z;      ///< z_o against uniform on (-z_i, 1]
    GofReport phi;    ///< azimuth against uniform on [0, 2 pi)
    double min_z_o;   ///< smallest reflected z observed
    double max_z_o;
};

/// Draws n visible normals of the unit hemisphere with the given sampler,
/// mirrors wi about each, and tests that the reflections are uniform over the
/// cap z_o > -z_i. Uses `bins` equal-width bins for both marginals.
CapUniformityReport cap_uniformity_test(const Direction3<double>& wi, SamplerMethod method,
                                        std::uint64_t n, std::uint64_t seed,
                                        std::uint64_t stream = 0, int bins = 64);

}  // namespace vndf
