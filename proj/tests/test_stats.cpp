#include <gtest/gtest.h>

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "vndf/errors.hpp"
#include "vndf/reflection.hpp"
#include "vndf/stats.hpp"

namespace vndf {
namespace {

constexpr double kPi = std::numbers::pi;

Vec3d cosine_direction(std::mt19937_64& gen) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double r = std::sqrt(uni(gen));
    const double phi = 2.0 * kPi * uni(gen);
    return {r * std::cos(phi), r * std::sin(phi), std::sqrt(std::max(0.0, 1.0 - r * r))};
}

TEST(GammaQ, MatchesBoost) {
    for (double a : {0.5, 1.0, 3.5, 10.0, 99.5, 357.0, 2047.5})
        for (double x : {1e-3, 0.1, 1.0, 5.0, 20.0, 100.0, 400.0, 2100.0}) {
            const double expected = boost::math::gamma_q(a, x);
            const double got = gamma_q(a, x);
            if (expected < 1e-300) {
                EXPECT_LT(got, 1e-290);
                continue;
            }
            EXPECT_NEAR(got / expected, 1.0, 1e-10) << "a " << a << " x " << x;
        }
}

TEST(GammaQ, EdgeCasesAndMonotonicity) {
    EXPECT_EQ(gamma_q(3.0, 0.0), 1.0);
    EXPECT_THROW(gamma_q(0.0, 1.0), std::invalid_argument);
    EXPECT_THROW(gamma_q(1.0, -1.0), std::invalid_argument);
    double previous = 1.0;
    for (double stat = 600.0; stat < 900.0; stat += 5.0) {
        const double p = gamma_q(357.0, stat / 2.0);
        EXPECT_LT(p, previous);
        previous = p;
    }
}

TEST(Histogram2D, BinningBoundaries) {
    const Histogram2D h(64, 64);
    EXPECT_EQ(h.bin_of({0, 0, 1}) / 64, 63);
    EXPECT_EQ(h.bin_of({0, 0, -1}) / 64, 0);
    EXPECT_EQ(h.bin_of({1, 0, 0}), 32 * 64);
    // just below phi = 2 pi wraps into the last sector
    EXPECT_EQ(h.bin_of({1, -1e-9, 0}) % 64, 63);
    EXPECT_THROW(Histogram2D(0, 4), std::invalid_argument);
}

TEST(Histogram2D, EqualAreaBins) {
    const Histogram2D h(64, 48);
    const double expected = 4.0 * kPi / (64 * 48);
    EXPECT_NEAR(h.bin_solid_angle() / expected, 1.0, 1e-12);
    for (int iz = 0; iz < h.bins_z(); ++iz)
        for (int ip = 0; ip < h.bins_phi(); ++ip) {
            const double area = (h.z_hi(iz) - h.z_lo(iz)) * (h.phi_hi(ip) - h.phi_lo(ip));
            ASSERT_NEAR(area / expected, 1.0, 1e-12);
        }
}

TEST(Histogram2D, CountsTotalAndMerge) {
    Histogram2D a(8, 8), b(8, 8);
    std::mt19937_64 gen(1);
    for (int i = 0; i < 1000; ++i) a.accumulate(oracle::random_direction(gen));
    for (int i = 0; i < 500; ++i) b.accumulate(Vec3f(oracle::random_direction(gen)));
    EXPECT_EQ(a.total(), 1000u);
    a.merge(b);
    EXPECT_EQ(a.total(), 1500u);
    std::uint64_t sum = 0;
    for (auto c : a.counts()) sum += c;
    EXPECT_EQ(sum, 1500u);
    EXPECT_THROW(a.merge(Histogram2D(8, 4)), std::invalid_argument);
}

TEST(Histogram2D, UniformSamplesWithinPoissonBounds) {
    Histogram2D h(64, 64);
    std::mt19937_64 gen(2);
    const int n = 1'000'000;
    for (int i = 0; i < n; ++i) h.accumulate(oracle::random_direction(gen));
    const double mean = static_cast<double>(n) / h.bin_count();
    for (auto c : h.counts()) ASSERT_LT(std::abs(c - mean), 5.0 * std::sqrt(mean));
}

TEST(ExpectedBinMass, UniformDensity) {
    const auto masses = expected_bin_mass([](const Vec3d&) { return 1.0 / (4.0 * kPi); }, 64, 64);
    ASSERT_EQ(masses.size(), 4096u);
    for (double m : masses) ASSERT_NEAR(m * 4096.0, 1.0, 1e-12);
}

TEST(ExpectedBinMass, CosineDensityClosedForm) {
    const int nz = 32, np = 16;
    const auto masses = expected_bin_mass(
        [](const Vec3d& d) { return d.z > 0.0 ? d.z / kPi : 0.0; }, nz, np);
    const Histogram2D h(nz, np);
    for (int iz = 0; iz < nz; ++iz)
        for (int ip = 0; ip < np; ++ip) {
            const double z0 = std::max(0.0, h.z_lo(iz));
            const double z1 = std::max(0.0, h.z_hi(iz));
            const double expected = (z1 * z1 - z0 * z0) / 2.0 * (2.0 * kPi / np) / kPi;
            ASSERT_NEAR(masses[iz * np + ip], expected, 1e-12);
        }
}

TEST(ExpectedBinMass, CapDensitySupport) {
    const Vec3d wi(1, 0, 0);
    const auto masses =
        expected_bin_mass([&](const Vec3d& wo) { return cap_density(wo, wi); }, 64, 64);
    for (int iz = 0; iz < 32; ++iz)
        for (int ip = 0; ip < 64; ++ip) ASSERT_EQ(masses[iz * 64 + ip], 0.0);
    for (int iz = 32; iz < 64; ++iz) ASSERT_NEAR(masses[iz * 64 + 32] * 2048.0, 1.0, 1e-12);
}

TEST(ExpectedBinMass, RejectsUnnormalizedDensity) {
    EXPECT_THROW(expected_bin_mass([](const Vec3d&) { return 1.01 / (4.0 * kPi); }, 8, 8),
                 NormalizationFailure);
}

TEST(ExpectedBinMass, SplitsSlabsAtJumps) {
    // a jump at z = 0.3 inside a slab of an 8-slab layout
    auto step = [](const Vec3d& d) { return d.z > 0.3 ? 1.0 / (2.0 * kPi * 0.7) : 0.0; };
    const double breaks[] = {0.3};
    const auto masses = expected_bin_mass(step, 8, 1, breaks);
    EXPECT_NEAR(masses[5], 0.2 / 0.7, 1e-12);
    EXPECT_NEAR(integrate_pdf_sphere(step, breaks), 1.0, 1e-9);
}

TEST(IntegratePdfSphere, Uniform) {
    EXPECT_NEAR(integrate_pdf_sphere([](const Vec3d&) { return 1.0 / (4.0 * kPi); }), 1.0, 1e-6);
}

TEST(IntegratePdfSphere, CapDensity) {
    for (double zi : {-0.5, 0.0, 0.5, 1.0}) {
        const Vec3d wi(std::sqrt(1.0 - zi * zi), 0.0, zi);
        const double breaks[] = {-zi};
        EXPECT_NEAR(integrate_pdf_sphere([&](const Vec3d& wo) { return cap_density(wo, wi); }, breaks),
                    1.0, 1e-3)
            << "zi " << zi;
    }
}

TEST(IntegratePdfSphere, ResolvesNarrowPeaks) {
    // von Mises-Fisher lobe with kappa = 2e5, angular width ~ 2 mrad
    const double kappa = 2e5;
    const Vec3d mu = normalize(Vec3d(-1.0, 0.0, 0.05));
    auto vmf = [&](const Vec3d& d) {
        return kappa / (2.0 * kPi) * std::exp(kappa * (dot(d, mu) - 1.0));
    };
    EXPECT_NEAR(integrate_pdf_sphere(vmf), 1.0, 1e-4);
}

TEST(ChiSquare, ExactMatchHasUnitPValue) {
    std::vector<std::uint64_t> counts(100, 1000);
    std::vector<double> masses(100, 0.01);
    const GofReport r = chi_square_test(counts, masses);
    EXPECT_NEAR(r.statistic, 0.0, 1e-20);
    EXPECT_EQ(r.dof, 99);
    EXPECT_NEAR(r.p_value, 1.0, 1e-12);
}

TEST(ChiSquare, InsufficientData) {
    std::vector<std::uint64_t> counts(10, 999);
    std::vector<double> masses(10, 0.1);
    EXPECT_THROW(chi_square_test(counts, masses), InsufficientData);
    std::vector<std::uint64_t> one_bin{100000, 0, 0};
    std::vector<double> point_mass{1.0, 0.0, 0.0};
    EXPECT_THROW(chi_square_test(one_bin, point_mass), InsufficientData);
}

TEST(ChiSquare, MergesSmallBinsIntoTail) {
    // expected counts 3 + 3: the tail reaches 5 and becomes a bin of its own
    std::vector<std::uint64_t> counts{49'997, 49'997, 3, 3};
    std::vector<double> masses{0.49997, 0.49997, 0.00003, 0.00003};
    GofReport r = chi_square_test(counts, masses);
    EXPECT_EQ(r.merged_bins, 2);
    EXPECT_EQ(r.dof, 2);
    // expected counts 2 + 2: the tail is too small and joins the smallest bin
    counts = {49'998, 49'998, 2, 2};
    masses = {0.49998, 0.49998, 0.00002, 0.00002};
    r = chi_square_test(counts, masses);
    EXPECT_EQ(r.merged_bins, 2);
    EXPECT_EQ(r.dof, 1);
}

TEST(ChiSquare, NullHypothesisPassesAtNominalRate) {
    const auto masses = expected_bin_mass([](const Vec3d&) { return 1.0 / (4.0 * kPi); }, 64, 64);
    int passes = 0;
    for (int rep = 0; rep < 100; ++rep) {
        std::mt19937_64 gen(1000 + rep);
        Histogram2D h(64, 64);
        for (int i = 0; i < 1'000'000; ++i) h.accumulate(oracle::random_direction(gen));
        if (chi_square_test(h, masses).p_value > 1e-3) ++passes;
    }
    EXPECT_GE(passes, 99);
}

TEST(ChiSquare, DetectsWrongDistribution) {
    const auto masses = expected_bin_mass([](const Vec3d&) { return 1.0 / (4.0 * kPi); }, 64, 64);
    std::mt19937_64 gen(3);
    Histogram2D h(64, 64);
    for (int i = 0; i < 1'000'000; ++i) h.accumulate(cosine_direction(gen));
    EXPECT_LT(chi_square_test(h, masses).p_value, 1e-12);
}

class CapUniformity : public ::testing::TestWithParam<std::tuple<double, SamplerMethod>> {};

TEST_P(CapUniformity, ReflectionsFillTheCapUniformly) {
    const auto [theta_deg, method] = GetParam();
    const Vec3d wi = spherical_direction(theta_deg * kPi / 180.0, 0.3);
    const CapUniformityReport r = cap_uniformity_test(wi, method, 1'000'000, 17);
    EXPECT_GT(r.z.p_value, 1e-3);
    EXPECT_GT(r.phi.p_value, 1e-3);
    const double bin_width = (1.0 + wi.z) / 64.0;
    EXPECT_GE(r.min_z_o, -wi.z - bin_width);
    EXPECT_LT(r.min_z_o, -wi.z + bin_width);
    EXPECT_LE(r.max_z_o, 1.0 + 1e-6);
}

INSTANTIATE_TEST_SUITE_P(
    Angles, CapUniformity,
    ::testing::Combine(::testing::Values(0.0, 70.0, 130.0),
                       ::testing::Values(SamplerMethod::CrossSection, SamplerMethod::SphericalCap)));

TEST(CapUniformity, RejectsDegenerateIncidence) {
    EXPECT_THROW(cap_uniformity_test({0, 0, -1}, SamplerMethod::SphericalCap, 100000, 1),
                 DegenerateIncidence);
}

}  // namespace
}  // namespace vndf
