#include <gtest/gtest.h>

#include <boost/math/special_functions/gamma.hpp>

#include <array>
#include <cstdint>
#include <vector>

#include "vndf/rng.hpp"

namespace vndf {
namespace {

// Known-answer vectors from the Random123 distribution (kat_vectors).
TEST(Philox, KnownAnswerVectors) {
    using C = std::array<std::uint32_t, 4>;
    using K = std::array<std::uint32_t, 2>;
    EXPECT_EQ(philox4x32_10(C{0, 0, 0, 0}, K{0, 0}),
              (C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
    EXPECT_EQ(philox4x32_10(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                            K{0xffffffff, 0xffffffff}),
              (C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
    EXPECT_EQ(philox4x32_10(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                            K{0xa4093822, 0x299f31d0}),
              (C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(RngStream, SameSeedAndStreamReproduce) {
    RngStream a(42, 7), b(42, 7);
    for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.next_u32(), b.next_u32());
}

TEST(RngStream, StreamsAndSeedsDiffer) {
    RngStream base(42, 0);
    RngStream other_stream = base.split(1);
    RngStream other_seed(43, 0);
    int same_stream = 0, same_seed = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto x = base.next_u32();
        same_stream += x == other_stream.next_u32();
        same_seed += x == other_seed.next_u32();
    }
    EXPECT_LT(same_stream, 3);
    EXPECT_LT(same_seed, 3);
}

TEST(RngStream, FloatSamplesStayBelowOne) {
    RngStream rng(1, 0);
    for (int i = 0; i < 200000; ++i) {
        const auto u = rng.next_sample<float>();
        ASSERT_GE(u.u1, 0.0f);
        ASSERT_LT(u.u1, 1.0f);
        ASSERT_GE(u.u2, 0.0f);
        ASSERT_LT(u.u2, 1.0f);
    }
}

TEST(RngStream, UnitSquareIsUniform) {
    // 32 x 32 grid over [0,1)^2, Pearson statistic against uniform.
    constexpr int kBins = 32;
    constexpr int kN = 1'000'000;
    std::vector<int> counts(kBins * kBins, 0);
    RngStream rng(2024, 3);
    for (int i = 0; i < kN; ++i) {
        const auto u = rng.next_sample<double>();
        ++counts[static_cast<int>(u.u1 * kBins) * kBins + static_cast<int>(u.u2 * kBins)];
    }
    const double expected = static_cast<double>(kN) / counts.size();
    double stat = 0.0;
    for (int c : counts) stat += (c - expected) * (c - expected) / expected;
    const double p = boost::math::gamma_q(0.5 * (counts.size() - 1), 0.5 * stat);
    EXPECT_GT(p, 1e-3) << "chi2 = " << stat;
}

TEST(UnitSquareSample, CheckedRejectsOutOfRange) {
    EXPECT_NO_THROW(UnitSquareSample<float>::checked(0.0f, 0.999f));
    EXPECT_THROW(UnitSquareSample<float>::checked(1.0f, 0.5f), std::invalid_argument);
    EXPECT_THROW(UnitSquareSample<double>::checked(0.5, -0.1), std::invalid_argument);
}

TEST(RoughnessAlpha, RejectsTinyAndNonFinite) {
    EXPECT_NO_THROW(RoughnessAlpha(1e-4, 1.0));
    EXPECT_THROW(RoughnessAlpha(5e-5, 1.0), std::invalid_argument);
    EXPECT_THROW(RoughnessAlpha(0.5, 0.0), std::invalid_argument);
    EXPECT_THROW(RoughnessAlpha(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
    EXPECT_DOUBLE_EQ(RoughnessAlpha(0.5, 0.25).det_mt(), 8.0);
}

}  // namespace
}  // namespace vndf
