#include <gtest/gtest.h>

#include <sstream>

#include "vndf/bench.hpp"
#include "vndf/errors.hpp"

namespace vndf {
namespace {

BenchConfig smoke_config() {
    BenchConfig cfg;
    cfg.grid = {{0.3, 0.3, 45.0}};
    cfg.invocations = 3;
    cfg.warmup_invocations = 1;
    cfg.samples_per_invocation = 100'000;
    return cfg;
}

TEST(MedianLower, OrderStatistic) {
    EXPECT_EQ(median_lower({3.0, 1.0, 2.0}), 2.0);
    EXPECT_EQ(median_lower({4.0, 1.0, 3.0, 2.0}), 2.0);
    EXPECT_EQ(median_lower({5.0}), 5.0);
    EXPECT_THROW(median_lower({}), std::invalid_argument);
}

TEST(RunBench, SmokeReportsPositiveMedians) {
    const BenchReport r = run_bench(smoke_config());
    ASSERT_EQ(r.rows.size(), 2u);
    EXPECT_EQ(r.rows[0].method, SamplerMethod::CrossSection);
    EXPECT_EQ(r.rows[1].method, SamplerMethod::SphericalCap);
    for (const auto& row : r.rows) EXPECT_GT(row.median_ns_per_sample, 0.0);
    EXPECT_EQ(r.rows[0].speedup_percent, r.rows[1].speedup_percent);
    EXPECT_FALSE(r.machine.empty());
    EXPECT_GT(r.clock_granularity_ns, 0.0);
}

TEST(RunBench, ChecksumsAreDeterministic) {
    for (auto mode : {RngMode::Pregenerated, RngMode::Inline})
        for (auto precision : {Precision::Single, Precision::Double}) {
            BenchConfig cfg = smoke_config();
            cfg.rng_mode = mode;
            cfg.precision = precision;
            const BenchReport a = run_bench(cfg);
            const BenchReport b = run_bench(cfg);
            ASSERT_EQ(a.rows.size(), b.rows.size());
            for (std::size_t i = 0; i < a.rows.size(); ++i) EXPECT_EQ(a.rows[i].checksum, b.rows[i].checksum);
            EXPECT_NE(a.rows[0].checksum, a.rows[1].checksum);
        }
}

TEST(RunBench, RejectsInvalidConfig) {
    BenchConfig cfg = smoke_config();
    cfg.invocations = 2;
    EXPECT_THROW(run_bench(cfg), std::invalid_argument);
    cfg = smoke_config();
    cfg.grid.clear();
    EXPECT_THROW(run_bench(cfg), std::invalid_argument);
    cfg = smoke_config();
    cfg.samples_per_invocation = 0;
    EXPECT_THROW(run_bench(cfg), std::invalid_argument);
}

TEST(RunBench, TooShortInvocationIsATimerResolutionError) {
    BenchConfig cfg = smoke_config();
    cfg.samples_per_invocation = 1;
    EXPECT_THROW(run_bench(cfg), TimerResolution);
}

TEST(RunBench, CsvColumns) {
    std::ostringstream out;
    write_bench_csv(out, run_bench(smoke_config()));
    const std::string csv = out.str();
    EXPECT_EQ(csv.substr(0, csv.find('\n')),
              "alpha_x,alpha_y,theta_i_deg,method,median_ns_per_sample,speedup_percent,checksum,"
              "precision,rng_mode");
    EXPECT_NE(csv.find(",cap,"), std::string::npos);
    EXPECT_NE(csv.find(",single,pregen\n"), std::string::npos);
}

}  // namespace
}  // namespace vndf
