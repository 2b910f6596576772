#pragma once

// Timing harness for the two GGX VNDF samplers: a tight loop over the full
// stretch / sample / stretch pipeline, median over repeated invocations.

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "vndf/types.hpp"

namespace vndf {

enum class Precision { Single, Double };
enum class RngMode { Inline, Pregenerated };

std::string_view to_string(Precision p);
std::string_view to_string(RngMode m);

struct BenchGridPoint {
    double alpha_x = 1.0;
    double alpha_y = 1.0;
    double theta_i_deg = 0.0;
};

/// alpha in {0.05, 0.3, 1.0} (isotropic) times theta_i in {0, 45, 85}.
std::vector<BenchGridPoint> default_bench_grid();

struct BenchConfig {
    std::uint64_t samples_per_invocation = 1u << 20;
    int invocations = 100;
    int warmup_invocations = 10;
    std::vector<BenchGridPoint> grid = default_bench_grid();
    std::uint64_t seed = 1;
    Precision precision = Precision::Single;
    RngMode rng_mode = RngMode::Pregenerated;

    /// Throws std::invalid_argument for invocations < 3, zero samples, or an
    /// empty grid.
    void validate() const;
};

struct BenchRow {
    BenchGridPoint point;
    SamplerMethod method = SamplerMethod::SphericalCap;
    double median_ns_per_sample = 0.0;
    double speedup_percent = 0.0;  ///< (t_cross - t_cap) / t_cross * 100, same on both rows
    std::uint64_t checksum = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;  ///< cross-section then cap, per grid point
    std::string machine;
    Precision precision = Precision::Single;
    RngMode rng_mode = RngMode::Pregenerated;
    double clock_granularity_ns = 0.0;
};

/// Lower-middle order statistic: element (n-1)/2 of the sorted values.
double median_lower(std::vector<double> values);

/// Smallest observable nonzero step of std::chrono::steady_clock.
double clock_granularity_ns();

/// CPU model, compiler and build flags.
std::string machine_descriptor();

/// Times both methods on every grid point. Invocations alternate the method
/// order to cancel drift. Throws TimerResolution if any invocation lasts
/// less than 100 clock ticks.
BenchReport run_bench(const BenchConfig& cfg);

void write_bench_csv(std::ostream& out, const BenchReport& report);

}  // namespace vndf
