#include "vndf/bench.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <fstream>
#include <numbers>
#include <span>
#include <stdexcept>
#include <type_traits>

#if defined(__linux__)
#include <sched.h>
#endif

#include "vndf/csv.hpp"
#include "vndf/errors.hpp"
#include "vndf/ggx_vndf.hpp"
#include "vndf/rng.hpp"

#ifndef VNDF_BUILD_FLAGS
#define VNDF_BUILD_FLAGS "unknown"
#endif

namespace vndf {
namespace {

using Clock = std::chrono::steady_clock;

template <class T>
std::uint64_t mix(const Vec3<T>& v) {
    using Bits = std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint64_t>;
    const std::uint64_t a = std::bit_cast<Bits>(v.x);
    const std::uint64_t b = std::bit_cast<Bits>(v.y);
    const std::uint64_t c = std::bit_cast<Bits>(v.z);
    return a + std::rotl(b, 21) + std::rotl(c, 42);
}

template <SamplerMethod M, class T>
std::uint64_t loop_pregenerated(std::span<const UnitSquareSample<T>> us, const Vec3<T>& wi,
                                const RoughnessAlpha& alpha) {
    std::uint64_t sum = 0;
    for (const auto& u : us) sum += mix(sample_vndf_ggx(u, wi, alpha, M));
    return sum;
}

template <SamplerMethod M, class T>
std::uint64_t loop_inline(std::uint64_t n, std::uint64_t seed, std::uint64_t stream,
                          const Vec3<T>& wi, const RoughnessAlpha& alpha) {
    RngStream rng(seed, stream);
    std::uint64_t sum = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        sum += mix(sample_vndf_ggx(rng.next_sample<T>(), wi, alpha, M));
    }
    return sum;
}

void pin_to_current_cpu() {
#if defined(__linux__)
    const int cpu = sched_getcpu();
    if (cpu < 0) return;
    cpu_set_t set;
    CPU_ZERO(&set);
    CPU_SET(cpu, &set);
    sched_setaffinity(0, sizeof(set), &set);  // best effort
#endif
}

struct Timing {
    double ns = 0.0;
    std::uint64_t checksum = 0;
};

template <class T>
class PointRunner {
public:
    PointRunner(const BenchConfig& cfg, const BenchGridPoint& p, std::uint64_t stream)
        : cfg_(cfg),
          alpha_(p.alpha_x, p.alpha_y),
          wi_(spherical_direction(static_cast<T>(p.theta_i_deg * std::numbers::pi / 180.0), T(0))),
          stream_(stream) {
        if (cfg.rng_mode == RngMode::Pregenerated) {
            RngStream rng(cfg.seed, stream);
            us_.resize(cfg.samples_per_invocation);
            for (auto& u : us_) u = rng.next_sample<T>();
        }
    }

    Timing time(SamplerMethod method) const {
        const auto t0 = Clock::now();
        std::uint64_t sum;
        if (cfg_.rng_mode == RngMode::Pregenerated) {
            sum = method == SamplerMethod::SphericalCap
                      ? loop_pregenerated<SamplerMethod::SphericalCap, T>(us_, wi_, alpha_)
                      : loop_pregenerated<SamplerMethod::CrossSection, T>(us_, wi_, alpha_);
        } else {
            const std::uint64_t n = cfg_.samples_per_invocation;
            sum = method == SamplerMethod::SphericalCap
                      ? loop_inline<SamplerMethod::SphericalCap, T>(n, cfg_.seed, stream_, wi_, alpha_)
                      : loop_inline<SamplerMethod::CrossSection, T>(n, cfg_.seed, stream_, wi_, alpha_);
        }
        const auto t1 = Clock::now();
        return {std::chrono::duration<double, std::nano>(t1 - t0).count(), sum};
    }

private:
    const BenchConfig& cfg_;
    RoughnessAlpha alpha_;
    Vec3<T> wi_;
    std::uint64_t stream_;
    std::vector<UnitSquareSample<T>> us_;
};

template <class T>
void bench_point(const BenchConfig& cfg, const BenchGridPoint& p, std::uint64_t stream,
                 double min_invocation_ns, BenchReport& report) {
    const PointRunner<T> runner(cfg, p, stream);
    std::vector<double> cross_ns, cap_ns;
    std::uint64_t cross_sum = 0, cap_sum = 0;
    const int total = cfg.warmup_invocations + cfg.invocations;
    for (int inv = 0; inv < total; ++inv) {
        const bool cap_first = inv % 2 == 1;
        Timing first = runner.time(cap_first ? SamplerMethod::SphericalCap : SamplerMethod::CrossSection);
        Timing second = runner.time(cap_first ? SamplerMethod::CrossSection : SamplerMethod::SphericalCap);
        const Timing& cap = cap_first ? first : second;
        const Timing& cross = cap_first ? second : first;
        if (inv < cfg.warmup_invocations) continue;
        if (cap.ns < min_invocation_ns || cross.ns < min_invocation_ns) {
            throw TimerResolution(
                "invocation shorter than 100 clock ticks; increase samples_per_invocation");
        }
        cap_ns.push_back(cap.ns);
        cross_ns.push_back(cross.ns);
        cap_sum = cap.checksum;
        cross_sum = cross.checksum;
    }
    const double n = static_cast<double>(cfg.samples_per_invocation);
    const double t_cross = median_lower(cross_ns) / n;
    const double t_cap = median_lower(cap_ns) / n;
    const double speedup = (t_cross - t_cap) / t_cross * 100.0;
    report.rows.push_back({p, SamplerMethod::CrossSection, t_cross, speedup, cross_sum});
    report.rows.push_back({p, SamplerMethod::SphericalCap, t_cap, speedup, cap_sum});
}

}  // namespace

std::string_view to_string(Precision p) {
    return p == Precision::Single ? "single" : "double";
}

std::string_view to_string(RngMode m) {
    return m == RngMode::Inline ? "inline" : "pregen";
}

std::vector<BenchGridPoint> default_bench_grid() {
    std::vector<BenchGridPoint> grid;
    for (double a : {0.05, 0.3, 1.0})
        for (double theta : {0.0, 45.0, 85.0}) grid.push_back({a, a, theta});
    return grid;
}

void BenchConfig::validate() const {
    if (invocations < 3) throw std::invalid_argument("bench: invocations must be >= 3");
    if (warmup_invocations < 0) throw std::invalid_argument("bench: warmup must be >= 0");
    if (samples_per_invocation < 1) throw std::invalid_argument("bench: samples must be >= 1");
    if (grid.empty()) throw std::invalid_argument("bench: empty grid");
    for (const auto& p : grid) RoughnessAlpha(p.alpha_x, p.alpha_y);
}

double median_lower(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median_lower: no values");
    const auto mid = values.begin() + (values.size() - 1) / 2;
    std::nth_element(values.begin(), mid, values.end());
    return *mid;
}

double clock_granularity_ns() {
    double best = 1e300;
    for (int i = 0; i < 200; ++i) {
        const auto t0 = Clock::now();
        auto t1 = Clock::now();
        while (t1 == t0) t1 = Clock::now();
        best = std::min(best, std::chrono::duration<double, std::nano>(t1 - t0).count());
    }
    return best;
}

std::string machine_descriptor() {
    std::string cpu = "unknown cpu";
    std::ifstream info("/proc/cpuinfo");
    for (std::string line; std::getline(info, line);) {
        if (line.rfind("model name", 0) == 0) {
            const auto colon = line.find(':');
            if (colon != std::string::npos) cpu = line.substr(line.find_first_not_of(' ', colon + 1));
            break;
        }
    }
#if defined(__VERSION__)
    const std::string compiler = __VERSION__;
#else
    const std::string compiler = "unknown compiler";
#endif
    return cpu + " | " + compiler + " | flags: " + VNDF_BUILD_FLAGS;
}

BenchReport run_bench(const BenchConfig& cfg) {
    cfg.validate();
    pin_to_current_cpu();

    BenchReport report;
    report.machine = machine_descriptor();
    report.precision = cfg.precision;
    report.rng_mode = cfg.rng_mode;
    report.clock_granularity_ns = clock_granularity_ns();
    const double min_ns = 100.0 * report.clock_granularity_ns;

    for (std::size_t i = 0; i < cfg.grid.size(); ++i) {
        if (cfg.precision == Precision::Single) {
            bench_point<float>(cfg, cfg.grid[i], i, min_ns, report);
        } else {
            bench_point<double>(cfg, cfg.grid[i], i, min_ns, report);
        }
    }
    return report;
}

void write_bench_csv(std::ostream& out, const BenchReport& report) {
    write_csv_line(out, {"alpha_x", "alpha_y", "theta_i_deg", "method", "median_ns_per_sample",
                         "speedup_percent", "checksum", "precision", "rng_mode"});
    for (const auto& r : report.rows) {
        write_csv_line(out, {format_number(r.point.alpha_x), format_number(r.point.alpha_y),
                             format_number(r.point.theta_i_deg), to_string(r.method),
                             format_number(r.median_ns_per_sample), format_number(r.speedup_percent),
                             std::to_string(r.checksum), to_string(report.precision),
                             to_string(report.rng_mode)});
    }
}

}  // namespace vndf
