#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "vndf/bench.hpp"
#include "vndf/brdf.hpp"
#include "vndf/csv.hpp"
#include "vndf/furnace.hpp"
#include "vndf/ggx_vndf.hpp"
#include "vndf/hemisphere.hpp"
#include "vndf/rng.hpp"
#include "vndf/validation.hpp"

namespace vndf::cli {
namespace {

/// A flag value that failed a domain check after parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CliConfig {
    double alpha_x = 1.0;
    double alpha_y = 1.0;
    double theta_i_deg = 0.0;
    double phi_i_deg = 0.0;
    std::string method = "both";
    std::uint64_t samples = 0;
    std::uint64_t seed = 1;
    int bins_z = 64;
    int bins_phi = 64;
    std::string output = "-";
    std::string precision = "single";
    std::string rng_mode = "pregen";
    // subcommand-specific
    int pdf_bins_z = 16;
    int pdf_bins_phi = 32;
    bool standard = false;
    int invocations = 100;
    int warmup = 10;
    std::optional<double> f0;
    unsigned threads = 0;
};

constexpr double kDegree = std::numbers::pi / 180.0;

RoughnessAlpha parse_alpha(const CliConfig& c) {
    if (!(c.alpha_x >= RoughnessAlpha::kMinAlpha)) throw UsageError("--alpha-x: must be >= 1e-4");
    if (!(c.alpha_y >= RoughnessAlpha::kMinAlpha)) throw UsageError("--alpha-y: must be >= 1e-4");
    return {c.alpha_x, c.alpha_y};
}

Vec3d incident(const CliConfig& c, double max_theta_deg, bool inclusive) {
    const bool ok = inclusive ? c.theta_i_deg >= 0.0 && c.theta_i_deg <= max_theta_deg
                              : c.theta_i_deg >= 0.0 && c.theta_i_deg < max_theta_deg;
    if (!ok) {
        std::ostringstream s;
        s << "--theta-i-deg: must be in [0, " << max_theta_deg << (inclusive ? "]" : ")");
        throw UsageError(s.str());
    }
    return spherical_direction(c.theta_i_deg * kDegree, c.phi_i_deg * kDegree);
}

std::vector<SamplerMethod> methods(const CliConfig& c) {
    if (c.method == "both") return {SamplerMethod::CrossSection, SamplerMethod::SphericalCap};
    if (auto m = parse_sampler_method(c.method)) return {*m};
    throw UsageError("--method: expected cap, cross-section or both");
}

// Writes to the --output file, or to `out` for "-".
void emit(const CliConfig& c, std::ostream& out, const std::function<void(std::ostream&)>& body) {
    if (c.output == "-") {
        body(out);
        return;
    }
    std::ofstream file(c.output, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("--output: cannot open " + c.output);
    body(file);
}

template <class T>
void write_samples(std::ostream& o, std::uint64_t seed, std::uint64_t n, const Vec3d& wi,
                   const RoughnessAlpha& alpha, const std::vector<SamplerMethod>& ms) {
    const Vec3<T> wi_t(wi);
    for (SamplerMethod m : ms) {
        RngStream rng(seed, 0);
        for (std::uint64_t i = 0; i < n; ++i) {
            const UnitSquareSample<T> u = rng.next_sample<T>();
            const Vec3<T> wm = sample_vndf_ggx(u, wi_t, alpha, m);
            write_csv_line(o, {std::to_string(i), to_string(m), format_number(u.u1),
                               format_number(u.u2), format_number(wm.x), format_number(wm.y),
                               format_number(wm.z)});
        }
    }
}

int cmd_sample(const CliConfig& c, std::ostream& out) {
    const RoughnessAlpha alpha = parse_alpha(c);
    const Vec3d wi = incident(c, 180.0, false);
    const auto ms = methods(c);
    const std::uint64_t n = c.samples > 0 ? c.samples : 16;
    emit(c, out, [&](std::ostream& o) {
        write_csv_line(o, {"index", "method", "u1", "u2", "wm_x", "wm_y", "wm_z"});
        if (c.precision == "double") {
            write_samples<double>(o, c.seed, n, wi, alpha, ms);
        } else {
            write_samples<float>(o, c.seed, n, wi, alpha, ms);
        }
    });
    return kExitOk;
}

int cmd_pdf(const CliConfig& c, std::ostream& out) {
    const RoughnessAlpha alpha = c.standard ? RoughnessAlpha(1.0) : parse_alpha(c);
    const Vec3d wi = incident(c, 180.0, false);
    emit(c, out, [&](std::ostream& o) {
        write_csv_line(o, {"wm_x", "wm_y", "wm_z", "pdf_vndf", "pdf_reflected"});
        for (int iz = 0; iz < c.pdf_bins_z; ++iz) {
            const double z = -1.0 + (iz + 0.5) * 2.0 / c.pdf_bins_z;
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            for (int ip = 0; ip < c.pdf_bins_phi; ++ip) {
                const double phi = (ip + 0.5) * 2.0 * std::numbers::pi / c.pdf_bins_phi;
                const Vec3d d(r * std::cos(phi), r * std::sin(phi), z);
                const double vndf = c.standard ? pdf_vndf_std(d, wi) : pdf_vndf_ggx(d, wi, alpha);
                std::string reflected;
                if (wi.z > 0.0 && dot(d, wi) > -1.0 + 1e-12) {
                    reflected = format_number(pdf_reflected(d, wi, alpha));
                }
                write_csv_line(o, {format_number(d.x), format_number(d.y), format_number(d.z),
                                   format_number(vndf), reflected});
            }
        }
    });
    return kExitOk;
}

int cmd_validate(const CliConfig& c, std::ostream& out, std::ostream& err) {
    ValidationConfig vc;
    vc.seed = c.seed;
    if (c.samples > 0) vc.samples = c.samples;
    vc.bins_z = c.bins_z;
    vc.bins_phi = c.bins_phi;
    vc.threads = c.threads;
    const ValidationResult result = run_validation(vc);
    emit(c, out, [&](std::ostream& o) { write_validation_csv(o, result.rows); });
    int failed = 0;
    for (const auto& v : result.verdicts) {
        if (!v.passed) {
            err << "FAIL " << v.description << " (" << v.passes << "/" << v.trials << ")\n";
            ++failed;
        }
    }
    err << (result.passed ? "validation passed" : "validation FAILED") << ": "
        << result.verdicts.size() - failed << "/" << result.verdicts.size() << " checks\n";
    return result.passed ? kExitOk : kExitValidationFailed;
}

int cmd_bench(const CliConfig& c, const CLI::App& sub, std::ostream& out, std::ostream& err) {
    BenchConfig bc;
    if (c.samples > 0) bc.samples_per_invocation = c.samples;
    bc.invocations = c.invocations;
    bc.warmup_invocations = c.warmup;
    bc.seed = c.seed;
    bc.precision = c.precision == "double" ? Precision::Double : Precision::Single;
    bc.rng_mode = c.rng_mode == "inline" ? RngMode::Inline : RngMode::Pregenerated;
    if (sub.count("--alpha-x") + sub.count("--alpha-y") + sub.count("--theta-i-deg") > 0) {
        parse_alpha(c);
        incident(c, 180.0, false);
        bc.grid = {{c.alpha_x, c.alpha_y, c.theta_i_deg}};
    }
    if (bc.invocations < 3) throw UsageError("--invocations: must be >= 3");
    const BenchReport report = run_bench(bc);
    err << "machine: " << report.machine << "\n";
    emit(c, out, [&](std::ostream& o) { write_bench_csv(o, report); });
    return kExitOk;
}

int cmd_furnace(const CliConfig& c, std::ostream& out) {
    const RoughnessAlpha alpha = parse_alpha(c);
    const Vec3d wa = incident(c, 90.0, false);
    const auto ms = methods(c);
    const std::uint64_t n = c.samples > 0 ? c.samples : 1'000'000;
    if (n < 1000) throw UsageError("--samples: furnace needs at least 1000 samples");
    FresnelSpec fresnel = FresnelSpec::unit();
    if (c.f0) {
        if (!(*c.f0 >= 0.0 && *c.f0 <= 1.0)) throw UsageError("--f0: must be in [0, 1]");
        fresnel = FresnelSpec::schlick(*c.f0);
    }
    const double reference = furnace_albedo_quadrature(wa, alpha, fresnel);
    std::vector<FurnaceRow> rows;
    for (SamplerMethod m : ms) {
        FurnaceRow row{c.alpha_x, c.alpha_y, c.theta_i_deg, c.seed,
                       furnace_albedo_mc(wa, alpha, m, fresnel, n, c.seed, c.threads)};
        row.result.reference = reference;
        rows.push_back(row);
    }
    emit(c, out, [&](std::ostream& o) { write_furnace_csv(o, rows); });
    return kExitOk;
}

void add_direction_flags(CLI::App* sub, CliConfig& c) {
    sub->add_option("--alpha-x", c.alpha_x, "GGX roughness along x");
    sub->add_option("--alpha-y", c.alpha_y, "GGX roughness along y");
    sub->add_option("--theta-i-deg", c.theta_i_deg, "incident polar angle in degrees");
    sub->add_option("--phi-i-deg", c.phi_i_deg, "incident azimuth in degrees");
}

void add_output_flag(CLI::App* sub, CliConfig& c) {
    sub->add_option("--output,-o", c.output, "CSV destination, - for stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig c;
    CLI::App app{"GGX visible-normal sampling toolkit"};
    app.require_subcommand(1);

    auto* sample = app.add_subcommand("sample", "emit sampled visible normals as CSV");
    add_direction_flags(sample, c);
    sample->add_option("--method", c.method, "cap, cross-section or both")
        ->check(CLI::IsMember({"cap", "cross-section", "both"}));
    sample->add_option("--samples", c.samples, "number of samples (default 16)");
    sample->add_option("--seed", c.seed, "RNG seed");
    sample->add_option("--precision", c.precision)->check(CLI::IsMember({"single", "double"}));
    add_output_flag(sample, c);

    auto* pdf = app.add_subcommand("pdf", "tabulate the VNDF and reflected-direction PDFs");
    add_direction_flags(pdf, c);
    pdf->add_option("--bins-z", c.pdf_bins_z, "grid rows in z (default 16)")->check(CLI::PositiveNumber);
    pdf->add_option("--bins-phi", c.pdf_bins_phi, "grid columns in phi (default 32)")->check(CLI::PositiveNumber);
    pdf->add_flag("--std", c.standard, "tabulate the unit-hemisphere VNDF instead");
    add_output_flag(pdf, c);

    auto* validate = app.add_subcommand("validate", "run the statistical validation suite");
    validate->add_option("--seed", c.seed, "base seed");
    validate->add_option("--samples", c.samples, "samples per test (default 1e6)");
    validate->add_option("--bins-z", c.bins_z)->check(CLI::Range(2, 4096));
    validate->add_option("--bins-phi", c.bins_phi)->check(CLI::Range(2, 4096));
    validate->add_option("--threads", c.threads, "worker threads, 0 = all cores");
    add_output_flag(validate, c);

    auto* bench = app.add_subcommand("bench", "time both samplers");
    add_direction_flags(bench, c);
    bench->add_option("--samples", c.samples, "samples per invocation (default 2^20)");
    bench->add_option("--invocations", c.invocations, "timed invocations");
    bench->add_option("--warmup", c.warmup, "untimed warmup invocations")->check(CLI::NonNegativeNumber);
    bench->add_option("--seed", c.seed);
    bench->add_option("--precision", c.precision)->check(CLI::IsMember({"single", "double"}));
    bench->add_option("--rng-mode", c.rng_mode)->check(CLI::IsMember({"inline", "pregen"}));
    add_output_flag(bench, c);

    auto* furnace = app.add_subcommand("furnace", "white-furnace albedo, Monte Carlo and quadrature");
    add_direction_flags(furnace, c);
    furnace->add_option("--method", c.method)->check(CLI::IsMember({"cap", "cross-section", "both"}));
    furnace->add_option("--samples", c.samples, "Monte Carlo samples (default 1e6)");
    furnace->add_option("--seed", c.seed);
    furnace->add_option("--f0", c.f0, "Schlick f0; unit Fresnel when omitted");
    furnace->add_option("--threads", c.threads, "worker threads, 0 = all cores");
    add_output_flag(furnace, c);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (sample->parsed()) return cmd_sample(c, out);
        if (pdf->parsed()) return cmd_pdf(c, out);
        if (validate->parsed()) return cmd_validate(c, out, err);
        if (bench->parsed()) return cmd_bench(c, *bench, out, err);
        if (furnace->parsed()) return cmd_furnace(c, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace vndf::cli
