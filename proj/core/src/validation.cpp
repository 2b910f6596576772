#include "vndf/validation.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "vndf/brdf.hpp"
#include "vndf/csv.hpp"
#include "vndf/ggx_vndf.hpp"
#include "vndf/parallel.hpp"
#include "vndf/reflection.hpp"
#include "vndf/rng.hpp"
#include "vndf/stats.hpp"

namespace vndf {
namespace {

constexpr SamplerMethod kMethods[] = {SamplerMethod::CrossSection, SamplerMethod::SphericalCap};

Vec3d incident(double theta_deg) {
    return spherical_direction(theta_deg * std::numbers::pi / 180.0, 0.0);
}

std::string describe(const std::string& test, double ax, double ay, double theta,
                     const std::string& method) {
    std::ostringstream s;
    s << test << " alpha=(" << ax << "," << ay << ") theta=" << theta << " method=" << method;
    return s.str();
}

struct TaskOutput {
    std::vector<ValidationRow> rows;
    std::vector<ValidationVerdict> verdicts;
};

ValidationVerdict majority(const std::string& description, const std::vector<ValidationRow>& rows,
                           std::size_t first) {
    ValidationVerdict v{description, 0, 0, false};
    for (std::size_t i = first; i < rows.size(); ++i) {
        ++v.trials;
        if (rows[i].passed) ++v.passes;
    }
    v.passed = 2 * v.passes > v.trials;
    return v;
}

ValidationRow normalization_row(const std::string& name, double ax, double ay, double theta,
                                double integral, const ValidationConfig& cfg) {
    ValidationRow row;
    row.alpha_x = ax;
    row.alpha_y = ay;
    row.theta_i_deg = theta;
    row.method = "-";
    row.test_name = name;
    row.statistic = integral;
    row.seed = cfg.seed;
    row.passed = std::abs(integral - 1.0) <= cfg.normalization_tolerance;
    return row;
}

void add_single(TaskOutput& out, ValidationRow row) {
    out.verdicts.push_back({describe(row.test_name, row.alpha_x, row.alpha_y, row.theta_i_deg,
                                     row.method),
                            row.passed ? 1 : 0, 1, row.passed});
    out.rows.push_back(std::move(row));
}

TaskOutput normalization_task(double ax, double ay, double theta, const ValidationConfig& cfg) {
    TaskOutput out;
    const RoughnessAlpha alpha(ax, ay);
    const Vec3d wi = incident(theta);
    add_single(out, normalization_row("norm_pdf_vndf_ggx", ax, ay, theta,
                                      integrate_pdf_sphere([&](const Vec3d& wm) {
                                          return pdf_vndf_ggx(wm, wi, alpha);
                                      }),
                                      cfg));
    const double breaks[] = {-wi.z};
    if (wi.z > 0.0) {
        add_single(out, normalization_row("norm_pdf_reflected", ax, ay, theta,
                                          integrate_pdf_sphere([&](const Vec3d& wb) {
                                              // wb = -wa has no half-vector and zero measure
                                              if (dot(wb, wi) <= -1.0 + 1e-12) return 0.0;
                                              return pdf_reflected(wb, wi, alpha);
                                          },
                                                               breaks),
                                          cfg));
    }
    return out;
}

TaskOutput cap_normalization_task(double theta, const ValidationConfig& cfg) {
    TaskOutput out;
    const Vec3d wi = incident(theta);
    const double breaks[] = {-wi.z};
    add_single(out, normalization_row("norm_cap_density", 1.0, 1.0, theta,
                                      integrate_pdf_sphere([&](const Vec3d& wo) {
                                          return cap_density(wo, wi);
                                      },
                                                           breaks),
                                      cfg));
    return out;
}

TaskOutput chi_square_task(double ax, double ay, double theta, std::uint64_t config_index,
                           const ValidationConfig& cfg) {
    TaskOutput out;
    const RoughnessAlpha alpha(ax, ay);
    const Vec3d wi = incident(theta);
    const Vec3f wi_f(wi);
    const std::vector<double> masses = expected_bin_mass(
        [&](const Vec3d& wm) { return pdf_vndf_ggx(wm, wi, alpha); }, cfg.bins_z, cfg.bins_phi);

    for (std::size_t m = 0; m < std::size(kMethods); ++m) {
        const SamplerMethod method = kMethods[m];
        const std::size_t first = out.rows.size();
        for (int rep = 0; rep < cfg.repetitions; ++rep) {
            RngStream rng(cfg.seed + rep, config_index * std::size(kMethods) + m);
            Histogram2D hist(cfg.bins_z, cfg.bins_phi);
            for (std::uint64_t i = 0; i < cfg.samples; ++i) {
                hist.accumulate(sample_vndf_ggx(rng.next_sample<float>(), wi_f, alpha, method));
            }
            const GofReport r = chi_square_test(hist, masses);
            ValidationRow row;
            row.alpha_x = ax;
            row.alpha_y = ay;
            row.theta_i_deg = theta;
            row.method = std::string(to_string(method));
            row.test_name = "chi2_vndf_ggx";
            row.statistic = r.statistic;
            row.dof = r.dof;
            row.p_value = r.p_value;
            row.n_samples = cfg.samples;
            row.seed = cfg.seed + rep;
            row.passed = r.p_value > cfg.p_threshold;
            out.rows.push_back(row);
        }
        out.verdicts.push_back(majority(describe("chi2_vndf_ggx", ax, ay, theta,
                                                 std::string(to_string(method))),
                                        out.rows, first));
    }
    return out;
}

TaskOutput cap_uniformity_task(double theta, std::size_t method_index, std::uint64_t stream,
                               const ValidationConfig& cfg) {
    TaskOutput out;
    const SamplerMethod method = kMethods[method_index];
    const std::string method_name(to_string(method));
    const Vec3d wi = incident(theta);
    const int bins = cfg.bins_z;
    const double bin_width = (1.0 + wi.z) / bins;

    std::vector<ValidationRow> z_rows, phi_rows, support_rows;
    for (int rep = 0; rep < cfg.repetitions; ++rep) {
        const CapUniformityReport r =
            cap_uniformity_test(wi, method, cfg.samples, cfg.seed + rep, stream, bins);
        auto make = [&](const std::string& name, const GofReport& g) {
            ValidationRow row;
            row.theta_i_deg = theta;
            row.method = method_name;
            row.test_name = name;
            row.statistic = g.statistic;
            row.dof = g.dof;
            row.p_value = g.p_value;
            row.n_samples = cfg.samples;
            row.seed = cfg.seed + rep;
            row.passed = g.p_value > cfg.p_threshold;
            return row;
        };
        z_rows.push_back(make("cap_z", r.z));
        phi_rows.push_back(make("cap_phi", r.phi));
        ValidationRow support;
        support.theta_i_deg = theta;
        support.method = method_name;
        support.test_name = "cap_support";
        support.statistic = r.min_z_o;
        support.n_samples = cfg.samples;
        support.seed = cfg.seed + rep;
        support.passed = r.min_z_o >= -wi.z - bin_width && r.max_z_o <= 1.0 + bin_width;
        support_rows.push_back(support);
    }
    for (auto* group : {&z_rows, &phi_rows}) {
        out.verdicts.push_back(
            majority(describe(group->front().test_name, 1.0, 1.0, theta, method_name), *group, 0));
        out.rows.insert(out.rows.end(), group->begin(), group->end());
    }
    // support is a hard property, not a statistical one: every seed must hold
    ValidationVerdict sv{describe("cap_support", 1.0, 1.0, theta, method_name), 0,
                         static_cast<int>(support_rows.size()), true};
    for (const auto& row : support_rows) {
        sv.passes += row.passed ? 1 : 0;
        sv.passed = sv.passed && row.passed;
    }
    out.verdicts.push_back(sv);
    out.rows.insert(out.rows.end(), support_rows.begin(), support_rows.end());
    return out;
}

}  // namespace

ValidationResult run_validation(const ValidationConfig& cfg) {
    std::vector<std::function<TaskOutput()>> tasks;
    if (cfg.run_normalization) {
        for (double ax : cfg.alphas)
            for (double ay : cfg.alphas)
                for (double theta : cfg.theta_i_deg)
                    tasks.emplace_back([=, &cfg] { return normalization_task(ax, ay, theta, cfg); });
        for (double theta : cfg.theta_i_deg)
            tasks.emplace_back([=, &cfg] { return cap_normalization_task(theta, cfg); });
    }
    if (cfg.run_chi_square) {
        std::uint64_t index = 0;
        for (double ax : cfg.alphas)
            for (double ay : cfg.alphas)
                for (double theta : cfg.theta_i_deg) {
                    tasks.emplace_back(
                        [=, &cfg] { return chi_square_task(ax, ay, theta, index, cfg); });
                    ++index;
                }
    }
    if (cfg.run_cap_uniformity) {
        // streams disjoint from the chi-square ones
        std::uint64_t stream = 1u << 20;
        for (double theta : cfg.cap_theta_i_deg)
            for (std::size_t m = 0; m < std::size(kMethods); ++m) {
                tasks.emplace_back([=, &cfg] { return cap_uniformity_task(theta, m, stream, cfg); });
                ++stream;
            }
    }

    std::vector<TaskOutput> outputs(tasks.size());
    parallel_for(tasks.size(), [&](std::size_t i) { outputs[i] = tasks[i](); }, cfg.threads);

    ValidationResult result;
    for (auto& o : outputs) {
        result.rows.insert(result.rows.end(), o.rows.begin(), o.rows.end());
        for (auto& v : o.verdicts) {
            result.passed = result.passed && v.passed;
            result.verdicts.push_back(std::move(v));
        }
    }
    return result;
}

void write_validation_csv(std::ostream& out, const std::vector<ValidationRow>& rows) {
    write_csv_line(out, {"alpha_x", "alpha_y", "theta_i_deg", "method", "test_name", "statistic",
                         "dof", "p_value", "n_samples", "seed"});
    for (const auto& r : rows) {
        write_csv_line(out, {format_number(r.alpha_x), format_number(r.alpha_y),
                             format_number(r.theta_i_deg), r.method, r.test_name,
                             format_number(r.statistic), r.dof ? std::to_string(*r.dof) : "",
                             r.p_value ? format_number(*r.p_value) : "",
                             std::to_string(r.n_samples), std::to_string(r.seed)});
    }
}

}  // namespace vndf
