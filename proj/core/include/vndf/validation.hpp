#pragma once

// Parameter-grid driver for the statistical validation suite: PDF
// normalization, sampler-vs-PDF chi-square for both methods, and the
// reflected-direction cap uniformity test.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace vndf {

struct ValidationConfig {
    std::uint64_t seed = 1;
    std::uint64_t samples = 1'000'000;
    int bins_z = 64;
    int bins_phi = 64;
    int repetitions = 3;                 ///< seeds per p-value test
    double p_threshold = 1e-3;
    double normalization_tolerance = 1e-3;
    std::vector<double> alphas{0.05, 0.1, 0.3, 0.5, 1.0};  ///< used on both axes
    std::vector<double> theta_i_deg{0.0, 45.0, 85.0, 120.0};
    std::vector<double> cap_theta_i_deg{0.0, 45.0, 70.0, 130.0};
    bool run_normalization = true;
    bool run_chi_square = true;
    bool run_cap_uniformity = true;
    unsigned threads = 0;  ///< 0 = hardware concurrency
};

/// One CSV row. Normalization rows carry the integral in `statistic` and
/// leave dof and p_value empty; the support row carries the smallest
/// reflected z.
struct ValidationRow {
    double alpha_x = 1.0;
    double alpha_y = 1.0;
    double theta_i_deg = 0.0;
    std::string method;  ///< "cap", "cross-section", or "-" for PDF-only rows
    std::string test_name;
    double statistic = 0.0;
    std::optional<int> dof;
    std::optional<double> p_value;
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
    bool passed = false;
};

/// Verdict of one test family at one configuration, after the seed-majority
/// rule.
struct ValidationVerdict {
    std::string description;
    int passes = 0;
    int trials = 0;
    bool passed = false;
};

struct ValidationResult {
    std::vector<ValidationRow> rows;
    std::vector<ValidationVerdict> verdicts;
    bool passed = true;
};

ValidationResult run_validation(const ValidationConfig& cfg);

void write_validation_csv(std::ostream& out, const std::vector<ValidationRow>& rows);

}  // namespace vndf
