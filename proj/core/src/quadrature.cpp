#include "vndf/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vndf {
namespace {

// Absolute error target per cell, and how often a cell may be split in four.
constexpr double kCellTolerance = 1e-7;
constexpr int kMaxDepth = 4;

// Integrates pdf over the cell [t0, t1] x [p0, p1] in (polar angle, phi):
// Gauss-Legendre in theta with sin(theta) folded into the weights, midpoint
// in phi. When third differences of the node values show structure the rule
// cannot resolve, the cell is split into four and each quarter integrated the
// same way.
double integrate_cell(const std::function<double(const Vec3d&)>& pdf, const QuadratureRule& rule,
                      int nodes_phi, double t0, double t1, double p0, double p1, int depth) {
    const int n = static_cast<int>(rule.nodes.size());
    const int m = nodes_phi;
    std::array<double, 256> f{};
    std::array<double, 16> cos_phi{}, sin_phi{};
    const double half = 0.5 * (t1 - t0);
    const double dphi = (p1 - p0) / m;
    for (int j = 0; j < m; ++j) {
        const double phi = p0 + (j + 0.5) * dphi;
        cos_phi[j] = std::cos(phi);
        sin_phi[j] = std::sin(phi);
    }
    double mass = 0.0;
    for (int k = 0; k < n; ++k) {
        const double theta = t0 + half * (rule.nodes[k] + 1.0);
        const double st = std::sin(theta);
        const double ct = std::cos(theta);
        double row = 0.0;
        for (int j = 0; j < m; ++j) {
            const double v = pdf(Vec3d(st * cos_phi[j], st * sin_phi[j], ct));
            f[k * m + j] = v;
            row += v;
        }
        mass += rule.weights[k] * half * st * row * dphi;
    }
    if (depth >= kMaxDepth) return mass;

    double indicator = 0.0;
    for (int k = 0; k < n; ++k)
        for (int j = 0; j + 3 < m; ++j) {
            const double* r = &f[k * m + j];
            indicator = std::max(indicator, std::abs(r[0] - 3.0 * r[1] + 3.0 * r[2] - r[3]));
        }
    for (int j = 0; j < m; ++j)
        for (int k = 0; k + 3 < n; ++k) {
            const double* c = &f[k * m + j];
            indicator = std::max(indicator,
                                 std::abs(c[0] - 3.0 * c[m] + 3.0 * c[2 * m] - c[3 * m]));
        }
    const double area = (std::cos(t0) - std::cos(t1)) * (p1 - p0);
    if (indicator * area <= kCellTolerance) return mass;

    const double tm = 0.5 * (t0 + t1);
    const double pm = 0.5 * (p0 + p1);
    return integrate_cell(pdf, rule, nodes_phi, t0, tm, p0, pm, depth + 1) +
           integrate_cell(pdf, rule, nodes_phi, t0, tm, pm, p1, depth + 1) +
           integrate_cell(pdf, rule, nodes_phi, tm, t1, p0, pm, depth + 1) +
           integrate_cell(pdf, rule, nodes_phi, tm, t1, pm, p1, depth + 1);
}

}  // namespace


QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute derivative at the converged node
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = pk;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

double integrate_sphere_patch(const std::function<double(const Vec3d&)>& f,
                              const QuadratureRule& theta_rule, int nodes_phi, double t0,
                              double t1, double p0, double p1) {
    if (theta_rule.nodes.size() > 16 || nodes_phi < 1 || nodes_phi > 16) {
        throw std::invalid_argument("integrate_sphere_patch: 1 to 16 nodes per axis");
    }
    return integrate_cell(f, theta_rule, nodes_phi, t0, t1, p0, p1, 0);
}

}  // namespace vndf
