#pragma once

#include <functional>
#include <vector>

#include "vndf/vec3.hpp"

namespace vndf {

struct QuadratureRule {
    std::vector<double> nodes;    ///< on [-1, 1]
    std::vector<double> weights;  ///< sum to 2
};

/// n-point Gauss-Legendre rule (Newton iteration on P_n).
QuadratureRule gauss_legendre(int n);

/// Integral of f over the spherical patch [t0, t1] x [p0, p1] in (polar
/// angle, azimuth): Gauss-Legendre in theta, nodes_phi midpoints in phi. The
/// patch is split in four, recursively, wherever third differences of the
/// node values exceed what the rule resolves. At most 16 nodes per axis.
double integrate_sphere_patch(const std::function<double(const Vec3d&)>& f,
                              const QuadratureRule& theta_rule, int nodes_phi, double t0,
                              double t1, double p0, double p1);

}  // namespace vndf
