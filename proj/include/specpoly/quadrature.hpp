/*
   Copyright 2026 The specpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SPECPOLY_QUADRATURE_HPP
#define SPECPOLY_QUADRATURE_HPP

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "errors.hpp"

namespace specpoly {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  ///< |S_k - S_{k-1}| at the accepted level
    double abs_mass = 0.0;        ///< integral of |f|, same rule
    int levels = 0;
};

inline constexpr int kDefaultMaxLevels = 12;

/**
 * Double-exponential (tanh-sinh) rule on (-1, 1).
 *
 * The integrand is called as f(xi, 1 + xi, 1 - xi) with both complements computed without
 * cancellation, so endpoint singularities such as (1 - xi)^(-1/2) are evaluated accurately.
 * Level k uses step 2^-k on t in [-t_max, t_max]; refinement stops once successive levels
 * differ by less than tol * (1 + |S_k|), and NoConvergence is thrown when max_levels
 * doublings do not get there. A difference at the round-off floor of the absolute mass also
 * stops refinement, since heavy cancellation (a near-zero integral of a large integrand) can
 * never meet the relative test in double precision.
 */
template <class F>
QuadratureResult tanh_sinh(F&& f, double tol, int max_levels = kDefaultMaxLevels) {
    constexpr double half_pi = std::numbers::pi / 2;
    // Complements reach ~1e-275 at t = 6, which keeps abscissae distinct from the endpoints.
    constexpr double t_max = 6.0;
    constexpr int min_levels = 3;
    constexpr double roundoff = 64 * std::numeric_limits<double>::epsilon();

    auto node = [&](double t, double& sum, double& abs_sum) {
        const double z = half_pi * std::sinh(t);
        const double cz = std::cosh(z);
        const double w = half_pi * std::cosh(t) / (cz * cz);
        if (w == 0.0) return;
        const double comp = std::exp(-std::abs(z)) / cz;  // 1 - |xi|
        const double xi = std::tanh(z);
        const double dl = z < 0 ? comp : 2.0 - comp;
        const double dr = z < 0 ? 2.0 - comp : comp;
        const double fx = f(xi, dl, dr);
        if (!std::isfinite(fx)) throw NoConvergence("integrand is not finite at xi = " + std::to_string(xi));
        sum += w * fx;
        abs_sum += w * std::abs(fx);
    };

    double h = 1.0;
    double sum = 0.0, abs_sum = 0.0;
    node(0.0, sum, abs_sum);
    for (int j = 1; j * h <= t_max; ++j) {
        node(j * h, sum, abs_sum);
        node(-j * h, sum, abs_sum);
    }
    double estimate = h * sum;

    for (int level = 1; level <= max_levels; ++level) {
        h /= 2;
        for (int j = 1; j * h <= t_max; j += 2) {
            node(j * h, sum, abs_sum);
            node(-j * h, sum, abs_sum);
        }
        const double next = h * sum;
        const double diff = std::abs(next - estimate);
        estimate = next;
        if (level >= min_levels && (diff < tol * (1.0 + std::abs(next)) || diff <= roundoff * h * abs_sum))
            return {next, diff, h * abs_sum, level};
    }
    std::ostringstream msg;
    msg << "tanh-sinh did not reach tolerance " << tol << " within " << max_levels << " doublings";
    throw NoConvergence(msg.str());
}

}  // namespace specpoly

#endif
