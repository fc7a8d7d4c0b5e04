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

#ifndef SPECPOLY_WEIGHTS_HPP
#define SPECPOLY_WEIGHTS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "families.hpp"
#include "poly.hpp"

namespace specpoly {

/// Interval with rational or infinite endpoints; an empty optional is -inf / +inf.
struct Interval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    bool lo_open = true;
    bool hi_open = true;

    static Interval finite(Rational lo, Rational hi) {
        if (!(lo < hi)) throw InvalidArgument("interval needs lo < hi");
        return {std::move(lo), std::move(hi)};
    }
    static Interval real_line() { return {}; }
    static Interval above(Rational lo) { return {std::move(lo), std::nullopt}; }
    static Interval below(Rational hi) { return {std::nullopt, std::move(hi)}; }

    bool is_finite() const noexcept { return lo && hi; }
    bool contains_interior(const Rational& x) const { return (!lo || *lo < x) && (!hi || x < *hi); }

    friend bool operator==(const Interval&, const Interval&) = default;
};

inline std::string to_string(const Interval& I) {
    return std::string(I.lo_open ? "(" : "[") + (I.lo ? to_string(*I.lo) : "-inf") + ", " +
           (I.hi ? to_string(*I.hi) : "inf") + (I.hi_open ? ")" : "]");
}

/// |x - root|^exponent
struct PowerFactor {
    Rational root;
    Rational exponent;
    friend bool operator==(const PowerFactor&, const PowerFactor&) = default;
};

/**
 * Closed-form weight
 *
 *   p(x) = constant * prod |x - r_i|^e_i * (x^2 + 1)^q * exp(E(x)) * exp(beta * atan x)
 *
 * together with the interval on which it is used. Only the interior of the interval is ever
 * evaluated, where every factor is smooth and positive.
 */
struct WeightExpr {
    Rational constant = 1;
    std::vector<PowerFactor> power_factors;
    std::optional<Rational> quad_exponent;
    Poly exp_poly;
    Rational arctan_coeff = 0;
    Interval interval;

    /// Exponent of the power factor rooted at r, zero if none.
    Rational exponent_at(const Rational& r) const {
        for (const auto& f : power_factors)
            if (f.root == r) return f.exponent;
        return 0;
    }

    friend bool operator==(const WeightExpr&, const WeightExpr&) = default;
};

inline std::string to_string(const WeightExpr& w, const std::string& var = "x") {
    std::vector<std::string> parts;
    if (w.constant != 1) parts.push_back(to_string(w.constant));
    for (const auto& f : w.power_factors)
        parts.push_back("|" + to_string(Poly::linear_factor(f.root), var) + "|^(" + to_string(f.exponent) + ")");
    if (w.quad_exponent) parts.push_back("(" + var + "^2 + 1)^(" + to_string(*w.quad_exponent) + ")");
    if (!w.exp_poly.is_zero()) parts.push_back("exp(" + to_string(w.exp_poly, var) + ")");
    if (w.arctan_coeff != 0) parts.push_back("exp(" + to_string(w.arctan_coeff) + "*atan(" + var + "))");
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : " * ") + p;
    if (out.empty()) out = "1";
    return out + " on " + to_string(w.interval);
}

// ---------------------------------------------------------------------------
// Derivation from the Pearson equation (p a)' = p b

/**
 * Weight p = exp(int (b - a') / a) for L = a D^2 + b D, by exact partial fractions.
 *
 * Supported leading coefficients: distinct rational roots, c(x^2 + 1), linear, constant.
 * The integration constant is chosen so that `constant == 1`.
 */
inline WeightExpr derive_weight(const Poly& a, const Poly& b) {
    const auto deg_a = a.degree();
    if (!deg_a) throw UnsupportedLeadingCoefficient("leading coefficient is zero");
    if (*deg_a > 2) throw UnsupportedLeadingCoefficient("weights are derived only for deg(a) <= 2");
    if (b.degree().value_or(0) > 1) throw InvalidArgument("weights are derived only for deg(b) <= 1");

    WeightExpr w;
    const Rational b1 = b.coeff(1), b0 = b.coeff(0);

    if (*deg_a == 0) {
        const Rational c = a.coeff(0);
        w.exp_poly = (Rational(1) / c) * antiderivative(b);
        w.interval = Interval::real_line();
        return w;
    }

    if (*deg_a == 1) {
        const Rational c = a.coeff(1);
        const Rational r = -a.coeff(0) / c;
        // b / a = b1 / c + (b(r) / c) / (x - r)
        const Rational e = b(r) / c - 1;
        if (e != 0) w.power_factors.push_back({r, e});
        w.exp_poly = Poly{0, b1 / c};
        w.interval = c > 0 ? Interval::above(r) : Interval::below(r);
        return w;
    }

    const Rational a2 = a.coeff(2), a1 = a.coeff(1), a0 = a.coeff(0);
    const Rational disc = a1 * a1 - 4 * a2 * a0;
    if (disc == 0)
        throw UnsupportedLeadingCoefficient("leading coefficient " + to_string(a) +
                                            " has a double root (Bessel-type case)");
    if (disc > 0) {
        const auto sq = rational_sqrt(disc);
        if (!sq)
            throw UnsupportedLeadingCoefficient("leading coefficient " + to_string(a) +
                                                " has irrational roots; normalize first");
        Rational r1 = (-a1 - *sq) / (2 * a2), r2 = (-a1 + *sq) / (2 * a2);
        if (r2 < r1) std::swap(r1, r2);
        // b / a = A1 / (x - r1) + A2 / (x - r2) with A_i = b(r_i) / (a2 (r_i - r_j))
        const Rational e1 = b(r1) / (a2 * (r1 - r2)) - 1;
        const Rational e2 = b(r2) / (a2 * (r2 - r1)) - 1;
        if (e1 != 0) w.power_factors.push_back({r1, e1});
        if (e2 != 0) w.power_factors.push_back({r2, e2});
        w.interval = Interval::finite(r1, r2);
        return w;
    }

    if (a1 != 0 || a0 != a2)
        throw UnsupportedLeadingCoefficient("leading coefficient " + to_string(a) +
                                            " is not a multiple of x^2 + 1; normalize first");
    // b / a = (b1 x + b0) / (a2 (x^2 + 1)); the 1/|a| prefactor contributes -1 to the exponent.
    w.quad_exponent = b1 / (2 * a2) - 1;
    w.arctan_coeff = b0 / a2;
    w.interval = Interval::real_line();
    return w;
}

inline WeightExpr derive_weight(const DiffOperator& op) {
    if (op.order() != 2) throw InvalidArgument("weights are derived only for second-order operators");
    return derive_weight(op.coeff(2), op.coeff(1));
}

inline WeightExpr derive_weight(const FamilySpec& spec) { return derive_weight(build_operator(spec)); }

// ---------------------------------------------------------------------------
// Floating-point evaluation

/// A point of the interval with optional accurate distances to its finite endpoints, which
/// quadrature supplies so that |x - endpoint|^e does not lose precision near the ends.
struct Abscissa {
    double x = 0.0;
    std::optional<double> to_lo;
    std::optional<double> to_hi;
};

namespace detail {

/// log(1 + x^2) without overflow for huge |x|.
inline double log1p_square(double x) {
    const double ax = std::abs(x);
    if (ax > 1.0) return 2.0 * std::log(ax) + std::log1p(1.0 / (ax * ax));
    return std::log1p(ax * ax);
}

inline double log_distance(const WeightExpr& w, const PowerFactor& f, const Abscissa& at) {
    if (w.interval.lo && at.to_lo && f.root == *w.interval.lo) return std::log(*at.to_lo);
    if (w.interval.hi && at.to_hi && f.root == *w.interval.hi) return std::log(*at.to_hi);
    return std::log(std::abs(at.x - to_double(f.root)));
}

}  // namespace detail

inline double log_weight(const WeightExpr& w, const Abscissa& at) {
    double acc = std::log(to_double(w.constant));
    for (const auto& f : w.power_factors) acc += to_double(f.exponent) * detail::log_distance(w, f, at);
    if (w.quad_exponent) acc += to_double(*w.quad_exponent) * detail::log1p_square(at.x);
    if (!w.exp_poly.is_zero()) acc += w.exp_poly(at.x);
    if (w.arctan_coeff != 0) acc += to_double(w.arctan_coeff) * std::atan(at.x);
    return acc;
}

inline double evaluate(const WeightExpr& w, double x) { return std::exp(log_weight(w, Abscissa{x})); }

/// p'(x) / p(x)
inline double log_derivative(const WeightExpr& w, double x) {
    double acc = 0.0;
    for (const auto& f : w.power_factors) acc += to_double(f.exponent) / (x - to_double(f.root));
    const double q = 1.0 + x * x;
    if (w.quad_exponent) acc += 2.0 * to_double(*w.quad_exponent) * x / q;
    if (!w.exp_poly.is_zero()) acc += derive(w.exp_poly)(x);
    if (w.arctan_coeff != 0) acc += to_double(w.arctan_coeff) / q;
    return acc;
}

/// `count` points spread over the interior of I; infinite ends are reached through tan.
inline std::vector<double> interior_samples(const Interval& I, int count) {
    std::vector<double> xs;
    xs.reserve(count);
    constexpr double half_pi = std::numbers::pi / 2;
    for (int i = 0; i < count; ++i) {
        const double u = (i + 0.5) / count;
        if (I.is_finite()) {
            const double lo = to_double(*I.lo), hi = to_double(*I.hi);
            xs.push_back(lo + (hi - lo) * u);
        } else if (I.lo) {
            xs.push_back(to_double(*I.lo) + std::tan(half_pi * u));
        } else if (I.hi) {
            xs.push_back(to_double(*I.hi) - std::tan(half_pi * u));
        } else {
            xs.push_back(std::tan(std::numbers::pi * u - half_pi));
        }
    }
    return xs;
}

// ---------------------------------------------------------------------------
// Pearson identity

struct PearsonVerdict {
    bool symbolic_pass = false;
    bool numeric_pass = false;
    double max_residual = 0.0;  ///< largest scaled |(pa)' - pb| over the samples
    std::vector<double> sample_points;
    std::vector<double> residuals;

    bool pass() const noexcept { return symbolic_pass && numeric_pass; }
};

inline constexpr double kPearsonTolerance = 1e-10;
inline constexpr int kPearsonSamples = 20;

/**
 * Checks (p a)' = p b two ways. Symbolically, (p a)'/p - b = a' + a p'/p - b is multiplied by
 * the common denominator of p'/p and must reduce to the zero polynomial. Numerically, the
 * scaled residual |(p a)' - p b| / (1 + |p a'| + |p a p'/p| + |p b|) must stay below 1e-10 at
 * interior sample points.
 */
inline PearsonVerdict pearson_check(const WeightExpr& w, const Poly& a, const Poly& b) {
    PearsonVerdict v;

    const bool has_quad = (w.quad_exponent && *w.quad_exponent != 0) || w.arctan_coeff != 0;
    const Poly x2p1{1, 0, 1};
    Poly denom = Poly::constant(1);
    for (const auto& f : w.power_factors) denom *= Poly::linear_factor(f.root);
    if (has_quad) denom *= x2p1;

    Poly log_deriv_num;  // denom * p'/p
    for (std::size_t i = 0; i < w.power_factors.size(); ++i) {
        Poly others = Poly::constant(w.power_factors[i].exponent);
        for (std::size_t j = 0; j < w.power_factors.size(); ++j)
            if (j != i) others *= Poly::linear_factor(w.power_factors[j].root);
        if (has_quad) others *= x2p1;
        log_deriv_num += others;
    }
    if (has_quad) {
        Poly rest = Poly::constant(1);
        for (const auto& f : w.power_factors) rest *= Poly::linear_factor(f.root);
        const Rational q = w.quad_exponent.value_or(0);
        log_deriv_num += Poly{w.arctan_coeff, 2 * q} * rest;
    }
    log_deriv_num += derive(w.exp_poly) * denom;

    const Poly numerator = denom * (derive(a) - b) + a * log_deriv_num;
    v.symbolic_pass = numerator.is_zero();

    v.numeric_pass = true;
    const Poly da = derive(a);
    for (double x : interior_samples(w.interval, kPearsonSamples)) {
        const double p = evaluate(w, x);
        const double term_da = p * da(x);
        const double term_dp = p * a(x) * log_derivative(w, x);
        const double term_b = p * b(x);
        const double scale = 1.0 + std::abs(term_da) + std::abs(term_dp) + std::abs(term_b);
        const double r = std::abs(term_da + term_dp - term_b) / scale;
        v.sample_points.push_back(x);
        v.residuals.push_back(r);
        v.max_residual = std::max(v.max_residual, r);
        if (!(r <= kPearsonTolerance)) v.numeric_pass = false;
    }
    return v;
}

// ---------------------------------------------------------------------------
// Integrability and boundary terms

struct EndpointVerdict {
    bool ok = false;
    std::string detail;
};

struct IntegrabilityVerdict {
    EndpointVerdict lo;
    EndpointVerdict hi;
    EndpointVerdict interior{true, "no interior singularity"};
    bool integrable() const noexcept { return lo.ok && hi.ok && interior.ok; }
};

namespace detail {

/// Sign of E(x) as x -> +inf (end = +1) or -inf (end = -1); zero for constant E.
inline int exp_poly_growth(const Poly& e, int end) {
    const auto d = e.degree();
    if (!d || *d == 0) return 0;
    int s = e.leading() > 0 ? 1 : -1;
    if (end < 0 && (*d % 2 == 1)) s = -s;
    return s;
}

/// Power-law exponent of p at infinity (ignoring exp/arctan factors).
inline Rational power_exponent_at_infinity(const WeightExpr& w) {
    Rational e = 0;
    for (const auto& f : w.power_factors) e += f.exponent;
    if (w.quad_exponent) e += 2 * *w.quad_exponent;
    return e;
}

/// `extra` maps a point to additional zero multiplicity contributed by the integrand.
template <class Extra>
EndpointVerdict finite_end(const WeightExpr& w, const Rational& r, Extra extra, const Rational& threshold,
                           const char* what) {
    const Rational e = w.exponent_at(r) + Rational(static_cast<long long>(extra(r)));
    EndpointVerdict v;
    v.ok = e > threshold;
    v.detail = std::string(what) + " exponent " + to_string(e) + " at " + to_string(r) + (v.ok ? " > " : " <= ") +
               to_string(threshold);
    return v;
}

inline EndpointVerdict infinite_end(const WeightExpr& w, int end, const Rational& extra_degree,
                                    const Rational& bound, const char* what) {
    EndpointVerdict v;
    const char* name = end > 0 ? "+inf" : "-inf";
    if (int g = exp_poly_growth(w.exp_poly, end); g != 0) {
        v.ok = g < 0;
        v.detail = std::string("exponential factor ") + (v.ok ? "decays" : "grows") + " at " + name;
        return v;
    }
    const Rational total = power_exponent_at_infinity(w) + extra_degree;
    v.ok = total < bound;
    v.detail = std::string(what) + " power " + to_string(total) + " at " + name + (v.ok ? " < " : " >= ") +
               to_string(bound);
    return v;
}

template <class Extra>
IntegrabilityVerdict integrability_impl(const WeightExpr& w, const Interval& I, const Rational& degree,
                                        Extra extra) {
    IntegrabilityVerdict v;
    v.lo = I.lo ? finite_end(w, *I.lo, extra, -1, "weight") : infinite_end(w, -1, degree, -1, "integrand");
    v.hi = I.hi ? finite_end(w, *I.hi, extra, -1, "weight") : infinite_end(w, +1, degree, -1, "integrand");
    for (const auto& f : w.power_factors) {
        if (I.contains_interior(f.root)) {
            auto inner = finite_end(w, f.root, extra, -1, "interior weight");
            if (!inner.ok) v.interior = inner;
        }
    }
    return v;
}

}  // namespace detail

/**
 * Integrability of p times a generic polynomial of degree N on I.
 *
 * Finite ends: |x - r|^e is integrable at r iff e > -1. Infinite ends: a decaying exponential
 * factor wins outright; otherwise N plus the power exponent at infinity must be < -1 (the
 * arctan factor is bounded). For Romanovski weights this is N + gamma + 1 < 0.
 */
inline IntegrabilityVerdict integrability(const WeightExpr& w, const Interval& I, std::size_t total_degree) {
    return detail::integrability_impl(w, I, Rational(static_cast<long long>(total_degree)),
                                      [](const Rational&) { return std::size_t{0}; });
}

inline IntegrabilityVerdict integrability(const WeightExpr& w, std::size_t total_degree) {
    return integrability(w, w.interval, total_degree);
}

/// Same test for p * integrand exactly: zeros of the integrand at finite singular points are
/// credited against the weight exponent there.
inline IntegrabilityVerdict integrability_of_product(const WeightExpr& w, const Interval& I, const Poly& integrand) {
    if (integrand.is_zero()) return {{true, "zero integrand"}, {true, "zero integrand"}};
    return detail::integrability_impl(w, I, Rational(static_cast<long long>(*integrand.degree())),
                                      [&](const Rational& r) { return root_multiplicity(integrand, r); });
}

struct BoundaryVerdict {
    EndpointVerdict lo;
    EndpointVerdict hi;
    bool vanishes() const noexcept { return lo.ok && hi.ok; }
};

/**
 * Whether p a (u v' - u' v) -> 0 at both ends of I for polynomials of degrees m and n.
 * Finite ends need a positive exponent of p a there; infinite ends need
 * deg(pa) + m + n - 1 < 0 in the power-law sense (m + n + gamma + 1 < 0 for Romanovski).
 */
inline BoundaryVerdict boundary_vanishing(const WeightExpr& w, const Poly& a, const Interval& I, std::size_t m,
                                          std::size_t n) {
    auto mult_a = [&](const Rational& r) { return root_multiplicity(a, r); };
    const Rational extra = Rational(static_cast<long long>(a.degree().value_or(0))) +
                           Rational(static_cast<long long>(m + n)) - 1;
    BoundaryVerdict v;
    v.lo = I.lo ? detail::finite_end(w, *I.lo, mult_a, 0, "p*a") : detail::infinite_end(w, -1, extra, 0, "boundary term");
    v.hi = I.hi ? detail::finite_end(w, *I.hi, mult_a, 0, "p*a") : detail::infinite_end(w, +1, extra, 0, "boundary term");
    return v;
}

/// Boundary test for concrete functions: zeros of u v' - u' v at the ends count as well,
/// which is what makes the operator self-adjoint on subspaces such as (1 - t) P_n.
inline BoundaryVerdict boundary_vanishing_for(const WeightExpr& w, const Poly& a, const Interval& I, const Poly& u,
                                              const Poly& v) {
    const Poly wronskian = u * derive(v) - derive(u) * v;
    BoundaryVerdict out;
    if (wronskian.is_zero()) {
        out.lo = out.hi = {true, "u v' - u' v vanishes identically"};
        return out;
    }
    auto mult = [&](const Rational& r) { return root_multiplicity(a, r) + root_multiplicity(wronskian, r); };
    const Rational extra = Rational(static_cast<long long>(a.degree().value_or(0) + *wronskian.degree()));
    out.lo = I.lo ? detail::finite_end(w, *I.lo, mult, 0, "boundary term")
                  : detail::infinite_end(w, -1, extra, 0, "boundary term");
    out.hi = I.hi ? detail::finite_end(w, *I.hi, mult, 0, "boundary term")
                  : detail::infinite_end(w, +1, extra, 0, "boundary term");
    return out;
}

}  // namespace specpoly

#endif
