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

#ifndef SPECPOLY_ORTHOGONALITY_HPP
#define SPECPOLY_ORTHOGONALITY_HPP

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "eigensolver.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "quadrature.hpp"
#include "weights.hpp"

namespace specpoly {

inline constexpr double kDefaultTolerance = 1e-10;
/// Relative Gram magnitude below which a pair is reported orthogonal.
inline constexpr double kOrthogonalityThreshold = 1e-8;

/**
 * Exact <f, g> = int_I p f g when p f g is a polynomial on I.
 *
 * Needs a finite interval, no exponential / arctan / quadratic factor and integer power
 * exponents whose negative parts divide f g exactly. On I, |x - r| = sign * (x - r) with a
 * fixed sign because every root lies outside the interior.
 */
inline Rational inner_product_exact(const WeightExpr& w, const Poly& f, const Poly& g, const Interval& I) {
    if (!I.is_finite()) throw NotPolynomialReducible("interval is unbounded");
    if ((w.quad_exponent && *w.quad_exponent != 0) || !w.exp_poly.is_zero() || w.arctan_coeff != 0)
        throw NotPolynomialReducible("weight has a transcendental factor");

    Poly integrand = w.constant * (f * g);
    for (const auto& factor : w.power_factors) {
        if (factor.exponent == 0) continue;
        if (boost::multiprecision::denominator(factor.exponent) != 1)
            throw NotPolynomialReducible("non-integer exponent " + to_string(factor.exponent));
        if (I.contains_interior(factor.root))
            throw NotPolynomialReducible("weight root " + to_string(factor.root) + " inside the interval");
        const Rational sign = factor.root <= *I.lo ? 1 : -1;
        const long long e = boost::multiprecision::numerator(factor.exponent).convert_to<long long>();
        const Poly lin = Poly::linear_factor(factor.root);
        for (long long i = 0; i < std::llabs(e); ++i) {
            if (e > 0) {
                integrand = sign * (integrand * lin);
            } else {
                try {
                    integrand = sign * divide_linear(integrand, factor.root);
                } catch (const NonzeroRemainder&) {
                    throw NotPolynomialReducible("f g does not cancel |x - " + to_string(factor.root) + "|^(" +
                                                 to_string(factor.exponent) + ")");
                }
            }
        }
    }
    return definite_integral(integrand, *I.lo, *I.hi);
}

struct NumericInnerProduct {
    double value = 0.0;
    double error_estimate = 0.0;
    double abs_mass = 0.0;  ///< int_I p |f g|
    int levels = 0;
};

namespace detail {

/// log|q(x)| and its sign; large |x| goes through the reversed polynomial in 1/x.
struct SignedLog {
    double log_abs = -std::numeric_limits<double>::infinity();
    int sign = 0;
};

inline SignedLog signed_log(const std::vector<double>& c, double x) {
    SignedLog out;
    if (c.empty()) return out;
    double v = 0.0;
    double log_scale = 0.0;
    if (std::abs(x) <= 1.0) {
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    } else {
        const double s = 1.0 / x;
        for (double ci : c) v = v * s + ci;  // sum_i c_i s^(k - i)
        const std::size_t k = c.size() - 1;
        log_scale = static_cast<double>(k) * std::log(std::abs(x));
        if (k % 2 == 1 && x < 0) v = -v;
    }
    if (v == 0.0) return out;
    out.sign = v > 0 ? 1 : -1;
    out.log_abs = std::log(std::abs(v)) + log_scale;
    return out;
}

}  // namespace detail

/**
 * <f, g> by tanh-sinh quadrature.
 *
 * Finite intervals are mapped affinely onto (-1, 1). Unbounded ones go through x = tan u
 * (R), x = lo + tan u or x = hi - tan u (half-lines) first; for the Romanovski weight this
 * turns the integrand into (1 + tan^2 u)^(gamma/2 + 1) e^(beta u) f g (tan u) on a compact
 * interval. Everything is evaluated in log space so huge |x| near the ends cannot overflow.
 */
inline NumericInnerProduct inner_product_numeric(const WeightExpr& w, const Poly& f, const Poly& g,
                                                 const Interval& I, double tol = kDefaultTolerance,
                                                 int max_levels = kDefaultMaxLevels) {
    const Poly fg = f * g;
    if (auto verdict = integrability_of_product(w, I, fg); !verdict.integrable()) {
        const auto& bad = !verdict.lo.ok ? verdict.lo : !verdict.hi.ok ? verdict.hi : verdict.interior;
        throw NonIntegrable("p f g is not integrable: " + bad.detail);
    }
    if (fg.is_zero()) return {};

    std::vector<double> coeffs;
    for (const auto& c : fg.coeffs()) coeffs.push_back(to_double(c));

    auto integrand = [&](const Abscissa& at, double log_jacobian) {
        const auto q = detail::signed_log(coeffs, at.x);
        if (q.sign == 0) return 0.0;
        return q.sign * std::exp(log_weight(w, at) + q.log_abs + log_jacobian);
    };

    constexpr double half_pi = std::numbers::pi / 2;
    constexpr double quarter_pi = std::numbers::pi / 4;
    QuadratureResult r;
    if (I.is_finite()) {
        const double lo = to_double(*I.lo), hi = to_double(*I.hi);
        const double half = (hi - lo) / 2, mid = (hi + lo) / 2;
        const double log_jac = std::log(half);
        r = tanh_sinh(
            [&](double xi, double dl, double dr) {
                return integrand(Abscissa{mid + half * xi, half * dl, half * dr}, log_jac);
            },
            tol, max_levels);
    } else if (!I.lo && !I.hi) {
        r = tanh_sinh(
            [&](double xi, double dl, double dr) {
                double x;
                if (xi > 0.5)
                    x = 1.0 / std::tan(half_pi * dr);
                else if (xi < -0.5)
                    x = -1.0 / std::tan(half_pi * dl);
                else
                    x = std::tan(half_pi * xi);
                return integrand(Abscissa{x}, detail::log1p_square(x) + std::log(half_pi));
            },
            tol, max_levels);
    } else {
        const bool upward = I.lo.has_value();
        const double anchor = to_double(upward ? *I.lo : *I.hi);
        r = tanh_sinh(
            [&](double xi, double dl, double dr) {
                // u in (0, pi/2) with u = quarter_pi * dl and pi/2 - u = quarter_pi * dr
                const double y = xi > 0 ? 1.0 / std::tan(quarter_pi * dr) : std::tan(quarter_pi * dl);
                Abscissa at;
                if (upward) {
                    at.x = anchor + y;
                    at.to_lo = y;
                } else {
                    at.x = anchor - y;
                    at.to_hi = y;
                }
                return integrand(at, detail::log1p_square(y) + std::log(quarter_pi));
            },
            tol, max_levels);
    }
    return {r.value, r.error_estimate, r.abs_mass, r.levels};
}

// ---------------------------------------------------------------------------
// Gram matrices

enum class EntryMethod { Exact, Quadrature };

inline std::string_view to_string(EntryMethod m) { return m == EntryMethod::Exact ? "exact" : "quadrature"; }

struct GramEntry {
    std::size_t m = 0;
    std::size_t n = 0;
    EntryMethod method = EntryMethod::Exact;
    bool integrable = true;
    std::optional<Rational> exact;
    std::optional<double> numeric;
    double error_estimate = 0.0;
    std::optional<double> abs_mass;
    std::string note;

    bool has_value() const noexcept { return exact.has_value() || numeric.has_value(); }
    double value() const { return exact ? to_double(*exact) : numeric.value_or(0.0); }
};

/// Exact path first, quadrature when p f g does not reduce to a polynomial. A pair that is
/// not integrable comes back flagged and without a value.
inline GramEntry inner_product(const WeightExpr& w, const Poly& f, const Poly& g, const Interval& I,
                               double tol = kDefaultTolerance) {
    GramEntry e;
    try {
        e.exact = inner_product_exact(w, f, g, I);
        e.method = EntryMethod::Exact;
        return e;
    } catch (const NotPolynomialReducible& ex) {
        e.note = ex.what();
    }
    e.method = EntryMethod::Quadrature;
    try {
        const auto r = inner_product_numeric(w, f, g, I, tol);
        e.numeric = r.value;
        e.error_estimate = r.error_estimate;
        e.abs_mass = r.abs_mass;
    } catch (const NonIntegrable& ex) {
        e.integrable = false;
        e.note = ex.what();
    }
    return e;
}

struct ExcludedDegree {
    std::size_t degree = 0;
    std::string reason;
};

struct OrthoReport {
    std::optional<FamilySpec> family;
    std::size_t max_degree = 0;
    double tol = kDefaultTolerance;
    WeightExpr weight;
    std::vector<EigenResult> eigen;  ///< one per degree 0..max_degree
    std::vector<std::size_t> degrees;  ///< degrees whose eigenfunction enters the Gram matrix
    std::vector<ExcludedDegree> excluded;
    std::vector<GramEntry> entries;  ///< unordered pairs m <= n of `degrees`
    double off_diagonal_max_relative = 0.0;

    const GramEntry* entry(std::size_t m, std::size_t n) const {
        if (m > n) std::swap(m, n);
        for (const auto& e : entries)
            if (e.m == m && e.n == n) return &e;
        return nullptr;
    }

    /// |G_mn| / sqrt(G_mm G_nn); when a diagonal entry is not integrable the scale is
    /// int p |P_m P_n| instead, which is finite whenever G_mn is.
    std::optional<double> relative(std::size_t m, std::size_t n) const {
        const GramEntry* e = entry(m, n);
        if (!e || !e->has_value()) return std::nullopt;
        const double v = std::abs(e->value());
        const GramEntry* dm = entry(m, m);
        const GramEntry* dn = entry(n, n);
        if (dm && dn && dm->has_value() && dn->has_value() && dm->value() > 0 && dn->value() > 0)
            return v / std::sqrt(dm->value() * dn->value());
        if (v == 0.0) return 0.0;
        if (e->abs_mass && *e->abs_mass > 0) return v / *e->abs_mass;
        return std::nullopt;
    }
};

/**
 * Gram matrix of the monic eigenfunctions of a family on its weight interval.
 *
 * A degree enters only if its eigenfunction exists and P^2 is integrable at every finite
 * singular point of the weight; this restricts e.g. the t(1 - t) D^2 + (1 - t) D family to
 * multiples of (1 - t). Failures at infinite ends are per-entry flags instead, which is how
 * finite orthogonality shows up.
 */
inline OrthoReport gram_matrix(const DiffOperator& op, std::size_t n_max, double tol = kDefaultTolerance) {
    OrthoReport rep;
    rep.max_degree = n_max;
    rep.tol = tol;
    rep.weight = derive_weight(op);
    rep.eigen = eigentable(op, n_max);
    const Interval& I = rep.weight.interval;

    for (const auto& r : rep.eigen) {
        if (!r.monic) {
            rep.excluded.push_back({r.degree, "no eigenfunction of exact degree " + std::to_string(r.degree)});
            continue;
        }
        const auto v = integrability_of_product(rep.weight, I, *r.monic * *r.monic);
        const EndpointVerdict* bad = nullptr;
        if (I.lo && !v.lo.ok) bad = &v.lo;
        if (I.hi && !v.hi.ok) bad = &v.hi;
        if (!v.interior.ok) bad = &v.interior;
        if (bad) {
            rep.excluded.push_back({r.degree, "outside the admissible subspace: " + bad->detail});
            continue;
        }
        rep.degrees.push_back(r.degree);
    }

    for (std::size_t i = 0; i < rep.degrees.size(); ++i) {
        for (std::size_t j = i; j < rep.degrees.size(); ++j) {
            const std::size_t m = rep.degrees[i], n = rep.degrees[j];
            GramEntry e = inner_product(rep.weight, *rep.eigen[m].monic, *rep.eigen[n].monic, I, tol);
            e.m = m;
            e.n = n;
            rep.entries.push_back(std::move(e));
        }
    }

    for (auto& e : rep.entries) {
        if (e.m == e.n || !e.has_value()) continue;
        if (!e.abs_mass && e.exact && *e.exact != 0) {
            // Fallback scale for exact entries whose diagonal is missing.
            try {
                e.abs_mass = inner_product_numeric(rep.weight, *rep.eigen[e.m].monic, *rep.eigen[e.n].monic, I, tol)
                                 .abs_mass;
            } catch (const Error&) {
            }
        }
        if (auto rel = rep.relative(e.m, e.n))
            rep.off_diagonal_max_relative = std::max(rep.off_diagonal_max_relative, *rel);
    }
    return rep;
}

inline OrthoReport gram_matrix(const FamilySpec& spec, std::size_t n_max, double tol = kDefaultTolerance) {
    OrthoReport rep = gram_matrix(build_operator(spec), n_max, tol);
    rep.family = spec;
    return rep;
}

// ---------------------------------------------------------------------------
// Romanovski finite orthogonality

enum class PairVerdict { Orthogonal, NotOrthogonal, InconclusiveSameEigenvalue, NonIntegrable };

inline std::string_view to_string(PairVerdict v) {
    switch (v) {
        case PairVerdict::Orthogonal: return "orthogonal";
        case PairVerdict::NotOrthogonal: return "not_orthogonal";
        case PairVerdict::InconclusiveSameEigenvalue: return "inconclusive_same_eigenvalue";
        case PairVerdict::NonIntegrable: return "non_integrable";
    }
    return "?";
}

struct PairReport {
    std::size_t m = 0;
    std::size_t n = 0;
    PairVerdict verdict = PairVerdict::Orthogonal;
    std::optional<double> relative;
};

struct FiniteOrthogonalityReport {
    OrthoReport gram;
    Rational gamma;  ///< alpha - 2
    /// Pairs with m + n < -gamma - 1 are integrable.
    Rational integrable_degree_sum_bound;
    std::vector<std::size_t> colliding_degrees;  ///< eigenvalue shared with another degree <= n_max
    std::vector<PairReport> pairs;  ///< m < n
};

/// Orthogonality of P_m, P_n for (1 + x^2) D^2 + (alpha x + beta) D, pair by pair. Pairs with
/// equal eigenvalues are never asserted orthogonal: the self-adjointness argument needs
/// distinct eigenvalues.
inline FiniteOrthogonalityReport finite_orthogonality_report(const Rational& alpha, const Rational& beta,
                                                             std::size_t n_max, double tol = kDefaultTolerance) {
    FiniteOrthogonalityReport rep;
    const FamilySpec spec = FamilySpec::romanovski(alpha, beta);
    rep.gram = gram_matrix(spec, n_max, tol);
    rep.gamma = alpha - 2;
    rep.integrable_degree_sum_bound = -rep.gamma - 1;
    rep.colliding_degrees = spectrum(build_operator(spec), n_max).colliding_degrees();

    const auto& degs = rep.gram.degrees;
    for (std::size_t i = 0; i < degs.size(); ++i) {
        for (std::size_t j = i + 1; j < degs.size(); ++j) {
            PairReport p{degs[i], degs[j]};
            const GramEntry* e = rep.gram.entry(p.m, p.n);
            p.relative = rep.gram.relative(p.m, p.n);
            if (!e->integrable)
                p.verdict = PairVerdict::NonIntegrable;
            else if (rep.gram.eigen[p.m].eigenvalue == rep.gram.eigen[p.n].eigenvalue)
                p.verdict = PairVerdict::InconclusiveSameEigenvalue;
            else if (p.relative && *p.relative < kOrthogonalityThreshold)
                p.verdict = PairVerdict::Orthogonal;
            else
                p.verdict = PairVerdict::NotOrthogonal;
            rep.pairs.push_back(p);
        }
    }
    return rep;
}

}  // namespace specpoly

#endif
