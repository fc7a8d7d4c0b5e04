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

#ifndef SPECPOLY_POLY_HPP
#define SPECPOLY_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace specpoly {

/**
 * Dense univariate polynomial with exact rational coefficients.
 *
 * Coefficients are stored in ascending degree order and trailing zeros are
 * stripped on every construction, so the zero polynomial is the empty
 * sequence and `degree()` reports it as `std::nullopt`.
 */
class Poly {
   public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

    static Poly constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

    static Poly monomial(std::size_t k, const Rational& c = 1) {
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return Poly(std::move(v));
    }

    /// x - root
    static Poly linear_factor(const Rational& root) { return Poly{Rational(-root), Rational(1)}; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    /// Coefficient of x^k; zero beyond the degree.
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    double operator()(double x) const {
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
        return acc;
    }

    Poly operator-() const {
        std::vector<Rational> v(coeffs_);
        for (auto& c : v) c = -c;
        return Poly(std::move(v));
    }

    friend Poly operator+(const Poly& p, const Poly& q) {
        std::vector<Rational> v(std::max(p.coeffs_.size(), q.coeffs_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.coeff(i) + q.coeff(i);
        return Poly(std::move(v));
    }

    friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

    friend Poly operator*(const Poly& p, const Poly& q) {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<Rational> v(p.coeffs_.size() + q.coeffs_.size() - 1);
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
            if (p.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < q.coeffs_.size(); ++j) v[i + j] += p.coeffs_[i] * q.coeffs_[j];
        }
        return Poly(std::move(v));
    }

    friend Poly operator*(const Rational& c, const Poly& p) {
        if (c == 0) return {};
        std::vector<Rational> v(p.coeffs_);
        for (auto& x : v) x *= c;
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& p, const Rational& c) { return c * p; }

    Poly& operator+=(const Poly& q) { return *this = *this + q; }
    Poly& operator-=(const Poly& q) { return *this = *this - q; }
    Poly& operator*=(const Poly& q) { return *this = *this * q; }

    friend bool operator==(const Poly&, const Poly&) = default;

   private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// Exact k-th derivative; `derive(p, 0) == p`.
inline Poly derive(const Poly& p, std::size_t k = 1) {
    const auto& c = p.coeffs();
    if (k == 0) return p;
    if (c.size() <= k) return {};
    std::vector<Rational> v(c.size() - k);
    for (std::size_t j = k; j < c.size(); ++j) {
        Integer ff = 1;
        for (std::size_t i = 0; i < k; ++i) ff *= static_cast<unsigned long long>(j - i);
        v[j - k] = c[j] * Rational(ff);
    }
    return Poly(std::move(v));
}

/// Antiderivative with zero constant term.
inline Poly antiderivative(const Poly& p) {
    const auto& c = p.coeffs();
    std::vector<Rational> v(c.size() + 1);
    for (std::size_t j = 0; j < c.size(); ++j) v[j + 1] = c[j] / Rational(static_cast<long long>(j + 1));
    return Poly(std::move(v));
}

/// Returns q with q(u) = p(s*u + t). Rejects s = 0.
inline Poly affine_substitute(const Poly& p, const Rational& s, const Rational& t) {
    if (s == 0) throw InvalidArgument("affine substitution needs a nonzero scale");
    const Poly inner{t, s};
    Poly acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + Poly::constant(*it);
    return acc;
}

inline Rational definite_integral(const Poly& p, const Rational& lo, const Rational& hi) {
    if (lo > hi) throw InvalidArgument("integration bounds out of order: " + to_string(lo) + " > " + to_string(hi));
    const Poly anti = antiderivative(p);
    return anti(hi) - anti(lo);
}

/// Synthetic division by (x - root). The caller must know p(root) == 0; otherwise
/// NonzeroRemainder carries the value p(root).
inline Poly divide_linear(const Poly& p, const Rational& root) {
    const auto& c = p.coeffs();
    if (c.empty()) return {};
    std::vector<Rational> q(c.size() - 1);
    Rational carry = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        carry = carry * root + c[i];
        if (i > 0) q[i - 1] = carry;
    }
    if (carry != 0) throw NonzeroRemainder(to_string(root), to_string(carry));
    return Poly(std::move(q));
}

/// Multiplicity of `root` as a zero of p; the zero polynomial has none by convention.
inline std::size_t root_multiplicity(const Poly& p, const Rational& root) {
    std::size_t m = 0;
    Poly q = p;
    while (!q.is_zero() && q(root) == 0) {
        q = divide_linear(q, root);
        ++m;
    }
    return m;
}

inline Poly pow(const Poly& p, std::size_t k) {
    Poly acc = Poly::constant(1);
    for (std::size_t i = 0; i < k; ++i) acc *= p;
    return acc;
}

/// Human-readable form, highest degree first: "x^2 - 1/3".
inline std::string to_string(const Poly& p, const std::string& var = "x") {
    const auto& c = p.coeffs();
    if (c.empty()) return "0";
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        const Rational& a = c[i];
        if (a == 0) continue;
        const bool negative = a < 0;
        const Rational mag = negative ? Rational(-a) : a;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const bool unit = mag == 1 && i > 0;
        if (!unit) out += to_string(mag);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace specpoly

#endif
