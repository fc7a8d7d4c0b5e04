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

#ifndef SPECPOLY_OPERATOR_HPP
#define SPECPOLY_OPERATOR_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace specpoly {

/**
 * Linear differential operator L(y) = sum_k a_k(x) y^(k) with deg(a_k) <= k.
 *
 * The degree bound is what makes L map P_n into itself; it is enforced at
 * construction, so every DiffOperator in circulation satisfies it.
 */
class DiffOperator {
   public:
    /// Validates coefficients a_0..a_N. Trailing zero coefficients are dropped.
    explicit DiffOperator(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
        if (coeffs_.empty()) throw EmptyOperator();
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            auto d = coeffs_[k].degree();
            if (d && *d > k) throw DegreeViolation(k, *d);
        }
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Poly>& coeffs() const noexcept { return coeffs_; }
    const Poly& coeff(std::size_t k) const {
        static const Poly zero;
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }

    friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

   private:
    std::vector<Poly> coeffs_;
};

inline DiffOperator validate_operator(std::vector<Poly> coeffs) { return DiffOperator(std::move(coeffs)); }

/// j(j-1)...(j-k+1); 1 for k = 0 and 0 for k > j.
inline Integer falling_factorial(std::uint64_t j, std::uint64_t k) {
    if (k > j) return 0;
    Integer acc = 1;
    for (std::uint64_t i = 0; i < k; ++i) acc *= j - i;
    return acc;
}

inline Poly apply(const DiffOperator& op, const Poly& p) {
    Poly acc;
    for (std::size_t k = 0; k <= op.order(); ++k) {
        const Poly& a = op.coeff(k);
        if (a.is_zero()) continue;
        acc += a * derive(p, k);
    }
    return acc;
}

/// Column j holds the monomial coefficients of L(x^j); upper triangular by the degree bound.
struct OperatorMatrix {
    std::size_t n = 0;
    Matrix entries;

    const Rational& operator()(std::size_t i, std::size_t j) const { return entries(i, j); }
};

inline OperatorMatrix matrix_on_pn(const DiffOperator& op, std::size_t n) {
    OperatorMatrix m{n, Matrix(n + 1, n + 1)};
    for (std::size_t j = 0; j <= n; ++j) {
        const Poly col = apply(op, Poly::monomial(j));
        for (std::size_t i = 0; i < col.coeffs().size(); ++i) m.entries(i, j) = col.coeff(i);
    }
    return m;
}

/// mu_j = sum_k lead(a_k) * ff(j, k), where lead(a_k) is the x^k coefficient of a_k.
inline Rational spectrum_value(const DiffOperator& op, std::size_t j) {
    Rational mu = 0;
    for (std::size_t k = 0; k <= op.order() && k <= j; ++k)
        mu += op.coeff(k).coeff(k) * Rational(falling_factorial(j, k));
    return mu;
}

struct Spectrum {
    std::vector<Rational> values;
    /// distinct value -> degrees attaining it, ascending
    std::map<Rational, std::vector<std::size_t>> multiplicity;

    bool distinct() const noexcept { return multiplicity.size() == values.size(); }

    /// Degrees whose eigenvalue is shared with at least one other degree.
    std::vector<std::size_t> colliding_degrees() const {
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < values.size(); ++j)
            if (multiplicity.at(values[j]).size() > 1) out.push_back(j);
        return out;
    }
};

inline Spectrum spectrum(const DiffOperator& op, std::size_t n) {
    Spectrum s;
    s.values.reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        s.values.push_back(spectrum_value(op, j));
        s.multiplicity[s.values.back()].push_back(j);
    }
    return s;
}

}  // namespace specpoly

#endif
