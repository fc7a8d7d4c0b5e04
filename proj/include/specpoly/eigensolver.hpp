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

#ifndef SPECPOLY_EIGENSOLVER_HPP
#define SPECPOLY_EIGENSOLVER_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "matrix.hpp"
#include "operator.hpp"
#include "poly.hpp"

namespace specpoly {

enum class EigenStatus { UniqueMonic, Degenerate, NoDegreeNEigenfunction };

inline std::string_view to_string(EigenStatus s) {
    switch (s) {
        case EigenStatus::UniqueMonic: return "UniqueMonic";
        case EigenStatus::Degenerate: return "Degenerate";
        case EigenStatus::NoDegreeNEigenfunction: return "NoDegreeNEigenfunction";
    }
    return "?";
}

struct EigenResult {
    std::size_t degree = 0;
    Rational eigenvalue;  ///< eigenvalue of L itself: L v = eigenvalue * v
    EigenStatus status = EigenStatus::UniqueMonic;
    /// Monic eigenfunction of exact degree `degree`; canonical representative when Degenerate.
    std::optional<Poly> monic;
    std::size_t eigenspace_dim = 0;
    std::vector<Poly> basis;

    /// Sign convention of L(y) + lambda y = 0.
    Rational lambda_ode() const { return -eigenvalue; }
};

namespace detail {

/// Kernel of an arbitrary square matrix: forward elimination to row echelon form, then one
/// back-solve per free column. Each returned vector has a 1 in its free column and zeros in
/// the other free columns.
inline std::vector<std::vector<Rational>> echelon_kernel(Matrix a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && a(p, col) == 0) ++p;
        if (p == rows) continue;
        a.swap_rows(r, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a(i, col) == 0) continue;
            const Rational f = a(i, col) / a(r, col);
            for (std::size_t j = col; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        pivot_cols.push_back(col);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> kernel;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t pr = pivot_cols.size(); pr-- > 0;) {
            const std::size_t pc = pivot_cols[pr];
            Rational acc = 0;
            for (std::size_t j = pc + 1; j < cols; ++j) acc += a(pr, j) * v[j];
            v[pc] = -acc / a(pr, pc);
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace detail

/// Basis of ker(M - mu I) inside P_n, ordered by degree; each vector is monic in its degree.
/// Empty when mu is not an eigenvalue on P_n.
inline std::vector<Poly> eigenspace_basis(const DiffOperator& op, const Rational& mu, std::size_t n) {
    Matrix a = matrix_on_pn(op, n).entries;
    for (std::size_t i = 0; i <= n; ++i) a(i, i) -= mu;
    std::vector<Poly> basis;
    for (auto& v : detail::echelon_kernel(std::move(a))) basis.emplace_back(std::move(v));
    return basis;
}

/**
 * Degree-n eigenfunction by back-substitution on the triangular operator matrix.
 *
 * c_n = 1 and (M[i][i] - mu_n) c_i = -sum_{j>i} M[i][j] c_j for i = n-1..0. A vanishing
 * diagonal with a vanishing right-hand side is a free coordinate (set to 0); with a nonzero
 * right-hand side there is no eigenfunction of exact degree n.
 */
inline EigenResult monic_eigenfunction(const DiffOperator& op, std::size_t n) {
    const OperatorMatrix m = matrix_on_pn(op, n);
    EigenResult res;
    res.degree = n;
    res.eigenvalue = m(n, n);

    std::vector<Rational> c(n + 1);
    c[n] = 1;
    bool degenerate = false;
    bool blocked = false;
    for (std::size_t i = n; i-- > 0;) {
        Rational rhs = 0;
        for (std::size_t j = i + 1; j <= n; ++j)
            if (c[j] != 0) rhs -= m(i, j) * c[j];
        const Rational d = m(i, i) - res.eigenvalue;
        if (d != 0) {
            c[i] = rhs / d;
        } else if (rhs == 0) {
            c[i] = 0;
            degenerate = true;
        } else {
            blocked = true;
            break;
        }
    }

    res.basis = eigenspace_basis(op, res.eigenvalue, n);
    res.eigenspace_dim = res.basis.size();
    if (blocked) {
        res.status = EigenStatus::NoDegreeNEigenfunction;
    } else {
        res.monic = Poly(std::move(c));
        res.status = degenerate ? EigenStatus::Degenerate : EigenStatus::UniqueMonic;
    }
    return res;
}

inline std::vector<EigenResult> eigentable(const DiffOperator& op, std::size_t n_max) {
    std::vector<EigenResult> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) out.push_back(monic_eigenfunction(op, n));
    return out;
}

}  // namespace specpoly

#endif
