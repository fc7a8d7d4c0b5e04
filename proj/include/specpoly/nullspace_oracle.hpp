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

#ifndef SPECPOLY_NULLSPACE_ORACLE_HPP
#define SPECPOLY_NULLSPACE_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "matrix.hpp"
#include "operator.hpp"

namespace specpoly {

/// Reduced row echelon form (Gauss-Jordan) over Q. Makes no use of triangular structure.
inline Matrix rref(Matrix a, std::vector<std::size_t>* pivots = nullptr) {
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        std::size_t p = lead;
        while (p < a.rows() && a(p, col) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(lead, p);
        const Rational inv = 1 / a(lead, col);
        for (std::size_t j = 0; j < a.cols(); ++j) a(lead, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == lead || a(i, col) == 0) continue;
            const Rational f = a(i, col);
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(lead, j);
        }
        if (pivots) pivots->push_back(col);
        ++lead;
    }
    return a;
}

/// Null space of (M - mu I) read off the RREF; an independent check on eigenspace_basis.
inline std::vector<std::vector<Rational>> nullspace_oracle(const Matrix& m, const Rational& mu) {
    Matrix a = m;
    for (std::size_t i = 0; i < a.rows() && i < a.cols(); ++i) a(i, i) -= mu;
    std::vector<std::size_t> pivots;
    const Matrix r = rref(std::move(a), &pivots);

    std::vector<bool> is_pivot(r.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < r.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(r.cols());
        v[free] = 1;
        for (std::size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = -r(row, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::vector<std::vector<Rational>> nullspace_oracle(const OperatorMatrix& m, const Rational& mu) {
    return nullspace_oracle(m.entries, mu);
}

/// True when the two families of vectors span the same subspace (mutual membership by rank).
inline bool same_span(const std::vector<std::vector<Rational>>& a, const std::vector<std::vector<Rational>>& b,
                      std::size_t dim) {
    auto stack = [dim](const std::vector<const std::vector<Rational>*>& vs) {
        Matrix m(vs.size(), dim);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = 0; j < dim; ++j) m(i, j) = j < vs[i]->size() ? (*vs[i])[j] : Rational(0);
        return m;
    };
    std::vector<const std::vector<Rational>*> pa, pb, pab;
    for (auto& v : a) pa.push_back(&v), pab.push_back(&v);
    for (auto& v : b) pb.push_back(&v), pab.push_back(&v);
    const std::size_t ra = rank(stack(pa)), rb = rank(stack(pb)), rab = rank(stack(pab));
    return ra == rab && rb == rab;
}

}  // namespace specpoly

#endif
