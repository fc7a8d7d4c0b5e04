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

// Walks through the library on the Romanovski operator (1 + x^2) y'' + (-13/2 x + 1) y':
// eigenfunctions, weight, and which pairs are orthogonal.

#include <iostream>

#include <specpoly/specpoly.hpp>

int main() {
    using namespace specpoly;

    const FamilySpec spec = FamilySpec::romanovski(Rational(-13, 2), 1);
    const DiffOperator op = build_operator(spec);

    for (const auto& r : eigentable(op, 4))
        std::cout << "P_" << r.degree << " = " << to_string(*r.monic) << "   (L P = " << to_string(r.eigenvalue)
                  << " P)\n";

    const WeightExpr w = derive_weight(op);
    std::cout << "\nweight: " << to_string(w) << '\n';
    std::cout << "pearson check: " << (pearson_check(w, op.coeff(2), op.coeff(1)).pass() ? "pass" : "fail") << "\n\n";

    const auto report = finite_orthogonality_report(spec.alpha, spec.beta, 4);
    for (const auto& p : report.pairs) {
        std::cout << "<P_" << p.m << ", P_" << p.n << ">: " << to_string(p.verdict);
        if (p.relative) std::cout << "  (relative " << *p.relative << ")";
        std::cout << '\n';
    }
    return 0;
}
