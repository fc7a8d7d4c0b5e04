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

#ifndef SPECPOLY_SPECPOLY_HPP
#define SPECPOLY_SPECPOLY_HPP

#include "eigensolver.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "matrix.hpp"
#include "nullspace_oracle.hpp"
#include "operator.hpp"
#include "orthogonality.hpp"
#include "poly.hpp"
#include "quadrature.hpp"
#include "rational.hpp"
#include "weights.hpp"

#endif
