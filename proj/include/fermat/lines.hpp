/* Copyright 2026 The fermat-lines Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef FERMAT_LINES_HPP
#define FERMAT_LINES_HPP

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "fermat/characters.hpp"
#include "fermat/cyclotomic.hpp"
#include "fermat/linalg.hpp"

namespace fermat {

// One of the 3m^2 lines on the degree-m Fermat surface, indexed by a family
// and the exponents (k, l) of the roots of unity (zeta, eta) = (gamma^k,
// gamma^l). Roots of unity never appear as values here: omega = -1 for odd
// m, while for even m the pairing rules run base 2m with gamma = omega^2.
struct StandardLine {
    int family = 1;  // 1, 2 or 3
    int32_t k = 0;
    int32_t l = 0;
    int64_t m = 0;

    auto key() const { return std::tuple(family, k, l, m); }
    bool operator==(const StandardLine&) const = default;
    bool operator<(const StandardLine& o) const { return key() < o.key(); }
};

StandardLine make_line(int family, int64_t k, int64_t l, int64_t m);

// Formal Z[zeta_m]-combination of lines and the hyperplane class.
struct FormalDivisor {
    int64_t m = 0;
    std::vector<int64_t> h_coeff;                          // cyclotomic coefficient of H
    std::map<StandardLine, std::vector<int64_t>> coeffs;   // line -> cyclotomic coefficient
};

// Intersection number of two standard lines on the same surface.
int64_t line_pairing(const StandardLine& x, const StandardLine& y);
int64_t line_pairing_with_h(const StandardLine& x);  // always 1
int64_t h_self_pairing(int64_t m);                   // H.H = m

// The basis of NS tensor Q from the lines: for odd m >= 5 the set
// {l_j(k,l) : j in {1,2,3}, 0 <= k < m-1, 0 < l < m-1} plus l_1(m-1, 1);
// for m = 4 the shifted variant ending with l_2(0, 2).
std::vector<StandardLine> rational_basis(int64_t m);

// All 3m^2 lines, family-major then k then l.
std::vector<StandardLine> all_lines(int64_t m);

IntMatrix gram_matrix(const std::vector<StandardLine>& lines, int64_t m);

// The eigendivisor w_j(alpha) for alpha in D_m^j: an m^2-term sum with root
// of unity coefficients determined by the family.
FormalDivisor eigendivisor(int family, const Character& alpha, int64_t m);

// Bilinear extension of the line pairing with cyclotomic coefficient
// multiplication, reduced mod Phi_m.
std::vector<int64_t> eigendivisor_pairing(const FormalDivisor& u, const FormalDivisor& v, int64_t m);

// Determinants of the modified relation-matrix blocks: B - I + U(r),
// D - I + U(r) and 2I - B - D + U(2), with U(r) all-ones in row r (1-based).
struct BlockDeterminants {
    Bint det_bu;
    Bint det_du;
    Bint det_mix;
};
BlockDeterminants relation_block_determinants(int64_t m, int64_t r);

}  // namespace fermat

#endif  // FERMAT_LINES_HPP
