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

#include "fermat/lines.hpp"

namespace fermat {

StandardLine make_line(int family, int64_t k, int64_t l, int64_t m) {
    if (family < 1 || family > 3) fail(ErrorCode::bad_input, "make_line: family must be 1, 2 or 3");
    if (m < 1) fail(ErrorCode::bad_input, "make_line: m >= 1 required");
    StandardLine s;
    s.family = family;
    s.k = static_cast<int32_t>(((k % m) + m) % m);
    s.l = static_cast<int32_t>(((l % m) + m) % m);
    s.m = m;
    return s;
}

namespace {

inline bool cong(int64_t a, int64_t b, int64_t m) { return ((a - b) % m + m) % m == 0; }

}  // namespace

int64_t line_pairing(const StandardLine& x, const StandardLine& y) {
    if (x.m != y.m) fail(ErrorCode::degree_mismatch, "line_pairing: lines on different surfaces");
    const int64_t m = x.m;
    const StandardLine& a = x.family <= y.family ? x : y;
    const StandardLine& b = x.family <= y.family ? y : x;
    if (a.family == b.family) {
        if (a.k == b.k && a.l == b.l) return 2 - m;
        return (a.k == b.k || a.l == b.l) ? 1 : 0;
    }
    // omega^2 = 1 for odd m; for even m we take gamma = omega^2, so the
    // twist in the (1,3) case shifts the exponent by one
    int64_t twist = (m % 2 == 0) ? 1 : 0;
    if (a.family == 1 && b.family == 2) return cong(a.k + b.l, b.k + a.l, m) ? 1 : 0;
    if (a.family == 1 && b.family == 3) return cong(b.k, a.k + a.l + b.l + twist, m) ? 1 : 0;
    /* (2,3) */ return cong(a.k + a.l, b.k + b.l, m) ? 1 : 0;
}

int64_t line_pairing_with_h(const StandardLine&) { return 1; }

int64_t h_self_pairing(int64_t m) { return m; }

std::vector<StandardLine> rational_basis(int64_t m) {
    std::vector<StandardLine> basis;
    if (m >= 5 && m % 2 == 1) {
        for (int family = 1; family <= 3; ++family)
            for (int64_t k = 0; k < m - 1; ++k)
                for (int64_t l = 1; l < m - 1; ++l) basis.push_back(make_line(family, k, l, m));
        basis.push_back(make_line(1, m - 1, 1, m));
        return basis;
    }
    if (m == 4) {
        // the shift l -> l-1 of the odd-degree pattern, plus l_2(0, m-2)
        for (int family = 1; family <= 3; ++family)
            for (int64_t k = 0; k < m - 1; ++k)
                for (int64_t l = 0; l < m - 2; ++l) basis.push_back(make_line(family, k, l, m));
        basis.push_back(make_line(1, m - 1, 0, m));
        basis.push_back(make_line(2, 0, m - 2, m));
        return basis;
    }
    fail(ErrorCode::unsupported_degree, "rational_basis: degree must be odd >= 5 or 4");
}

std::vector<StandardLine> all_lines(int64_t m) {
    std::vector<StandardLine> lines;
    lines.reserve(3 * m * m);
    for (int family = 1; family <= 3; ++family)
        for (int64_t k = 0; k < m; ++k)
            for (int64_t l = 0; l < m; ++l) lines.push_back(make_line(family, k, l, m));
    return lines;
}

IntMatrix gram_matrix(const std::vector<StandardLine>& lines, int64_t m) {
    for (const auto& s : lines)
        if (s.m != m) fail(ErrorCode::degree_mismatch, "gram_matrix: line on a different surface");
    IntMatrix g(lines.size(), lines.size());
    for (size_t i = 0; i < lines.size(); ++i) {
        g.at(i, i) = 2 - m;
        for (size_t j = i + 1; j < lines.size(); ++j) {
            int64_t v = line_pairing(lines[i], lines[j]);
            g.at(i, j) = v;
            g.at(j, i) = v;
        }
    }
    return g;
}

FormalDivisor eigendivisor(int family, const Character& alpha, int64_t m) {
    if (family < 1 || family > 3) fail(ErrorCode::bad_input, "eigendivisor: family must be 1, 2 or 3");
    if (!in_a_set(alpha, m) || !decomposable(alpha, m, family))
        fail(ErrorCode::not_decomposable_for_family, "eigendivisor: alpha not in D_m^j for this family");
    Cyclotomic cyc(m);
    FormalDivisor w;
    w.m = m;
    w.h_coeff = cyc.zero();
    // exponent pattern per family: w_1 uses (a1, a3), w_2 uses (a2, a3),
    // w_3 uses (a3, a2)
    int64_t ek, el;
    switch (family) {
        case 1: ek = alpha.a[1], el = alpha.a[3]; break;
        case 2: ek = alpha.a[2], el = alpha.a[3]; break;
        default: ek = alpha.a[3], el = alpha.a[2]; break;
    }
    for (int64_t k = 0; k < m; ++k)
        for (int64_t l = 0; l < m; ++l)
            w.coeffs[make_line(family, k, l, m)] = cyc.root_power(ek * k + el * l);
    return w;
}

std::vector<int64_t> eigendivisor_pairing(const FormalDivisor& u, const FormalDivisor& v, int64_t m) {
    if (u.m != m || v.m != m) fail(ErrorCode::degree_mismatch, "eigendivisor_pairing: degree mismatch");
    Cyclotomic cyc(m);
    std::vector<int64_t> acc = cyc.zero();
    // H.H and H.line contributions
    if (!cyc.is_zero(u.h_coeff) || !cyc.is_zero(v.h_coeff)) {
        acc = cyc.add(acc, cyc.scale(cyc.mul(u.h_coeff, v.h_coeff), h_self_pairing(m)));
        for (const auto& [line, c] : v.coeffs) acc = cyc.add(acc, cyc.mul(u.h_coeff, c));
        for (const auto& [line, c] : u.coeffs) acc = cyc.add(acc, cyc.mul(c, v.h_coeff));
    }
    for (const auto& [lu, cu] : u.coeffs)
        for (const auto& [lv, cv] : v.coeffs) {
            int64_t p = line_pairing(lu, lv);
            if (p != 0) acc = cyc.add(acc, cyc.scale(cyc.mul(cu, cv), p));
        }
    return acc;
}

BlockDeterminants relation_block_determinants(int64_t m, int64_t r) {
    if (m < 2) fail(ErrorCode::bad_input, "relation_block_determinants: m >= 2 required");
    if (r < 1 || r > m) fail(ErrorCode::bad_input, "relation_block_determinants: 1 <= r <= m required");
    size_t n = static_cast<size_t>(m);
    size_t row = static_cast<size_t>(r - 1);
    // D shifts indices up by one cyclically, B = D^t = D^{-1}
    IntMatrix bu(n, n), du(n, n), mix(n, n);
    for (size_t i = 0; i < n; ++i) {
        size_t up = (i + 1) % n, down = (i + n - 1) % n;
        du.at(i, up) += 1;
        bu.at(i, down) += 1;
        du.at(i, i) -= 1;
        bu.at(i, i) -= 1;
        mix.at(i, i) += 2;
        mix.at(i, up) -= 1;
        mix.at(i, down) -= 1;
    }
    for (size_t j = 0; j < n; ++j) {
        bu.at(row, j) += 1;
        du.at(row, j) += 1;
        mix.at(1 % n, j) += 1;  // U(2)
    }
    return BlockDeterminants{det_exact(bu), det_exact(du), det_exact(mix)};
}

}  // namespace fermat
