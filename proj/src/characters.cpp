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

#include "fermat/characters.hpp"

namespace fermat {

int64_t weight(const Character& alpha, int64_t m) {
    int64_t s = 0;
    for (int32_t ai : alpha.a) {
        int64_t v = ((ai % m) + m) % m;
        if (v == 0) fail(ErrorCode::zero_coordinate, "weight: character has a zero coordinate");
        s += v;
    }
    return s / m;  // always integral when sum(a_i) = 0 mod m
}

bool in_a_set(const Character& alpha, int64_t m) {
    int64_t s = 0;
    for (int32_t ai : alpha.a) {
        if (ai % m == 0) return false;
        s += ai;
    }
    return s % m == 0;
}

bool in_b_set(const Character& alpha, int64_t m) {
    if (!in_a_set(alpha, m)) return false;
    for (int64_t r = 1; r < m; ++r) {
        if (gcd_u64(static_cast<uint64_t>(r), static_cast<uint64_t>(m)) != 1) continue;
        if (weight(scale_character(alpha, r, m), m) != 2) return false;
    }
    return true;
}

bool decomposable(const Character& alpha, int64_t m, int family) {
    return (alpha.a[0] + alpha.a[family]) % m == 0;
}

Character negate_character(const Character& alpha, int64_t m) {
    Character out;
    for (int i = 0; i < 4; ++i) out.a[i] = static_cast<int32_t>(((m - alpha.a[i]) % m + m) % m);
    return out;
}

Character scale_character(const Character& alpha, int64_t r, int64_t m) {
    Character out;
    for (int i = 0; i < 4; ++i) out.a[i] = static_cast<int32_t>((static_cast<int64_t>(alpha.a[i]) * r % m + m) % m);
    return out;
}

CharacterSets character_sets(int64_t m) {
    if (m < 2) fail(ErrorCode::bad_input, "character_sets: m >= 2 required");
    CharacterSets out;
    for (int64_t a0 = 1; a0 < m; ++a0)
        for (int64_t a1 = 1; a1 < m; ++a1)
            for (int64_t a2 = 1; a2 < m; ++a2) {
                int64_t a3 = ((-(a0 + a1 + a2)) % m + m) % m;
                if (a3 == 0) continue;
                Character alpha{{static_cast<int32_t>(a0), static_cast<int32_t>(a1), static_cast<int32_t>(a2),
                                 static_cast<int32_t>(a3)}};
                out.A.push_back(alpha);
                // decomposable characters are automatically in B_m: the
                // representatives of x and -x sum to m in each paired slot
                bool dec = false;
                for (int j = 1; j <= 3; ++j) {
                    if (decomposable(alpha, m, j)) {
                        out.D_family[j - 1].push_back(alpha);
                        dec = true;
                    }
                }
                if (dec) {
                    out.D.push_back(alpha);
                    out.B.push_back(alpha);
                } else if (in_b_set(alpha, m)) {
                    out.B.push_back(alpha);
                }
            }
    return out;
}

SurfaceInvariants surface_invariants(int64_t m) {
    if (m < 1) fail(ErrorCode::bad_input, "surface_invariants: m >= 1 required");
    SurfaceInvariants s;
    s.m = m;
    s.b2 = m * m * m - 4 * m * m + 6 * m - 2;
    s.pg = m >= 4 ? (m - 1) * (m - 2) * (m - 3) / 6 : 0;
    s.chi = 1 + s.pg;
    s.ksq = m * (m - 4) * (m - 4);
    s.e = 12 * s.chi - s.ksq;
    s.h11 = s.b2 - 2 * s.pg;
    if (m >= 2) {
        CharacterSets cs = character_sets(m);
        s.count_a = static_cast<int64_t>(cs.A.size());
        s.count_b = static_cast<int64_t>(cs.B.size());
        s.count_d = static_cast<int64_t>(cs.D.size());
        s.rho = s.count_b + 1;
    } else {
        s.rho = 1;  // the plane
    }
    s.lambda = s.b2 - s.rho;
    return s;
}

bool rational_generation_test(int64_t m) {
    if (m < 2) return true;
    // D_m = B_m iff no indecomposable character passes the B_m weight test
    for (int64_t a0 = 1; a0 < m; ++a0)
        for (int64_t a1 = 1; a1 < m; ++a1)
            for (int64_t a2 = 1; a2 < m; ++a2) {
                int64_t a3 = ((-(a0 + a1 + a2)) % m + m) % m;
                if (a3 == 0) continue;
                if ((a0 + a1) % m == 0 || (a0 + a2) % m == 0 || (a0 + a3) % m == 0) continue;
                Character alpha{{static_cast<int32_t>(a0), static_cast<int32_t>(a1), static_cast<int32_t>(a2),
                                 static_cast<int32_t>(a3)}};
                if (in_b_set(alpha, m)) return false;
            }
    return true;
}

}  // namespace fermat
