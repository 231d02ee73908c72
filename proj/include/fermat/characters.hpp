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

#ifndef FERMAT_CHARACTERS_HPP
#define FERMAT_CHARACTERS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "fermat/numeric.hpp"

namespace fermat {

// A character of the mu_m^4/mu_m action: a 4-tuple of residues mod m summing
// to 0. Stored with canonical representatives in [0, m).
struct Character {
    std::array<int32_t, 4> a{};

    bool operator==(const Character&) const = default;
};

// Numerical invariants of the degree-m Fermat surface.
struct SurfaceInvariants {
    int64_t m = 0;
    int64_t b2 = 0;      // second Betti number
    int64_t pg = 0;      // geometric genus
    int64_t chi = 0;     // Euler characteristic of the structure sheaf
    int64_t e = 0;       // topological Euler number
    int64_t ksq = 0;     // self-intersection of the canonical divisor
    int64_t h11 = 0;
    int64_t rho = 0;     // Picard number
    int64_t lambda = 0;  // b2 - rho
    int64_t count_a = 0;
    int64_t count_b = 0;
    int64_t count_d = 0;
};

struct CharacterSets {
    std::vector<Character> A;
    std::vector<Character> B;
    std::vector<Character> D;
    std::array<std::vector<Character>, 3> D_family;  // D^1, D^2, D^3 (overlaps preserved)
};

// Weight |alpha| = (sum of canonical representatives in (0, m)) / m.
// All coordinates must be nonzero; integral for members of A_m.
int64_t weight(const Character& alpha, int64_t m);

bool in_a_set(const Character& alpha, int64_t m);
bool in_b_set(const Character& alpha, int64_t m);  // |r alpha| = 2 for all units r
bool decomposable(const Character& alpha, int64_t m, int family);  // a_0 + a_family = 0

Character negate_character(const Character& alpha, int64_t m);
Character scale_character(const Character& alpha, int64_t r, int64_t m);

CharacterSets character_sets(int64_t m);

SurfaceInvariants surface_invariants(int64_t m);

// True iff D_m = B_m, i.e. the lines generate NS rationally. Streams over
// the kernel tuples without materializing the sets, so it stays cheap for
// three-digit degrees.
bool rational_generation_test(int64_t m);

}  // namespace fermat

#endif  // FERMAT_CHARACTERS_HPP
