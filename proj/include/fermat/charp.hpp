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

#ifndef FERMAT_CHARP_HPP
#define FERMAT_CHARP_HPP

#include <array>
#include <memory>
#include <utility>
#include <vector>

#include "fermat/field.hpp"
#include "fermat/lines.hpp"

namespace fermat {

// Parameters of a supersingular cover: q = rm - 1 = p^n, so the prime p is
// supersingular for the degree-m Fermat surface and the cover has degree rm.
struct CoverParams {
    int64_t m = 0;
    int64_t r = 0;
    uint64_t q = 0;
    int64_t p = 0;
    int n = 0;
};

// A line in P^3 over F_{q^2}, stored with canonical (row-reduced) spanning
// points and the two linear forms cutting it out.
struct ProjLine {
    std::array<std::array<FieldElem, 4>, 2> point;
    std::array<std::array<FieldElem, 4>, 2> form;
    bool on_surface = false;

    bool operator==(const ProjLine& o) const { return point == o.point; }
};

// A pushforward divisor sigma(phi(l(alpha, beta))) on the degree-m surface,
// identified by the base pair and the acting group element of mu_m^3.
struct OrbitDivisor {
    FieldElem alpha;
    FieldElem beta;
    std::array<int64_t, 3> sigma{0, 0, 0};
};

bool is_supersingular_prime(int64_t p, int64_t m);

CoverParams find_cover_params(int64_t m, int64_t r_limit = 64);

// Shared per-cover caches: r-th root tables for pullbacks and sigma lifts.
class CoverCtx {
  public:
    CoverCtx(std::shared_ptr<const FieldCtx> field, CoverParams cover);

    const FieldCtx& field() const { return *field_; }
    std::shared_ptr<const FieldCtx> field_ptr() const { return field_; }
    const CoverParams& cover() const { return cover_; }
    int64_t cover_degree() const { return cover_.r * cover_.m; }

    // sorted r-th roots of omega * gamma^k (the slopes of pullback lines)
    const std::vector<FieldElem>& pullback_roots(int64_t k) const;
    // lex-least r-th root of gamma^k, the deterministic sigma lift
    const FieldElem& lift_root(int64_t k) const;
    const std::vector<FieldElem>& mu_r() const { return mu_r_; }
    FieldElem omega() const { return omega_; }

  private:
    std::shared_ptr<const FieldCtx> field_;
    CoverParams cover_;
    FieldElem omega_;  // -1 for odd m; a square root of gamma for even m
    std::vector<FieldElem> mu_r_;
    mutable std::vector<std::vector<FieldElem>> pullback_roots_;
    mutable std::vector<FieldElem> lift_roots_;
    mutable std::vector<bool> pullback_ready_, lift_ready_;
};

ProjLine make_proj_line(const FieldCtx& F, const std::array<FieldElem, 4>& a, const std::array<FieldElem, 4>& b);

// Does the parametrized degree-d Fermat equation vanish identically on the
// line? Uses the Frobenius split z^{q+1} = z^q z when d = q + 1, otherwise a
// full binomial expansion.
bool validate_line_on_surface(const ProjLine& line, int64_t degree, const FieldCtx& F);

// 2 - d for equal lines, 1 for distinct coplanar lines, 0 otherwise.
int64_t line_incidence(const FieldCtx& F, const ProjLine& a, const ProjLine& b, int64_t degree);

// Reduction of a standard line to explicit coordinates; gamma comes from the
// context, omega = -1 for odd m and a fixed square root of gamma for m = 4.
ProjLine to_proj_line(const StandardLine& line, const FieldCtx& F);

// Coordinatewise scaling by (s0, s1, s2, 1).
ProjLine group_act(const FieldCtx& F, const std::array<FieldElem, 3>& scale, const ProjLine& line);
// Scaling by (gamma^j, gamma^k, gamma^l, 1).
ProjLine group_act_standard(const FieldCtx& F, const std::array<int64_t, 3>& sigma, const ProjLine& line);

// Random search (seeded) for a pair alpha in F_q, beta in F_{q^2} with
// beta^2 = 1 + alpha^2 and beta^{q-1} = -1 whose line validates on-surface.
std::pair<FieldElem, FieldElem> find_special_pair(const FieldCtx& F, const CoverParams& cover, uint64_t seed,
                                                  int max_attempts = 65536);

// The line y = alpha x + beta w, z = beta x + alpha w.
ProjLine special_line_from_pair(const FieldCtx& F, const FieldElem& alpha, const FieldElem& beta);

// Deterministic variants: the third-root-of-unity line (q = 1 mod 3) and
// the characteristic-3 line.
ProjLine special_line_cubic(const FieldCtx& F);
ProjLine special_line_char3(const FieldCtx& F);

// The r^2 lines on the degree-rm cover that the r-th power map carries onto
// the given standard line; each validates on-surface.
std::vector<ProjLine> pullback_standard_line(const StandardLine& line, const CoverCtx& C);

// sigma-hat applied to the special line: the cover-side representative of D.
ProjLine lifted_orbit_line(const OrbitDivisor& D, const CoverCtx& C);

// Pairing of a reduced basis line with sigma(phi(l(alpha,beta))) through the
// projection formula; independent of the choice of sigma lift.
int64_t basis_orbit_pairing(const StandardLine& b, const OrbitDivisor& D, const CoverCtx& C);

// Same pairing against an already-lifted cover line; the batch drivers lift
// once per sigma and sweep the basis with this.
int64_t basis_pairing_against_cover_line(const StandardLine& b, const ProjLine& cover_line, const CoverCtx& C);

// Self-intersection 4r - 2 - rm of a pushforward divisor (degree-r rational
// curve on the degree-m surface).
int64_t pushdown_self_intersection(const CoverParams& cover);

// Intersection number of two pushforward divisors via the mu_r^3 deck sum.
int64_t pushdown_gram(const OrbitDivisor& D, const OrbitDivisor& E, const CoverCtx& C);

// The r^3 deck translates of a cover line; precomputable for Gram assembly.
std::vector<ProjLine> deck_translates(const ProjLine& line, const CoverCtx& C);
int64_t pushdown_pair_from_deck(const ProjLine& lifted_d, const std::vector<ProjLine>& deck_e, const CoverCtx& C);

}  // namespace fermat

#endif  // FERMAT_CHARP_HPP
