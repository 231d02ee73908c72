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

#include "fermat/charp.hpp"

#include <algorithm>

namespace fermat {

bool is_supersingular_prime(int64_t p, int64_t m) {
    if (p < 2 || m < 1 || m % p == 0) fail(ErrorCode::bad_characteristic, "is_supersingular_prime: p | m or bad p");
    if (m <= 2) return true;
    uint64_t x = static_cast<uint64_t>(p % m);
    uint64_t target = static_cast<uint64_t>(m - 1);
    uint64_t cur = x;
    for (int64_t i = 0; i < m; ++i) {
        if (cur == target) return true;
        if (cur == 1) return false;
        cur = mulmod_u64(cur, x, static_cast<uint64_t>(m));
    }
    return false;
}

CoverParams find_cover_params(int64_t m, int64_t r_limit) {
    for (int64_t r = 1; r <= r_limit; ++r) {
        uint64_t q = static_cast<uint64_t>(r * m - 1);
        if (auto pp = as_prime_power(q)) {
            CoverParams c;
            c.m = m;
            c.r = r;
            c.q = q;
            c.p = static_cast<int64_t>(pp->first);
            c.n = static_cast<int>(pp->second);
            return c;
        }
    }
    fail(ErrorCode::search_limit_exceeded, "find_cover_params: no prime power rm-1 with r <= limit");
}

// --- ProjLine construction ---------------------------------------------------

namespace {

using Point = std::array<FieldElem, 4>;

// row-reduce the 2x4 matrix of spanning points to a canonical form
std::array<Point, 2> canonicalize_points(const FieldCtx& F, Point a, Point b) {
    std::array<Point, 2> rows{a, b};
    size_t lead = 0;
    for (size_t r = 0; r < 2; ++r) {
        size_t col = lead;
        size_t pivot_row = r;
        for (; col < 4; ++col) {
            pivot_row = r;
            while (pivot_row < 2 && F.is_zero(rows[pivot_row][col])) ++pivot_row;
            if (pivot_row < 2) break;
        }
        if (col == 4) fail(ErrorCode::bad_input, "ProjLine: spanning points not independent");
        std::swap(rows[r], rows[pivot_row]);
        FieldElem inv = F.inv(rows[r][col]);
        for (size_t j = 0; j < 4; ++j) rows[r][j] = F.mul(rows[r][j], inv);
        for (size_t i = 0; i < 2; ++i) {
            if (i == r || F.is_zero(rows[i][col])) continue;
            FieldElem f = rows[i][col];
            for (size_t j = 0; j < 4; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
        }
        lead = col + 1;
    }
    return rows;
}

// basis of {v : P v = 0} for the canonical 2x4 point matrix
std::array<Point, 2> null_forms(const FieldCtx& F, const std::array<Point, 2>& pts) {
    // locate the two pivot columns of the reduced matrix
    std::array<int, 2> pivot{-1, -1};
    for (size_t r = 0, c = 0; r < 2; ++r) {
        while (c < 4 && F.is_zero(pts[r][c])) ++c;
        pivot[r] = static_cast<int>(c);
    }
    std::array<Point, 2> forms;
    size_t out = 0;
    for (int free_col = 0; free_col < 4; ++free_col) {
        if (free_col == pivot[0] || free_col == pivot[1]) continue;
        Point v{F.zero(), F.zero(), F.zero(), F.zero()};
        v[free_col] = F.one();
        for (size_t r = 0; r < 2; ++r) v[pivot[r]] = F.neg(pts[r][free_col]);
        forms[out++] = v;
    }
    return forms;
}

FieldElem eval_form(const FieldCtx& F, const Point& form, const Point& pt) {
    FieldElem acc = F.zero();
    for (size_t i = 0; i < 4; ++i)
        if (!F.is_zero(form[i]) && !F.is_zero(pt[i])) acc = F.add(acc, F.mul(form[i], pt[i]));
    return acc;
}

}  // namespace

ProjLine make_proj_line(const FieldCtx& F, const std::array<FieldElem, 4>& a, const std::array<FieldElem, 4>& b) {
    ProjLine line;
    line.point = canonicalize_points(F, a, b);
    line.form = null_forms(F, line.point);
    return line;
}

bool validate_line_on_surface(const ProjLine& line, int64_t degree, const FieldCtx& F) {
    const auto& a = line.point[0];
    const auto& b = line.point[1];
    uint64_t d = static_cast<uint64_t>(degree);
    if (d == F.q() + 1) {
        // z^{q+1} = z^q z: only four monomials survive
        FieldElem c0 = F.zero(), c1 = F.zero(), c2 = F.zero(), c3 = F.zero();
        for (size_t i = 0; i < 4; ++i) {
            FieldElem aq = F.pow(a[i], F.q());
            FieldElem bq = F.pow(b[i], F.q());
            c0 = F.add(c0, F.mul(aq, a[i]));
            c1 = F.add(c1, F.mul(aq, b[i]));
            c2 = F.add(c2, F.mul(bq, a[i]));
            c3 = F.add(c3, F.mul(bq, b[i]));
        }
        return F.is_zero(c0) && F.is_zero(c1) && F.is_zero(c2) && F.is_zero(c3);
    }
    // general binomial expansion of sum_i (a_i L + b_i M)^d
    std::array<std::vector<FieldElem>, 4> apow, bpow;
    for (size_t i = 0; i < 4; ++i) {
        apow[i].resize(d + 1);
        bpow[i].resize(d + 1);
        apow[i][0] = bpow[i][0] = F.one();
        for (uint64_t t = 1; t <= d; ++t) {
            apow[i][t] = F.mul(apow[i][t - 1], a[i]);
            bpow[i][t] = F.mul(bpow[i][t - 1], b[i]);
        }
    }
    for (uint64_t t = 0; t <= d; ++t) {
        int64_t binom = binomial_mod_p(d, t, F.p());
        if (binom == 0) continue;
        FieldElem coeff = F.zero();
        for (size_t i = 0; i < 4; ++i) coeff = F.add(coeff, F.mul(apow[i][d - t], bpow[i][t]));
        if (!F.is_zero(F.mul(F.from_int(binom), coeff))) return false;
    }
    return true;
}

int64_t line_incidence(const FieldCtx& F, const ProjLine& a, const ProjLine& b, int64_t degree) {
    FieldElem e00 = eval_form(F, a.form[0], b.point[0]);
    FieldElem e01 = eval_form(F, a.form[1], b.point[0]);
    FieldElem e10 = eval_form(F, a.form[0], b.point[1]);
    FieldElem e11 = eval_form(F, a.form[1], b.point[1]);
    bool z00 = F.is_zero(e00), z01 = F.is_zero(e01), z10 = F.is_zero(e10), z11 = F.is_zero(e11);
    if (z00 && z01 && z10 && z11) return 2 - degree;  // equal lines
    FieldElem det = F.sub(F.mul(e00, e11), F.mul(e01, e10));
    return F.is_zero(det) ? 1 : 0;
}

ProjLine to_proj_line(const StandardLine& line, const FieldCtx& F) {
    if (line.m != F.m()) fail(ErrorCode::degree_mismatch, "to_proj_line: line degree differs from context");
    FieldElem omega;
    if (line.m % 2 == 1) {
        omega = F.neg(F.one());
    } else {
        auto roots = solve_power_equation(F, F.gamma(), 2);
        if (roots.empty()) fail(ErrorCode::missing_root_of_unity, "to_proj_line: no square root of gamma");
        omega = roots.front();
    }
    FieldElem oz = F.mul(omega, F.gamma_pow(line.k));
    FieldElem oe = F.mul(omega, F.gamma_pow(line.l));
    FieldElem z = F.zero(), o = F.one();
    std::array<FieldElem, 4> a, b;
    switch (line.family) {
        case 1: a = {o, oz, z, z}, b = {z, z, o, oe}; break;
        case 2: a = {o, z, oz, z}, b = {z, o, z, oe}; break;
        default: a = {o, z, z, oz}, b = {z, o, oe, z}; break;
    }
    ProjLine out = make_proj_line(F, a, b);
    out.on_surface = true;
    return out;
}

ProjLine group_act(const FieldCtx& F, const std::array<FieldElem, 3>& scale, const ProjLine& line) {
    std::array<FieldElem, 4> a = line.point[0], b = line.point[1];
    for (size_t i = 0; i < 3; ++i) {
        if (F.is_zero(scale[i])) fail(ErrorCode::bad_input, "group_act: zero scaling factor");
        a[i] = F.mul(a[i], scale[i]);
        b[i] = F.mul(b[i], scale[i]);
    }
    ProjLine out = make_proj_line(F, a, b);
    out.on_surface = line.on_surface;  // diagonal root-of-unity scalings preserve the Fermat equation
    return out;
}

ProjLine group_act_standard(const FieldCtx& F, const std::array<int64_t, 3>& sigma, const ProjLine& line) {
    return group_act(F, {F.gamma_pow(sigma[0]), F.gamma_pow(sigma[1]), F.gamma_pow(sigma[2])}, line);
}

ProjLine special_line_from_pair(const FieldCtx& F, const FieldElem& alpha, const FieldElem& beta) {
    std::array<FieldElem, 4> a{F.one(), alpha, beta, F.zero()};
    std::array<FieldElem, 4> b{F.zero(), beta, alpha, F.one()};
    return make_proj_line(F, a, b);
}

std::pair<FieldElem, FieldElem> find_special_pair(const FieldCtx& F, const CoverParams& cover, uint64_t seed,
                                                  int max_attempts) {
    if (F.q() != cover.q || F.m() != cover.m)
        fail(ErrorCode::bad_input, "find_special_pair: field context does not match cover");
    Rng rng(seed);
    uint64_t q = F.q();
    FieldElem gen_fq = F.pow(F.primitive_element(), q + 1);  // generates F_q^*
    int64_t degree = cover.r * cover.m;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        FieldElem alpha = F.pow(gen_fq, rng.below(q - 1));
        FieldElem beta;
        if (F.p() == 2) {
            beta = F.add(alpha, F.one());
        } else {
            auto root = sqrt_in_ext(F, F.add(F.one(), F.mul(alpha, alpha)));
            if (!root) continue;
            beta = *root;
            // canonical pick between the two square roots
            FieldElem other = F.neg(beta);
            if (F.pack(other) < F.pack(beta)) beta = other;
        }
        if (F.is_zero(beta)) continue;
        if (!(F.pow(beta, q - 1) == F.neg(F.one()))) continue;
        ProjLine line = special_line_from_pair(F, alpha, beta);
        if (!validate_line_on_surface(line, degree, F))
            fail(ErrorCode::validation_failed, "find_special_pair: candidate line not on the cover surface");
        return {alpha, beta};
    }
    fail(ErrorCode::no_pair_found, "find_special_pair: attempts exhausted");
}

ProjLine special_line_cubic(const FieldCtx& F) {
    if (F.q() % 3 != 1) fail(ErrorCode::bad_input, "special_line_cubic: q = 1 mod 3 required");
    FieldElem alpha = F.pow(F.primitive_element(), (F.q2() - 1) / 3);
    if (!(frobenius_power(F, alpha) == alpha)) alpha = F.mul(alpha, alpha);  // land in F_q
    FieldElem a2 = F.mul(alpha, alpha);
    // [L, alpha(L + alpha M), alpha(alpha L - M), M]
    std::array<FieldElem, 4> a{F.one(), alpha, a2, F.zero()};
    std::array<FieldElem, 4> b{F.zero(), a2, F.neg(alpha), F.one()};
    return make_proj_line(F, a, b);
}

ProjLine special_line_char3(const FieldCtx& F) {
    if (F.p() != 3) fail(ErrorCode::bad_input, "special_line_char3: characteristic 3 required");
    FieldElem o = F.one(), z = F.zero();
    std::array<FieldElem, 4> a{o, o, o, z};
    std::array<FieldElem, 4> b{z, o, F.neg(o), o};
    return make_proj_line(F, a, b);
}

// --- CoverCtx ----------------------------------------------------------------

CoverCtx::CoverCtx(std::shared_ptr<const FieldCtx> field, CoverParams cover)
    : field_(std::move(field)), cover_(cover) {
    const FieldCtx& F = *field_;
    if (F.m() != cover_.m || F.q() != cover_.q)
        fail(ErrorCode::bad_input, "CoverCtx: field context does not match cover");
    if (static_cast<uint64_t>(cover_.r * cover_.m) != cover_.q + 1)
        fail(ErrorCode::bad_input, "CoverCtx: rm != q + 1");
    if (cover_.m % 2 == 1) {
        omega_ = F.neg(F.one());
    } else {
        auto roots = solve_power_equation(F, F.gamma(), 2);
        if (roots.empty()) fail(ErrorCode::missing_root_of_unity, "CoverCtx: no square root of gamma");
        omega_ = roots.front();
    }
    mu_r_ = solve_power_equation(F, F.one(), static_cast<uint64_t>(cover_.r));
    pullback_roots_.resize(cover_.m);
    lift_roots_.resize(cover_.m);
    pullback_ready_.assign(cover_.m, false);
    lift_ready_.assign(cover_.m, false);
}

const std::vector<FieldElem>& CoverCtx::pullback_roots(int64_t k) const {
    k = ((k % cover_.m) + cover_.m) % cover_.m;
    if (!pullback_ready_[k]) {
        FieldElem target = field_->mul(omega_, field_->gamma_pow(k));
        auto roots = solve_power_equation(*field_, target, static_cast<uint64_t>(cover_.r));
        if (roots.empty())
            fail(ErrorCode::root_extraction_failed, "pullback_roots: omega gamma^k has no r-th root");
        pullback_roots_[k] = std::move(roots);
        pullback_ready_[k] = true;
    }
    return pullback_roots_[k];
}

const FieldElem& CoverCtx::lift_root(int64_t k) const {
    k = ((k % cover_.m) + cover_.m) % cover_.m;
    if (!lift_ready_[k]) {
        auto roots = solve_power_equation(*field_, field_->gamma_pow(k), static_cast<uint64_t>(cover_.r));
        if (roots.empty()) fail(ErrorCode::root_extraction_failed, "lift_root: gamma^k has no r-th root");
        lift_roots_[k] = roots.front();  // sorted by discrete log; front is the lex-least lift
        lift_ready_[k] = true;
    }
    return lift_roots_[k];
}

// --- pullback and projection-formula pairings --------------------------------

std::vector<ProjLine> pullback_standard_line(const StandardLine& line, const CoverCtx& C) {
    const FieldCtx& F = C.field();
    if (line.m != C.cover().m) fail(ErrorCode::degree_mismatch, "pullback_standard_line: degree mismatch");
    const auto& c_roots = C.pullback_roots(line.k);
    const auto& d_roots = C.pullback_roots(line.l);
    int64_t degree = C.cover_degree();
    FieldElem z = F.zero(), o = F.one();
    std::vector<ProjLine> out;
    out.reserve(c_roots.size() * d_roots.size());
    for (const FieldElem& c : c_roots)
        for (const FieldElem& d : d_roots) {
            std::array<FieldElem, 4> a, b;
            switch (line.family) {
                case 1: a = {o, c, z, z}, b = {z, z, o, d}; break;
                case 2: a = {o, z, c, z}, b = {z, o, z, d}; break;
                default: a = {o, z, z, c}, b = {z, o, d, z}; break;
            }
            ProjLine pl = make_proj_line(F, a, b);
            if (!validate_line_on_surface(pl, degree, F))
                fail(ErrorCode::validation_failed, "pullback_standard_line: pullback not on cover surface");
            pl.on_surface = true;
            out.push_back(std::move(pl));
        }
    return out;
}

ProjLine lifted_orbit_line(const OrbitDivisor& D, const CoverCtx& C) {
    const FieldCtx& F = C.field();
    ProjLine base = special_line_from_pair(F, D.alpha, D.beta);
    base.on_surface = true;
    return group_act(F, {C.lift_root(D.sigma[0]), C.lift_root(D.sigma[1]), C.lift_root(D.sigma[2])}, base);
}

int64_t basis_orbit_pairing(const StandardLine& b, const OrbitDivisor& D, const CoverCtx& C) {
    return basis_pairing_against_cover_line(b, lifted_orbit_line(D, C), C);
}

int64_t basis_pairing_against_cover_line(const StandardLine& b, const ProjLine& orbit, const CoverCtx& C) {
    const FieldCtx& F = C.field();
    const auto& c_roots = C.pullback_roots(b.k);
    const auto& d_roots = C.pullback_roots(b.l);
    const auto& P = orbit.point[0];
    const auto& Q = orbit.point[1];
    // index pattern of the two sparse forms x_i - c x_j, x_k - d x_l per family
    int i0, j0, i1, j1;
    switch (b.family) {
        case 1: i0 = 1, j0 = 0, i1 = 3, j1 = 2; break;
        case 2: i0 = 2, j0 = 0, i1 = 3, j1 = 1; break;
        default: i0 = 3, j0 = 0, i1 = 2, j1 = 1; break;
    }
    int64_t acc = 0;
    for (const FieldElem& c : c_roots) {
        FieldElem u0 = F.sub(P[i0], F.mul(c, P[j0]));
        FieldElem v0 = F.sub(Q[i0], F.mul(c, Q[j0]));
        for (const FieldElem& d : d_roots) {
            FieldElem u1 = F.sub(P[i1], F.mul(d, P[j1]));
            FieldElem v1 = F.sub(Q[i1], F.mul(d, Q[j1]));
            bool zu0 = F.is_zero(u0), zu1 = F.is_zero(u1), zv0 = F.is_zero(v0), zv1 = F.is_zero(v1);
            if (zu0 && zu1 && zv0 && zv1)
                fail(ErrorCode::coincident_line, "basis_orbit_pairing: pullback line equals the orbit line");
            if (F.is_zero(F.sub(F.mul(u0, v1), F.mul(u1, v0)))) acc += 1;
        }
    }
    return acc;
}

int64_t pushdown_self_intersection(const CoverParams& cover) { return 4 * cover.r - 2 - cover.r * cover.m; }

std::vector<ProjLine> deck_translates(const ProjLine& line, const CoverCtx& C) {
    const FieldCtx& F = C.field();
    const auto& mu = C.mu_r();
    std::vector<ProjLine> deck;
    deck.reserve(mu.size() * mu.size() * mu.size());
    for (const FieldElem& g0 : mu)
        for (const FieldElem& g1 : mu)
            for (const FieldElem& g2 : mu) deck.push_back(group_act(F, {g0, g1, g2}, line));
    return deck;
}

int64_t pushdown_pair_from_deck(const ProjLine& lifted_d, const std::vector<ProjLine>& deck_e, const CoverCtx& C) {
    const FieldCtx& F = C.field();
    for (const ProjLine& moved : deck_e)
        if (moved == lifted_d) return pushdown_self_intersection(C.cover());  // same image curve downstairs
    int64_t acc = 0;
    int64_t degree = C.cover_degree();
    for (const ProjLine& moved : deck_e) acc += line_incidence(F, lifted_d, moved, degree);
    return acc;
}

int64_t pushdown_gram(const OrbitDivisor& D, const OrbitDivisor& E, const CoverCtx& C) {
    return pushdown_pair_from_deck(lifted_orbit_line(D, C), deck_translates(lifted_orbit_line(E, C), C), C);
}

}  // namespace fermat
