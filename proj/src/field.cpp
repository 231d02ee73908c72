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

#include "fermat/field.hpp"

#include <algorithm>
#include <sstream>

namespace fermat {

namespace poly {

std::vector<int64_t> trim(std::vector<int64_t> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<int64_t> mul_mod(const std::vector<int64_t>& a, const std::vector<int64_t>& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int64_t> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    return trim(out);
}

std::vector<int64_t> mod(std::vector<int64_t> a, const std::vector<int64_t>& f, int64_t p) {
    a = trim(std::move(a));
    int64_t lead_inv = invmod_i64(f.back(), p);
    while (a.size() >= f.size()) {
        int64_t c = a.back() % p;
        if (c != 0) {
            int64_t factor = (c * lead_inv) % p;
            size_t shift = a.size() - f.size();
            for (size_t i = 0; i < f.size(); ++i) a[shift + i] = ((a[shift + i] - factor * f[i]) % p + p) % p;
        }
        a.pop_back();
        a = trim(std::move(a));
    }
    return a;
}

std::vector<int64_t> gcd(std::vector<int64_t> a, std::vector<int64_t> b, int64_t p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        a = mod(std::move(a), b, p);
        std::swap(a, b);
    }
    if (!a.empty()) {  // monic normalization
        int64_t inv = invmod_i64(a.back(), p);
        for (auto& c : a) c = ((c * inv) % p + p) % p;
    }
    return a;
}

std::vector<int64_t> powmod_x(uint64_t e, const std::vector<int64_t>& f, int64_t p) {
    std::vector<int64_t> result{1}, base{0, 1};
    base = mod(base, f, p);
    while (e) {
        if (e & 1) result = mod(mul_mod(result, base, p), f, p);
        base = mod(mul_mod(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

namespace {
std::vector<int64_t> sub_x(std::vector<int64_t> a, int64_t p) {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = ((a[1] - 1) % p + p) % p;
    return trim(std::move(a));
}
}  // namespace

bool is_irreducible(const std::vector<int64_t>& f, int64_t p) {
    auto ft = trim(f);
    if (ft.size() < 2) return false;
    size_t d = ft.size() - 1;
    // x^{p^k} by iterated Frobenius; gcd(f, x^{p^k} - x) = 1 for k < d,
    // and x^{p^d} = x mod f.
    std::vector<int64_t> t{0, 1};
    t = mod(t, ft, p);
    for (size_t k = 1; k <= d; ++k) {
        std::vector<int64_t> s = t;
        std::vector<int64_t> acc{1};
        // t <- t^p mod f
        uint64_t e = static_cast<uint64_t>(p);
        while (e) {
            if (e & 1) acc = mod(mul_mod(acc, s, p), ft, p);
            s = mod(mul_mod(s, s, p), ft, p);
            e >>= 1;
        }
        t = acc;
        if (k < d) {
            if (gcd(sub_x(t, p), ft, p).size() != 1) return false;
        } else {
            if (trim(sub_x(t, p)).size() != 0) return false;
        }
    }
    return true;
}

std::vector<int64_t> cyclotomic(int64_t m) {
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, exact division over Z.
    std::vector<int64_t> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (int64_t d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        std::vector<int64_t> phi_d = cyclotomic(d);
        // exact division num /= phi_d
        std::vector<int64_t> quot(num.size() - phi_d.size() + 1, 0);
        std::vector<int64_t> rem = num;
        for (size_t i = quot.size(); i-- > 0;) {
            int64_t c = rem[i + phi_d.size() - 1] / phi_d.back();
            quot[i] = c;
            if (c != 0)
                for (size_t j = 0; j < phi_d.size(); ++j) rem[i + j] -= c * phi_d[j];
        }
        num = quot;
    }
    return num;
}

}  // namespace poly

FieldCtx::FieldCtx(int64_t p, std::vector<int64_t> f, int64_t m) : p_(p), m_(m), f_(std::move(f)) {
    deg_ = static_cast<int>(f_.size()) - 1;
    n_ = deg_ / 2;
    q_ = 1;
    for (int i = 0; i < n_; ++i) q_ *= static_cast<uint64_t>(p_);
    q2_ = q_ * q_;
    n_primes_ = prime_divisors_u64(q2_ - 1);
    gamma_ = x_class();
    // deterministic primitive element: first packed index of full order
    uint64_t N = q2_ - 1;
    for (uint32_t idx = 1;; ++idx) {
        FieldElem cand = unpack(idx);
        bool ok = !is_zero(cand);
        for (uint64_t t : n_primes_)
            if (ok && pow(cand, N / t) == one()) ok = false;
        if (ok) {
            prim_ = cand;
            break;
        }
    }
}

FieldElem FieldCtx::from_int(int64_t v) const {
    FieldElem a;
    a.c[0] = ((v % p_) + p_) % p_;
    return a;
}

FieldElem FieldCtx::from_coeffs(const std::vector<int64_t>& coeffs) const {
    if (static_cast<int>(coeffs.size()) > deg_)
        fail(ErrorCode::bad_input, "from_coeffs: too many coefficients");
    FieldElem a;
    for (size_t i = 0; i < coeffs.size(); ++i) a.c[i] = ((coeffs[i] % p_) + p_) % p_;
    return a;
}

FieldElem FieldCtx::x_class() const {
    FieldElem a;
    a.c[1] = 1;
    return a;
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
    FieldElem r;
    for (int i = 0; i < deg_; ++i) {
        int64_t s = a.c[i] + b.c[i];
        r.c[i] = s >= p_ ? s - p_ : s;
    }
    return r;
}

FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const {
    FieldElem r;
    for (int i = 0; i < deg_; ++i) {
        int64_t s = a.c[i] - b.c[i];
        r.c[i] = s < 0 ? s + p_ : s;
    }
    return r;
}

FieldElem FieldCtx::neg(const FieldElem& a) const { return sub(FieldElem{}, a); }

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
    // schoolbook product then reduction by the monic modulus; partial sums
    // stay far below 2^63 (p <= 1423, deg <= 14)
    std::array<int64_t, 2 * kMaxExtDeg> t{};
    for (int i = 0; i < deg_; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < deg_; ++j) t[i + j] += a.c[i] * b.c[j];
    }
    for (int i = 2 * deg_ - 2; i >= deg_; --i) {
        int64_t c = t[i] % p_;
        if (c != 0)
            for (int j = 0; j < deg_; ++j) t[i - deg_ + j] -= c * f_[j];
        t[i] = 0;
    }
    FieldElem r;
    for (int i = 0; i < deg_; ++i) r.c[i] = ((t[i] % p_) + p_) % p_;
    return r;
}

FieldElem FieldCtx::pow(FieldElem a, uint64_t e) const {
    FieldElem r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FieldElem FieldCtx::inv(const FieldElem& a) const {
    if (is_zero(a)) fail(ErrorCode::zero_element, "inv: zero element");
    return pow(a, q2_ - 2);
}

FieldElem FieldCtx::gamma_pow(int64_t k) const {
    k %= m_;
    if (k < 0) k += m_;
    return pow(gamma_, static_cast<uint64_t>(k));
}

uint32_t FieldCtx::pack(const FieldElem& a) const {
    uint32_t idx = 0;
    for (int i = deg_ - 1; i >= 0; --i) idx = idx * static_cast<uint32_t>(p_) + static_cast<uint32_t>(a.c[i]);
    return idx;
}

FieldElem FieldCtx::unpack(uint32_t idx) const {
    FieldElem a;
    for (int i = 0; i < deg_; ++i) {
        a.c[i] = idx % static_cast<uint32_t>(p_);
        idx /= static_cast<uint32_t>(p_);
    }
    return a;
}

void FieldCtx::ensure_dlog_table() const {
    std::call_once(dlog_once_, [this] {
        dlog_table_.assign(q2_, -1);
        FieldElem cur = one();
        for (uint64_t e = 0; e < q2_ - 1; ++e) {
            dlog_table_[pack(cur)] = static_cast<int32_t>(e);
            cur = mul(cur, prim_);
        }
    });
}

uint64_t FieldCtx::dlog(const FieldElem& a) const {
    if (is_zero(a)) fail(ErrorCode::zero_element, "dlog: zero element");
    ensure_dlog_table();
    return static_cast<uint64_t>(dlog_table_[pack(a)]);
}

std::string FieldCtx::to_string(const FieldElem& a) const {
    std::ostringstream os;
    bool first = true;
    for (int i = deg_ - 1; i >= 0; --i) {
        if (a.c[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || a.c[i] != 1) os << a.c[i];
        if (i > 0) {
            os << "g";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::shared_ptr<const FieldCtx> build_field_ctx(int64_t p, const std::vector<int64_t>& f, int64_t m) {
    if (p < 2 || !is_prime_u64(static_cast<uint64_t>(p))) fail(ErrorCode::bad_input, "build_field_ctx: p not prime");
    if (m < 2) fail(ErrorCode::bad_input, "build_field_ctx: m < 2");
    if (m % p == 0) fail(ErrorCode::bad_characteristic, "build_field_ctx: p divides m");
    auto ft = poly::trim(f);
    for (auto& c : ft) c = ((c % p) + p) % p;
    if (ft.size() < 3 || ft.size() % 2 == 0 || ft.back() != 1)
        fail(ErrorCode::bad_input, "build_field_ctx: f must be monic of even degree 2n >= 2");
    int deg = static_cast<int>(ft.size()) - 1;
    if (deg > kMaxExtDeg) fail(ErrorCode::bad_input, "build_field_ctx: extension degree too large");
    double qd = 1;
    for (int i = 0; i < deg; ++i) qd *= static_cast<double>(p);
    if (qd > 67'108'864.0) fail(ErrorCode::bad_input, "build_field_ctx: q^2 exceeds supported range");
    if (!poly::is_irreducible(ft, p)) fail(ErrorCode::not_irreducible, "build_field_ctx: f reducible");
    auto ctx = std::make_shared<FieldCtx>(p, ft, m);
    // verify exact order of the root
    const FieldElem& g = ctx->gamma();
    if (!(ctx->pow(g, static_cast<uint64_t>(m)) == ctx->one()))
        fail(ErrorCode::root_order_mismatch, "build_field_ctx: gamma^m != 1");
    for (uint64_t t : prime_divisors_u64(static_cast<uint64_t>(m)))
        if (ctx->pow(g, static_cast<uint64_t>(m) / t) == ctx->one())
            fail(ErrorCode::root_order_mismatch, "build_field_ctx: gamma has order properly dividing m");
    return ctx;
}

std::vector<int64_t> find_defining_poly(int64_t p, int64_t m, uint64_t seed) {
    if (p < 2 || !is_prime_u64(static_cast<uint64_t>(p))) fail(ErrorCode::bad_input, "find_defining_poly: p not prime");
    if (m < 2) fail(ErrorCode::bad_input, "find_defining_poly: m < 2");
    if (m % p == 0) fail(ErrorCode::bad_characteristic, "find_defining_poly: p divides m");
    // -1 must lie in <p> mod m: the order of p is then even, say 2n
    uint64_t ord = order_mod(static_cast<uint64_t>(p % m), static_cast<uint64_t>(m));
    if (ord % 2 != 0 ||
        powmod_u64(static_cast<uint64_t>(p % m), ord / 2, static_cast<uint64_t>(m)) != static_cast<uint64_t>(m - 1))
        fail(ErrorCode::not_supersingular_pair, "find_defining_poly: -1 not in <p> mod m");
    int deg = static_cast<int>(ord);

    // helper field F_{p^2n} through a seeded search for any irreducible modulus
    Rng rng(seed);
    std::vector<int64_t> g;
    for (;;) {
        g.assign(deg + 1, 0);
        g[deg] = 1;
        for (int i = 0; i < deg; ++i) g[i] = static_cast<int64_t>(rng.below(static_cast<uint64_t>(p)));
        if (g[0] == 0) continue;  // x | g otherwise
        if (poly::is_irreducible(g, p)) break;
    }
    FieldCtx helper(p, g, m >= 2 ? m : 2);

    uint64_t N = helper.q2() - 1;
    FieldElem base = helper.pow(helper.primitive_element(), N / static_cast<uint64_t>(m));
    uint64_t t;
    do {
        t = 1 + rng.below(static_cast<uint64_t>(m - 1));
    } while (gcd_u64(t, static_cast<uint64_t>(m)) != 1);
    FieldElem root = helper.pow(base, t);

    // minimal polynomial: prod over the Frobenius orbit of (x - root^{p^i})
    std::vector<FieldElem> minpoly{helper.one()};  // coefficients in F_{q^2}, ascending
    FieldElem conj = root;
    for (int i = 0; i < deg; ++i) {
        std::vector<FieldElem> next(minpoly.size() + 1, helper.zero());
        for (size_t j = 0; j < minpoly.size(); ++j) {
            next[j + 1] = helper.add(next[j + 1], minpoly[j]);
            next[j] = helper.sub(next[j], helper.mul(conj, minpoly[j]));
        }
        minpoly = std::move(next);
        conj = helper.pow(conj, static_cast<uint64_t>(p));
    }
    std::vector<int64_t> out(minpoly.size());
    for (size_t i = 0; i < minpoly.size(); ++i) {
        FieldElem c = minpoly[i];
        for (int j = 1; j < helper.deg(); ++j)
            if (c.c[j] != 0) fail(ErrorCode::bad_input, "find_defining_poly: minimal polynomial not over F_p");
        out[i] = c.c[0];
    }
    return out;
}

uint64_t element_order(const FieldCtx& F, const FieldElem& a) {
    if (F.is_zero(a)) fail(ErrorCode::zero_element, "element_order: zero element");
    uint64_t e = F.q2() - 1;
    for (uint64_t t : F.unit_group_prime_factors())
        while (e % t == 0 && F.pow(a, e / t) == F.one()) e /= t;
    return e;
}

FieldElem frobenius_power(const FieldCtx& F, const FieldElem& a) { return F.pow(a, F.q()); }

std::optional<FieldElem> sqrt_in_ext(const FieldCtx& F, const FieldElem& a) {
    if (F.is_zero(a)) return F.zero();
    if (F.p() == 2) return F.pow(a, F.q2() / 2);  // squaring is bijective
    uint64_t N = F.q2() - 1;
    if (!(F.pow(a, N / 2) == F.one())) return std::nullopt;
    // Tonelli-Shanks in F_{q^2}
    uint64_t t = N;
    int s = 0;
    while (t % 2 == 0) t /= 2, ++s;
    FieldElem z = F.pow(F.primitive_element(), t);  // generator of the 2-Sylow
    FieldElem x = F.pow(a, (t + 1) / 2);
    FieldElem b = F.pow(a, t);
    int r = s;
    while (!(b == F.one())) {
        int k = 0;
        FieldElem b2 = b;
        while (!(b2 == F.one())) {
            b2 = F.mul(b2, b2);
            ++k;
        }
        FieldElem g = z;
        for (int i = 0; i < r - k - 1; ++i) g = F.mul(g, g);
        x = F.mul(x, g);
        b = F.mul(b, F.mul(g, g));
        r = k;
    }
    return x;
}

std::vector<FieldElem> solve_power_equation(const FieldCtx& F, const FieldElem& a, uint64_t r) {
    if (F.is_zero(a)) fail(ErrorCode::zero_element, "solve_power_equation: zero element");
    uint64_t N = F.q2() - 1;
    if (r == 0 || N % r != 0) fail(ErrorCode::bad_input, "solve_power_equation: r must divide q^2-1");
    uint64_t s = F.dlog(a);
    if (s % r != 0) {
        // solvable iff gcd(r, N) | s; here gcd(r, N) = r
        return {};
    }
    uint64_t step = N / r;
    uint64_t x0 = (s / r) % N;
    // normalize so the exponent list is sorted ascending
    x0 %= step;
    std::vector<FieldElem> out;
    out.reserve(r);
    for (uint64_t k = 0; k < r; ++k) out.push_back(F.pow(F.primitive_element(), x0 + k * step));
    return out;
}

}  // namespace fermat
