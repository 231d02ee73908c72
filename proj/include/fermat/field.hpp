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

#ifndef FERMAT_FIELD_HPP
#define FERMAT_FIELD_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "fermat/numeric.hpp"

namespace fermat {

// Largest extension degree 2n over F_p we ever build (degree-43 cover needs 14).
constexpr int kMaxExtDeg = 14;

// Element of F_{q^2} = F_p[x]/(f), deg f = 2n. Dense coefficient vector with
// canonical representatives in [0, p); unused slots stay zero so elements
// compare with operator==.
struct FieldElem {
    std::array<int64_t, kMaxExtDeg> c{};

    bool operator==(const FieldElem&) const = default;
};

// The tower F_p c F_q c F_{q^2} (q = p^n) together with a distinguished
// root of unity gamma of exact multiplicative order m. Immutable after
// construction and safe to share across threads; the discrete-log table
// backing solve_power_equation is built on first use behind a once_flag.
class FieldCtx {
  public:
    FieldCtx(int64_t p, std::vector<int64_t> f, int64_t m);

    int64_t p() const { return p_; }
    int64_t n() const { return n_; }
    int64_t m() const { return m_; }
    uint64_t q() const { return q_; }
    uint64_t q2() const { return q2_; }
    const std::vector<int64_t>& defining_poly() const { return f_; }
    const FieldElem& gamma() const { return gamma_; }
    const FieldElem& primitive_element() const { return prim_; }

    int deg() const { return deg_; }  // 2n

    FieldElem zero() const { return FieldElem{}; }
    FieldElem one() const { return from_int(1); }
    FieldElem from_int(int64_t v) const;
    FieldElem from_coeffs(const std::vector<int64_t>& coeffs) const;
    FieldElem x_class() const;  // the residue class of x

    bool is_zero(const FieldElem& a) const { return a == FieldElem{}; }

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem pow(FieldElem a, uint64_t e) const;
    FieldElem inv(const FieldElem& a) const;

    // gamma^k with k reduced mod m.
    FieldElem gamma_pow(int64_t k) const;

    // Packs coefficients as sum c_i p^i; a bijection onto [0, q^2).
    uint32_t pack(const FieldElem& a) const;
    FieldElem unpack(uint32_t idx) const;

    // Discrete log with respect to primitive_element(); a != 0.
    uint64_t dlog(const FieldElem& a) const;

    const std::vector<uint64_t>& unit_group_prime_factors() const { return n_primes_; }

    std::string to_string(const FieldElem& a) const;  // polynomial in gamma

  private:
    void ensure_dlog_table() const;

    int64_t p_, n_, m_;
    int deg_;
    uint64_t q_, q2_;
    std::vector<int64_t> f_;           // monic, ascending, size deg_+1
    std::vector<uint64_t> n_primes_;   // prime divisors of q^2-1
    FieldElem gamma_, prim_;

    mutable std::once_flag dlog_once_;
    mutable std::vector<int32_t> dlog_table_;
};

// --- module operations ------------------------------------------------------

// Validates irreducibility of f and that its root has exact order m.
std::shared_ptr<const FieldCtx> build_field_ctx(int64_t p, const std::vector<int64_t>& f, int64_t m);

// A monic irreducible degree-2n factor of the m-th cyclotomic polynomial
// over F_p, where 2n is the order of p mod m (requires p^n = -1 mod m).
// Deterministic for a fixed seed.
std::vector<int64_t> find_defining_poly(int64_t p, int64_t m, uint64_t seed);

uint64_t element_order(const FieldCtx& F, const FieldElem& a);

// a^q; a is in F_q iff frobenius_power(a) == a.
FieldElem frobenius_power(const FieldCtx& F, const FieldElem& a);

std::optional<FieldElem> sqrt_in_ext(const FieldCtx& F, const FieldElem& a);

// All c with c^r = a, sorted by discrete log; empty or exactly r results.
// Requires a != 0 and r | q^2-1.
std::vector<FieldElem> solve_power_equation(const FieldCtx& F, const FieldElem& a, uint64_t r);

// --- F_p[x] helpers (exposed for tests) --------------------------------------

namespace poly {
// Polynomials over F_p as ascending coefficient vectors, trimmed.
std::vector<int64_t> trim(std::vector<int64_t> a);
std::vector<int64_t> mul_mod(const std::vector<int64_t>& a, const std::vector<int64_t>& b, int64_t p);
std::vector<int64_t> mod(std::vector<int64_t> a, const std::vector<int64_t>& f, int64_t p);
std::vector<int64_t> gcd(std::vector<int64_t> a, std::vector<int64_t> b, int64_t p);
std::vector<int64_t> powmod_x(uint64_t e, const std::vector<int64_t>& f, int64_t p);  // x^e mod f
bool is_irreducible(const std::vector<int64_t>& f, int64_t p);
std::vector<int64_t> cyclotomic(int64_t m);  // over Z, exact
}  // namespace poly

}  // namespace fermat

#endif  // FERMAT_FIELD_HPP
