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

#include "fermat/numeric.hpp"

#include <algorithm>
#include <sstream>

namespace fermat {

int64_t invmod_i64(int64_t a, int64_t m) {
    int64_t t = 0, new_t = 1, r = m, new_r = ((a % m) + m) % m;
    while (new_r != 0) {
        int64_t q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (r != 1) fail(ErrorCode::bad_input, "invmod: element not invertible");
    return t < 0 ? t + m : t;
}

Montgomery::Montgomery(uint64_t modulus) : n_(modulus) {
    if (modulus % 2 == 0 || modulus >= (1ULL << 62))
        fail(ErrorCode::bad_input, "Montgomery: modulus must be odd and < 2^62");
    // -n^{-1} mod 2^64 by Newton iteration
    uint64_t inv = n_;
    for (int i = 0; i < 5; ++i) inv *= 2 - n_ * inv;
    ninv_ = -inv;
    uint64_t r1 = static_cast<uint64_t>((static_cast<unsigned __int128>(1) << 64) % n_);
    r2_ = mulmod_u64(r1, r1, n_);  // 2^128 mod n
    one_ = to(1);
}

uint64_t Montgomery::pow(uint64_t a, uint64_t e) const {
    uint64_t r = one_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

namespace {

bool miller_rabin_u64(uint64_t n, uint64_t a) {
    if (a % n == 0) return true;
    uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) d /= 2, ++s;
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 0; i < s - 1; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

constexpr uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (uint64_t a : kWitnesses)
        if (!miller_rabin_u64(n, a)) return false;
    return true;
}

bool is_probable_prime(const Bint& n) {
    using boost::multiprecision::powm;
    if (n < 2) return false;
    if (n <= UINT64_MAX) return is_prime_u64(static_cast<uint64_t>(n));
    for (uint64_t p : kWitnesses)
        if (n % p == 0) return false;
    Bint d = n - 1;
    int s = 0;
    while (d % 2 == 0) d /= 2, ++s;
    for (uint64_t a : kWitnesses) {
        Bint x = powm(Bint(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = (x * x) % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

uint64_t prev_prime_u64(uint64_t x) {
    uint64_t c = x - 1;
    if (c % 2 == 0) --c;
    while (!is_prime_u64(c)) c -= 2;
    return c;
}

Bint iroot(const Bint& n, unsigned e) {
    if (n < 0) fail(ErrorCode::bad_input, "iroot: negative argument");
    if (n == 0 || e == 1) return n;
    Bint lo = 0, hi = 1;
    while (boost::multiprecision::pow(hi, e) <= n) hi <<= 1;
    while (lo + 1 < hi) {
        Bint mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, e) <= n)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::optional<std::pair<uint64_t, unsigned>> as_prime_power(uint64_t q) {
    if (q < 2) return std::nullopt;
    for (unsigned e = 63; e >= 1; --e) {
        Bint root = iroot(Bint(q), e);
        if (boost::multiprecision::pow(root, e) == q) {
            uint64_t p = static_cast<uint64_t>(root);
            if (is_prime_u64(p)) return std::make_pair(p, e);
            if (e == 1) return std::nullopt;
        }
    }
    return std::nullopt;
}

Factorization factorize(Bint n, uint64_t cap) {
    Factorization out;
    if (n < 0) n = -n;
    if (n == 0) fail(ErrorCode::zero_discriminant, "factorize: zero input");
    auto push = [&out](const Bint& p, unsigned e) { out.factors.emplace_back(p, e); };
    for (uint64_t d = 2; d <= cap && Bint(d) * d <= n; d = (d == 2 ? 3 : d + 2)) {
        if (n % d == 0) {
            unsigned e = 0;
            while (n % d == 0) n /= d, ++e;
            push(Bint(d), e);
        }
    }
    if (n == 1) return out;
    // cofactor: peel perfect powers, then a primality check
    unsigned power = 1;
    for (unsigned e = 2; Bint(1) << (e * 1) <= n; ++e) {  // e bounded by bit length
        if (e > static_cast<unsigned>(boost::multiprecision::msb(n)) + 1) break;
        Bint root = iroot(n, e);
        if (root > 1 && boost::multiprecision::pow(root, e) == n) {
            n = root;
            power *= e;
            e = 1;  // restart; root may itself be a power
        }
    }
    if (is_probable_prime(n))
        push(n, power);
    else
        out.cofactor = boost::multiprecision::pow(n, power);
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

std::string factorization_to_string(const Factorization& f) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : f.factors) {
        if (!first) os << " * ";
        first = false;
        os << p;
        if (e > 1) os << "^" << e;
    }
    if (!f.complete()) {
        if (!first) os << " * ";
        os << "C" << f.cofactor << " (composite, unfactored)";
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::vector<uint64_t> prime_divisors_u64(uint64_t m) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= m; d = (d == 2 ? 3 : d + 2)) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

int64_t binomial_mod_p(uint64_t n, uint64_t k, int64_t p) {
    if (k > n) return 0;
    int64_t result = 1;
    while (n > 0 || k > 0) {
        uint64_t nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        // C(nd, kd) mod p with nd, kd < p
        int64_t num = 1, den = 1;
        for (uint64_t i = 0; i < kd; ++i) {
            num = static_cast<int64_t>(mulmod_u64(num, (nd - i) % p, p));
            den = static_cast<int64_t>(mulmod_u64(den, (i + 1) % p, p));
        }
        result = static_cast<int64_t>(mulmod_u64(result, mulmod_u64(num, invmod_i64(den, p), p), p));
        n /= p;
        k /= p;
    }
    return result;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

uint64_t order_mod(uint64_t a, uint64_t m) {
    if (m <= 1 || gcd_u64(a % m, m) != 1) fail(ErrorCode::bad_input, "order_mod: a not a unit");
    uint64_t x = a % m, ord = 1;
    while (x != 1) {
        x = mulmod_u64(x, a % m, m);
        ++ord;
    }
    return ord;
}

}  // namespace fermat
