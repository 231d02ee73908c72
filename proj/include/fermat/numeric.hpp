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

#ifndef FERMAT_NUMERIC_HPP
#define FERMAT_NUMERIC_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fermat {

using Bint = boost::multiprecision::cpp_int;

// Error taxonomy shared by all modules. Codes rather than exception
// subclasses: callers dispatch on the code, messages carry the detail.
enum class ErrorCode {
    bad_characteristic,
    coincident_line,
    degree_mismatch,
    dimension_mismatch,
    missing_root_of_unity,
    no_pair_found,
    not_decomposable_for_family,
    not_irreducible,
    not_square,
    not_supersingular_pair,
    oracle_mismatch,
    root_extraction_failed,
    root_order_mismatch,
    row_not_found,
    search_limit_exceeded,
    unsupported_degree,
    validation_failed,
    zero_coordinate,
    zero_discriminant,
    zero_element,
    bad_input,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

// ---------------------------------------------------------------------------
// Seeded PRNG (splitmix64). Used for every randomized choice in the project
// so that certificates replay bit-for-bit from a 64-bit seed.
// ---------------------------------------------------------------------------
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound > 0.
    uint64_t below(uint64_t bound) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

  private:
    uint64_t state_;
};

// ---------------------------------------------------------------------------
// Word-size modular arithmetic
// ---------------------------------------------------------------------------
inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

int64_t invmod_i64(int64_t a, int64_t m);  // a invertible mod m required

// Montgomery arithmetic for a fixed odd modulus < 2^62. The exact
// determinant engine spends nearly all of its time in this multiply.
class Montgomery {
  public:
    explicit Montgomery(uint64_t modulus);

    uint64_t modulus() const { return n_; }
    uint64_t to(uint64_t x) const { return mul(x % n_, r2_); }
    uint64_t from(uint64_t x) const { return reduce(static_cast<unsigned __int128>(x)); }

    uint64_t mul(uint64_t a, uint64_t b) const { return reduce(static_cast<unsigned __int128>(a) * b); }

    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= n_ ? s - n_ : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + n_ - b; }

    uint64_t pow(uint64_t a, uint64_t e) const;  // a in Montgomery form
    uint64_t inv(uint64_t a) const { return pow(a, n_ - 2); }  // prime modulus
    uint64_t one() const { return one_; }

  private:
    uint64_t reduce(unsigned __int128 t) const {
        uint64_t m = static_cast<uint64_t>(t) * ninv_;
        unsigned __int128 u = (t + static_cast<unsigned __int128>(m) * n_) >> 64;
        uint64_t r = static_cast<uint64_t>(u);
        return r >= n_ ? r - n_ : r;
    }

    uint64_t n_, ninv_, r2_, one_;
};

// ---------------------------------------------------------------------------
// Primality, factorization, prime powers
// ---------------------------------------------------------------------------

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(uint64_t n);

// Miller-Rabin on big integers with the fixed witness set
// {2,...,37}; deterministic for n < 3.3e24, which covers every
// integer this project must certify as prime.
bool is_probable_prime(const Bint& n);

// Next prime strictly below x (x > 3).
uint64_t prev_prime_u64(uint64_t x);

// q = p^n with p prime, n >= 1?
std::optional<std::pair<uint64_t, unsigned>> as_prime_power(uint64_t q);

// Floor of the e-th root.
Bint iroot(const Bint& n, unsigned e);

struct Factorization {
    std::vector<std::pair<Bint, unsigned>> factors;  // prime -> exponent
    Bint cofactor = 1;  // composite remainder the trial-division cap left behind; 1 if fully factored
    bool complete() const { return cofactor == 1; }
};

// Trial division up to `cap`, then perfect-power extraction and a
// primality check on what is left. Never mislabels: anything not
// certified prime stays in `cofactor`.
Factorization factorize(Bint n, uint64_t cap = 10'000'000);

std::string factorization_to_string(const Factorization& f);

// Prime divisors of a small integer (trial division; m fits in 64 bits).
std::vector<uint64_t> prime_divisors_u64(uint64_t m);

// Binomial coefficient mod p via Lucas.
int64_t binomial_mod_p(uint64_t n, uint64_t k, int64_t p);

// Multiplicative order of a mod m, gcd(a, m) = 1.
uint64_t order_mod(uint64_t a, uint64_t m);

uint64_t gcd_u64(uint64_t a, uint64_t b);

}  // namespace fermat

#endif  // FERMAT_NUMERIC_HPP
