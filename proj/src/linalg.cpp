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

#include "fermat/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

namespace fermat {

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ModMatrix ModMatrix::reduce(const IntMatrix& M, uint64_t ell) {
    ModMatrix out(M.rows(), M.cols(), ell);
    Bint e(ell);
    for (size_t i = 0; i < M.rows(); ++i)
        for (size_t j = 0; j < M.cols(); ++j) {
            Bint r = M.at(i, j) % e;
            if (r < 0) r += e;
            out.at(i, j) = static_cast<int64_t>(r);
        }
    return out;
}

size_t worker_count() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

namespace {

// Determinant of an int64 snapshot mod one prime, Montgomery arithmetic.
uint64_t det_mod_i64(const std::vector<int64_t>& entries, size_t n, uint64_t p) {
    Montgomery mg(p);
    std::vector<uint64_t> a(n * n);
    for (size_t i = 0; i < n * n; ++i) {
        int64_t v = entries[i] % static_cast<int64_t>(p);
        if (v < 0) v += static_cast<int64_t>(p);
        a[i] = mg.to(static_cast<uint64_t>(v));
    }
    uint64_t det = mg.one();
    bool negate = false;
    for (size_t c = 0; c < n; ++c) {
        size_t pivot = c;
        while (pivot < n && a[pivot * n + c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            for (size_t j = c; j < n; ++j) std::swap(a[pivot * n + j], a[c * n + j]);
            negate = !negate;
        }
        uint64_t pv = a[c * n + c];
        det = mg.mul(det, pv);
        uint64_t pv_inv = mg.inv(pv);
        for (size_t i = c + 1; i < n; ++i) {
            uint64_t f = a[i * n + c];
            if (f == 0) continue;
            f = mg.mul(f, pv_inv);
            const uint64_t* src = &a[c * n];
            uint64_t* dst = &a[i * n];
            for (size_t j = c + 1; j < n; ++j) dst[j] = mg.sub(dst[j], mg.mul(f, src[j]));
            dst[c] = 0;
        }
    }
    uint64_t d = mg.from(det);
    return negate ? (d == 0 ? 0 : p - d) : d;
}

// Generic-entry fallback when some entry does not fit int64.
uint64_t det_mod_big(const IntMatrix& M, uint64_t p) {
    size_t n = M.rows();
    std::vector<int64_t> snap(n * n);
    Bint bp(p);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Bint r = M.at(i, j) % bp;
            if (r < 0) r += bp;
            snap[i * n + j] = static_cast<int64_t>(r);
        }
    return det_mod_i64(snap, n, p);
}

bool snapshot_i64(const IntMatrix& M, std::vector<int64_t>& out) {
    size_t n = M.rows();
    out.resize(n * M.cols());
    for (size_t i = 0; i < M.rows(); ++i)
        for (size_t j = 0; j < M.cols(); ++j) {
            const Bint& v = M.at(i, j);
            if (v > std::numeric_limits<int64_t>::max() || v < std::numeric_limits<int64_t>::min()) return false;
            out[i * M.cols() + j] = static_cast<int64_t>(v);
        }
    return true;
}

template <typename Fn>
void parallel_for(size_t count, Fn&& fn) {
    size_t workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace

uint64_t det_mod(const IntMatrix& M, uint64_t p) {
    if (M.rows() != M.cols()) fail(ErrorCode::not_square, "det_mod: matrix not square");
    if (!is_prime_u64(p)) fail(ErrorCode::bad_input, "det_mod: modulus must be prime");
    if (p == 2) {  // Montgomery needs an odd modulus
        // elimination over F_2 directly
        size_t n = M.rows();
        std::vector<uint8_t> a(n * n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) a[i * n + j] = static_cast<uint8_t>(M.at(i, j) % 2 != 0);
        for (size_t c = 0; c < n; ++c) {
            size_t pivot = c;
            while (pivot < n && !a[pivot * n + c]) ++pivot;
            if (pivot == n) return 0;
            if (pivot != c)
                for (size_t j = c; j < n; ++j) std::swap(a[pivot * n + j], a[c * n + j]);
            for (size_t i = c + 1; i < n; ++i)
                if (a[i * n + c])
                    for (size_t j = c; j < n; ++j) a[i * n + j] ^= a[c * n + j];
        }
        return 1;
    }
    std::vector<int64_t> snap;
    if (snapshot_i64(M, snap)) return det_mod_i64(snap, M.rows(), p);
    return det_mod_big(M, p);
}

Bint det_exact(const IntMatrix& M) {
    if (M.rows() != M.cols()) fail(ErrorCode::not_square, "det_exact: matrix not square");
    size_t n = M.rows();

    // Hadamard bound: |det|^2 <= prod of row norms squared
    Bint bound_sq = 1;
    for (size_t i = 0; i < n; ++i) {
        Bint row = 0;
        for (size_t j = 0; j < n; ++j) row += M.at(i, j) * M.at(i, j);
        if (row == 0) return 0;
        bound_sq *= row;
    }

    // primes descending from 2^62 until their product exceeds twice the bound
    std::vector<uint64_t> primes;
    Bint prime_prod = 1;
    uint64_t candidate = (1ULL << 62);
    while (prime_prod * prime_prod <= 4 * bound_sq) {
        candidate = prev_prime_u64(candidate);
        primes.push_back(candidate);
        prime_prod *= candidate;
    }
    assert(prime_prod * prime_prod > 4 * bound_sq);

    std::vector<int64_t> snap;
    bool small = snapshot_i64(M, snap);

    std::vector<uint64_t> residues(primes.size());
    parallel_for(primes.size(), [&](size_t i) {
        residues[i] = small ? det_mod_i64(snap, n, primes[i]) : det_mod_big(M, primes[i]);
    });

    // incremental CRT
    Bint x = 0, mod = 1;
    for (size_t i = 0; i < primes.size(); ++i) {
        Bint p(primes[i]);
        Bint r(residues[i]);
        // x' = x + mod * t with t = (r - x) / mod  (mod p)
        Bint diff = (r - x) % p;
        if (diff < 0) diff += p;
        uint64_t mod_p = static_cast<uint64_t>(mod % p);
        uint64_t t = mulmod_u64(static_cast<uint64_t>(diff),
                                powmod_u64(mod_p, primes[i] - 2, primes[i]), primes[i]);
        x += mod * t;
        mod *= p;
    }
    if (2 * x > mod) x -= mod;  // symmetric lift
    return x;
}

namespace {

// Row-reduce `a` (k x c) over F_ell carrying an identity block; rows of the
// carried block whose a-row vanished span the left kernel.
std::vector<std::vector<int64_t>> left_kernel(std::vector<std::vector<int64_t>> a, uint64_t ell) {
    size_t k = a.size();
    if (k == 0) return {};
    size_t c = a[0].size();
    int64_t p = static_cast<int64_t>(ell);
    std::vector<std::vector<int64_t>> id(k, std::vector<int64_t>(k, 0));
    for (size_t i = 0; i < k; ++i) id[i][i] = 1;

    size_t row = 0;
    for (size_t col = 0; col < c && row < k; ++col) {
        size_t pivot = row;
        while (pivot < k && a[pivot][col] == 0) ++pivot;
        if (pivot == k) continue;
        std::swap(a[pivot], a[row]);
        std::swap(id[pivot], id[row]);
        int64_t inv = invmod_i64(a[row][col], p);
        for (size_t i = row + 1; i < k; ++i) {
            if (a[i][col] == 0) continue;
            int64_t f = (a[i][col] * inv) % p;
            for (size_t j = col; j < c; ++j) a[i][j] = ((a[i][j] - f * a[row][j]) % p + p) % p;
            for (size_t j = 0; j < k; ++j) id[i][j] = ((id[i][j] - f * id[row][j]) % p + p) % p;
        }
        ++row;
    }
    std::vector<std::vector<int64_t>> kernel;
    for (size_t i = row; i < k; ++i) kernel.push_back(std::move(id[i]));
    return kernel;
}

}  // namespace

KernelState kernel_mod(const ModMatrix& M) {
    std::vector<std::vector<int64_t>> rows(M.rows(), std::vector<int64_t>(M.cols()));
    for (size_t i = 0; i < M.rows(); ++i)
        for (size_t j = 0; j < M.cols(); ++j) rows[i][j] = M.at(i, j);
    KernelState st;
    st.ell = M.modulus();
    st.ambient = M.rows();
    st.basis = left_kernel(std::move(rows), M.modulus());
    st.trace.push_back(st.basis.size());
    return st;
}

KernelState kernel_refine(const KernelState& state, const ModMatrix& columns) {
    if (columns.rows() != state.ambient)
        fail(ErrorCode::dimension_mismatch, "kernel_refine: column block has wrong ambient dimension");
    if (columns.modulus() != state.ell) fail(ErrorCode::dimension_mismatch, "kernel_refine: modulus mismatch");
    KernelState out;
    out.ell = state.ell;
    out.ambient = state.ambient;
    out.trace = state.trace;
    if (state.basis.empty()) {
        out.trace.push_back(0);
        return out;
    }
    size_t k = state.basis.size(), c = columns.cols();
    int64_t p = static_cast<int64_t>(state.ell);
    // restrict the new columns to the current kernel: T = basis * columns
    std::vector<std::vector<int64_t>> t(k, std::vector<int64_t>(c, 0));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < c; ++j) {
            int64_t acc = 0;
            for (size_t x = 0; x < state.ambient; ++x) {
                acc += state.basis[i][x] * columns.at(x, j) % p;
                if (acc >= (int64_t(1) << 60)) acc %= p;
            }
            t[i][j] = ((acc % p) + p) % p;
        }
    std::vector<std::vector<int64_t>> combos = left_kernel(std::move(t), state.ell);
    for (const auto& w : combos) {
        std::vector<int64_t> v(state.ambient, 0);
        for (size_t i = 0; i < k; ++i) {
            if (w[i] == 0) continue;
            for (size_t x = 0; x < state.ambient; ++x) v[x] = (v[x] + w[i] * state.basis[i][x]) % p;
        }
        out.basis.push_back(std::move(v));
    }
    out.trace.push_back(out.basis.size());
    return out;
}

size_t rank_mod(const ModMatrix& M) {
    std::vector<std::vector<int64_t>> rows(M.rows(), std::vector<int64_t>(M.cols()));
    for (size_t i = 0; i < M.rows(); ++i)
        for (size_t j = 0; j < M.cols(); ++j) rows[i][j] = M.at(i, j);
    size_t kernel_dim = left_kernel(std::move(rows), M.modulus()).size();
    return M.rows() - kernel_dim;
}

Squarefree squarefree_gcd_criterion(const Bint& d1, const Bint& d2) {
    if (d1 == 0 || d2 == 0) fail(ErrorCode::zero_discriminant, "squarefree_gcd_criterion: zero discriminant");
    Bint g = boost::multiprecision::gcd(boost::multiprecision::abs(d1), boost::multiprecision::abs(d2));
    if (g == 1) return Squarefree::yes;
    Factorization f = factorize(g);
    for (const auto& [p, e] : f.factors)
        if (e >= 2) return Squarefree::no;
    if (!f.complete()) {
        // a surviving composite cofactor is square-checked before giving up
        Bint root = iroot(f.cofactor, 2);
        if (root * root == f.cofactor) return Squarefree::no;
        return Squarefree::indeterminate;
    }
    return Squarefree::yes;
}

void write_matrix(std::ostream& os, const IntMatrix& M) {
    os << M.rows() << " " << M.cols() << "\n";
    for (size_t i = 0; i < M.rows(); ++i) {
        for (size_t j = 0; j < M.cols(); ++j) {
            if (j) os << " ";
            os << M.at(i, j);
        }
        os << "\n";
    }
}

IntMatrix read_matrix(std::istream& is) {
    size_t rows = 0, cols = 0;
    if (!(is >> rows >> cols) || rows == 0 || cols == 0)
        fail(ErrorCode::bad_input, "read_matrix: bad header");
    IntMatrix M(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            std::string tok;
            if (!(is >> tok)) fail(ErrorCode::bad_input, "read_matrix: truncated matrix");
            M.at(i, j) = Bint(tok);
        }
    return M;
}

}  // namespace fermat
