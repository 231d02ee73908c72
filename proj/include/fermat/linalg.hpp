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

#ifndef FERMAT_LINALG_HPP
#define FERMAT_LINALG_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fermat/numeric.hpp"

namespace fermat {

// Dense matrix of arbitrary-precision integers.
class IntMatrix {
  public:
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0) fail(ErrorCode::bad_input, "IntMatrix: dimensions must be positive");
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Bint& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Bint& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    static IntMatrix identity(size_t n);

  private:
    size_t rows_, cols_;
    std::vector<Bint> data_;
};

// Dense matrix over F_ell with canonical entries in [0, ell).
class ModMatrix {
  public:
    ModMatrix(size_t rows, size_t cols, uint64_t ell)
        : rows_(rows), cols_(cols), ell_(ell), data_(rows * cols, 0) {
        if (rows == 0 || cols == 0) fail(ErrorCode::bad_input, "ModMatrix: dimensions must be positive");
        if (!is_prime_u64(ell)) fail(ErrorCode::bad_input, "ModMatrix: modulus must be prime");
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    uint64_t modulus() const { return ell_; }

    int64_t& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    int64_t at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    void set(size_t i, size_t j, int64_t v) {
        int64_t ell = static_cast<int64_t>(ell_);
        data_[i * cols_ + j] = ((v % ell) + ell) % ell;
    }

    static ModMatrix reduce(const IntMatrix& M, uint64_t ell);

  private:
    size_t rows_, cols_;
    uint64_t ell_;
    std::vector<int64_t> data_;
};

// Basis of a subspace of F_ell^ambient, refined by intersecting with left
// kernels of successive column blocks. The dimension trace never increases.
struct KernelState {
    uint64_t ell = 0;
    size_t ambient = 0;
    std::vector<std::vector<int64_t>> basis;  // rows, each of length ambient
    std::vector<size_t> trace;                // dimension after each refinement

    size_t dimension() const { return basis.size(); }
};

// Exact determinant by CRT over word-size primes descending from 2^62;
// the prime product is checked against twice the Hadamard bound.
Bint det_exact(const IntMatrix& M);

// det(M) mod p by Gaussian elimination over F_p.
uint64_t det_mod(const IntMatrix& M, uint64_t p);

// Basis of the left kernel {v : v M = 0}; dimension = rows - rank.
KernelState kernel_mod(const ModMatrix& M);

// New state whose kernel is state's kernel intersected with the left kernel
// of `columns` (rows(columns) must equal state.ambient). Idempotent for
// repeated column blocks.
KernelState kernel_refine(const KernelState& state, const ModMatrix& columns);

size_t rank_mod(const ModMatrix& M);

enum class Squarefree { yes, no, indeterminate };

// Is gcd(|d1|, |d2|) squarefree? `indeterminate` when the factorization cap
// leaves a composite cofactor that could hide a square.
Squarefree squarefree_gcd_criterion(const Bint& d1, const Bint& d2);

// Plain-text matrix format: first line "rows cols", then one line per row.
void write_matrix(std::ostream& os, const IntMatrix& M);
IntMatrix read_matrix(std::istream& is);

// Internal parallel map used by det_exact; exposed for the tests.
size_t worker_count();

}  // namespace fermat

#endif  // FERMAT_LINALG_HPP
