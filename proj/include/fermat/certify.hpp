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

#ifndef FERMAT_CERTIFY_HPP
#define FERMAT_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "fermat/charp.hpp"
#include "fermat/linalg.hpp"

namespace fermat {

// One line of the shipped cover table: the supersingular cover of degree rm,
// the primes ell it serves, the field polynomial and the special pairs, as
// coefficient vectors in powers of gamma (constant first).
struct TableRow {
    int64_t m = 0;
    int64_t r = 0;
    uint64_t q = 0;
    int64_t p = 0;
    int n = 0;
    std::vector<int64_t> ells;
    std::vector<int64_t> f;
    std::vector<std::pair<std::vector<int64_t>, std::vector<int64_t>>> pairs;
};

std::vector<TableRow> load_table(const std::string& path);
std::vector<TableRow> table_rows_for_degree(const std::vector<TableRow>& table, int64_t m);
std::string default_table_path();

enum class CertMode { duality, discriminant };
enum class Verdict { generated, inconclusive, failed };

std::string to_string(Verdict v);
std::string to_string(CertMode m);

// Randomized-batch schedule of the kernel refinement. batch0 = 0 picks the
// default 4m; batches double up to batch_cap (0 = default 16m) so at most
// O(m) columns are live at a time.
struct Schedule {
    int64_t batch0 = 0;
    int64_t batch_cap = 0;
    int stall_limit = 3;   // stalled batches before moving to the next pair
    int max_pairs = 4;     // pair attempts per ell when searching
};

struct CertificationConfig {
    int64_t m = 0;
    CertMode mode = CertMode::duality;
    std::vector<TableRow> pinned;   // table rows fixing f and the pairs; empty = search
    std::vector<int64_t> ells;      // empty = all primes dividing m
    uint64_t seed = 1;
    Schedule schedule;
};

struct PairReport {
    std::vector<int64_t> alpha;  // gamma-coefficient form
    std::vector<int64_t> beta;
};

struct EllReport {
    int64_t ell = 0;
    std::vector<size_t> trace;  // kernel dimension after init and each refinement
    int pairs_used = 0;
};

struct DiscReport {
    Bint disc_lines;   // characteristic-zero line lattice
    Bint disc_mixed;   // mixed lattice on the supersingular reduction
    std::string disc_lines_factored;
    std::string disc_mixed_factored;
};

struct Certificate {
    int schema_version = 1;
    int64_t m = 0;
    CertMode mode = CertMode::duality;
    CoverParams cover;
    std::vector<int64_t> f;
    bool f_from_table = false;
    std::vector<PairReport> pairs;
    std::vector<EllReport> per_ell;
    std::optional<DiscReport> discs;
    Verdict verdict = Verdict::failed;
    uint64_t seed = 0;
    Schedule schedule;
    int64_t elapsed_ms = 0;
};

std::string certificate_to_json(const Certificate& cert);

// The F_ell-duality pipeline: refine the kernel of Gram(B) mod ell by random
// batches of orbit-pairing columns until it vanishes for every ell | m.
Certificate certify_duality(const CertificationConfig& config);

// The full-discriminant pipeline for m in {4, 5, 7, 11, 13}: exact disc of
// the line lattice against the published mixed basis mod p, then the
// squarefree-gcd criterion. Throws oracle_mismatch if either discriminant
// differs from the published value.
Certificate certify_discriminant(int64_t m);

// certify_duality pinned to the shipped table row(s) for m.
Certificate reproduce_table_row(int64_t m, const std::string& table_path = default_table_path(),
                                uint64_t seed = 1);

// Self-test of the lattice-theoretic criteria on synthetic lattices.
struct ToolkitReport {
    std::vector<std::string> lines;
    int failures = 0;
};
ToolkitReport primitivity_toolkit(uint64_t seed = 1);

// Published mixed-basis index set for the quintic (nu values of section 6.2)
// and the nu numbering scheme shared by degrees 7, 11, 13.
extern const std::vector<int64_t> kQuinticIndexSet;
std::array<int64_t, 3> mixed_basis_triple(int64_t nu, int64_t m, int64_t b2);
int64_t mixed_basis_multiplier(int64_t m);  // 31, 253, 5 for m = 7, 11, 13

// Replication targets: the published discriminants of the line lattice, the
// mixed lattice on the reduction, and the full pushforward basis.
Bint published_line_disc(int64_t m);
Bint published_mixed_disc(int64_t m);
Bint published_pushdown_basis_disc(int64_t m);  // m in {7, 11, 13}

// Exact Gram determinant of the full pushforward basis (the b2 divisors
// D(nu)); the slow replication suite checks it against the published value.
Bint pushdown_basis_disc(int64_t m);

}  // namespace fermat

#endif  // FERMAT_CERTIFY_HPP
