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

#ifndef FERMAT_CYCLOTOMIC_HPP
#define FERMAT_CYCLOTOMIC_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fermat/numeric.hpp"

namespace fermat {

// Exact arithmetic in Z[x]/(Phi_m), the ring of m-th cyclotomic integers.
// Elements are kept reduced modulo the cyclotomic polynomial so that
// rational integers are recognized canonically (degree-0 representatives).
class Cyclotomic {
  public:
    explicit Cyclotomic(int64_t m);

    int64_t conductor() const { return m_; }

    std::vector<int64_t> zero() const { return std::vector<int64_t>(phi_, 0); }
    std::vector<int64_t> from_int(int64_t v) const;
    std::vector<int64_t> root_power(int64_t e) const;  // x^e reduced

    std::vector<int64_t> add(const std::vector<int64_t>& a, const std::vector<int64_t>& b) const;
    std::vector<int64_t> mul(const std::vector<int64_t>& a, const std::vector<int64_t>& b) const;
    std::vector<int64_t> scale(const std::vector<int64_t>& a, int64_t c) const;

    bool is_zero(const std::vector<int64_t>& a) const;

    // Integer value when the element is rational, otherwise nullopt.
    std::optional<int64_t> as_integer(const std::vector<int64_t>& a) const;

  private:
    void reduce(std::vector<int64_t>& a) const;

    int64_t m_;
    size_t phi_;
    std::vector<int64_t> phi_poly_;           // Phi_m, ascending, monic
    std::vector<std::vector<int64_t>> xpow_;  // x^e mod Phi_m for e < m
};

}  // namespace fermat

#endif  // FERMAT_CYCLOTOMIC_HPP
