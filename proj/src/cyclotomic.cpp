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

#include "fermat/cyclotomic.hpp"

#include "fermat/field.hpp"

namespace fermat {

Cyclotomic::Cyclotomic(int64_t m) : m_(m) {
    if (m < 1) fail(ErrorCode::bad_input, "Cyclotomic: m >= 1 required");
    phi_poly_ = poly::cyclotomic(m);
    phi_ = phi_poly_.size() - 1;
    xpow_.resize(m);
    // x^e mod Phi_m, iteratively: multiply by x and reduce by the monic modulus
    std::vector<int64_t> cur(phi_, 0);
    if (phi_ > 0) cur[0] = 1;
    for (int64_t e = 0; e < m; ++e) {
        xpow_[e] = cur;
        std::vector<int64_t> next(phi_, 0);
        int64_t top = phi_ > 0 ? cur[phi_ - 1] : 0;
        for (size_t i = phi_; i-- > 1;) next[i] = cur[i - 1];
        if (top != 0)
            for (size_t i = 0; i < phi_; ++i) next[i] -= top * phi_poly_[i];
        cur = std::move(next);
    }
}

std::vector<int64_t> Cyclotomic::from_int(int64_t v) const {
    std::vector<int64_t> a(phi_, 0);
    if (phi_ > 0) a[0] = v;
    return a;
}

std::vector<int64_t> Cyclotomic::root_power(int64_t e) const {
    e %= m_;
    if (e < 0) e += m_;
    return xpow_[e];
}

std::vector<int64_t> Cyclotomic::add(const std::vector<int64_t>& a, const std::vector<int64_t>& b) const {
    std::vector<int64_t> r(phi_, 0);
    for (size_t i = 0; i < phi_; ++i) r[i] = a[i] + b[i];
    return r;
}

std::vector<int64_t> Cyclotomic::scale(const std::vector<int64_t>& a, int64_t c) const {
    std::vector<int64_t> r(phi_, 0);
    for (size_t i = 0; i < phi_; ++i) r[i] = a[i] * c;
    return r;
}

void Cyclotomic::reduce(std::vector<int64_t>& a) const {
    // a has degree < 2 phi; fold down by the monic modulus
    for (size_t i = a.size(); i-- > phi_;) {
        int64_t c = a[i];
        if (c != 0)
            for (size_t j = 0; j <= phi_; ++j) a[i - phi_ + j] -= c * phi_poly_[j];
    }
    a.resize(phi_);
}

std::vector<int64_t> Cyclotomic::mul(const std::vector<int64_t>& a, const std::vector<int64_t>& b) const {
    std::vector<int64_t> r(2 * phi_, 0);
    for (size_t i = 0; i < phi_; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < phi_; ++j) r[i + j] += a[i] * b[j];
    }
    reduce(r);
    return r;
}

bool Cyclotomic::is_zero(const std::vector<int64_t>& a) const {
    for (int64_t c : a)
        if (c != 0) return false;
    return true;
}

std::optional<int64_t> Cyclotomic::as_integer(const std::vector<int64_t>& a) const {
    for (size_t i = 1; i < phi_; ++i)
        if (a[i] != 0) return std::nullopt;
    return phi_ > 0 ? a[0] : 0;
}

}  // namespace fermat
