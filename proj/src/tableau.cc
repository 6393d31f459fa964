// Copyright 2026 The Telesim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "telesim/tableau.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace telesim {

namespace {

std::atomic<bool> g_debug_validation{false};

// i-exponent (mod 4) of the literal Pauli product P(a)*P(b), word-parallel.
// +1 bits: (X,Y), (Y,Z), (Z,X); -1 bits: (Y,X), (Z,Y), (X,Z).
inline void product_phase_words(
    uint64_t ax, uint64_t az, uint64_t bx, uint64_t bz, int &plus, int &minus) {
    uint64_t p = (ax & ~az & bx & bz) | (ax & az & ~bx & bz) | (~ax & az & bx & ~bz);
    uint64_t m = (bx & ~bz & ax & az) | (bx & bz & ~ax & az) | (~bx & bz & ax & ~az);
    plus += std::popcount(p);
    minus += std::popcount(m);
}

// dst <- src * dst over raw rows; returns the new sign bit. Phase exponent
// must come out real (0 or 2 mod 4) or the rows were not a valid pair.
inline uint8_t mult_rows(
    uint64_t *dst_x, uint64_t *dst_z, uint8_t dst_sign,
    const uint64_t *src_x, const uint64_t *src_z, uint8_t src_sign,
    size_t words) {
    int plus = 0, minus = 0;
    for (size_t w = 0; w < words; w++) {
        product_phase_words(src_x[w], src_z[w], dst_x[w], dst_z[w], plus, minus);
        dst_x[w] ^= src_x[w];
        dst_z[w] ^= src_z[w];
    }
    int e = ((plus - minus) % 4 + 4) % 4;
    e = (e + 2 * (dst_sign + src_sign)) % 4;
    assert(e == 0 || e == 2);
    return static_cast<uint8_t>(e / 2);
}

inline bool rows_anticommute(
    const uint64_t *ax, const uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t words) {
    uint64_t acc = 0;
    for (size_t w = 0; w < words; w++) {
        acc ^= (ax[w] & bz[w]) ^ (az[w] & bx[w]);
    }
    return std::popcount(acc) % 2 != 0;
}

size_t gf2_rank(std::vector<uint64_t> &rows, size_t n_rows, size_t words, size_t n_cols) {
    size_t rank = 0;
    for (size_t col = 0; col < n_cols && rank < n_rows; col++) {
        size_t w = col / 64;
        uint64_t mask = 1ULL << (col % 64);
        size_t pivot = n_rows;
        for (size_t r = rank; r < n_rows; r++) {
            if (rows[r * words + w] & mask) {
                pivot = r;
                break;
            }
        }
        if (pivot == n_rows) {
            continue;
        }
        for (size_t k = 0; k < words; k++) {
            std::swap(rows[rank * words + k], rows[pivot * words + k]);
        }
        for (size_t r = 0; r < n_rows; r++) {
            if (r != rank && (rows[r * words + w] & mask)) {
                for (size_t k = 0; k < words; k++) {
                    rows[r * words + k] ^= rows[rank * words + k];
                }
            }
        }
        rank++;
    }
    return rank;
}

}  // namespace

void set_debug_validation(bool enabled) {
    g_debug_validation.store(enabled, std::memory_order_relaxed);
}

bool debug_validation_enabled() {
    return g_debug_validation.load(std::memory_order_relaxed);
}

StabilizerTableau::StabilizerTableau(size_t n_qubits) : n_(n_qubits), words_((n_qubits + 63) / 64) {
    if (n_ == 0) {
        throw std::invalid_argument("StabilizerTableau: need at least one qubit");
    }
    xs_.assign(2 * n_ * words_, 0);
    zs_.assign(2 * n_ * words_, 0);
    signs_.assign(2 * n_, 0);
    for (size_t i = 0; i < n_; i++) {
        xs_[i * words_ + i / 64] |= 1ULL << (i % 64);            // destabilizer X_i
        zs_[(n_ + i) * words_ + i / 64] |= 1ULL << (i % 64);     // stabilizer Z_i
    }
}

void StabilizerTableau::h(size_t q) {
    if (q >= n_) {
        throw std::out_of_range("h: qubit out of range");
    }
    size_t w = q / 64;
    uint64_t mask = 1ULL << (q % 64);
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t &x = xs_[r * words_ + w];
        uint64_t &z = zs_[r * words_ + w];
        signs_[r] ^= static_cast<uint8_t>(((x & z & mask) != 0));
        uint64_t xb = x & mask, zb = z & mask;
        x = (x & ~mask) | zb;
        z = (z & ~mask) | xb;
    }
    if (debug_validation_enabled()) {
        validate();
    }
}

void StabilizerTableau::s(size_t q) {
    if (q >= n_) {
        throw std::out_of_range("s: qubit out of range");
    }
    size_t w = q / 64;
    uint64_t mask = 1ULL << (q % 64);
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t x = xs_[r * words_ + w];
        uint64_t &z = zs_[r * words_ + w];
        signs_[r] ^= static_cast<uint8_t>(((x & z & mask) != 0));
        z ^= x & mask;
    }
    if (debug_validation_enabled()) {
        validate();
    }
}

void StabilizerTableau::x(size_t q) {
    if (q >= n_) {
        throw std::out_of_range("x: qubit out of range");
    }
    size_t w = q / 64;
    uint64_t mask = 1ULL << (q % 64);
    for (size_t r = 0; r < 2 * n_; r++) {
        signs_[r] ^= static_cast<uint8_t>((zs_[r * words_ + w] & mask) != 0);
    }
}

void StabilizerTableau::z(size_t q) {
    if (q >= n_) {
        throw std::out_of_range("z: qubit out of range");
    }
    size_t w = q / 64;
    uint64_t mask = 1ULL << (q % 64);
    for (size_t r = 0; r < 2 * n_; r++) {
        signs_[r] ^= static_cast<uint8_t>((xs_[r * words_ + w] & mask) != 0);
    }
}

void StabilizerTableau::cnot(size_t control, size_t target) {
    if (control >= n_ || target >= n_) {
        throw std::out_of_range("cnot: qubit out of range");
    }
    if (control == target) {
        throw std::invalid_argument("cnot: control == target");
    }
    size_t wc = control / 64, wt = target / 64;
    uint64_t mc = 1ULL << (control % 64), mt = 1ULL << (target % 64);
    for (size_t r = 0; r < 2 * n_; r++) {
        bool xc = xs_[r * words_ + wc] & mc;
        bool zc = zs_[r * words_ + wc] & mc;
        bool xt = xs_[r * words_ + wt] & mt;
        bool zt = zs_[r * words_ + wt] & mt;
        signs_[r] ^= static_cast<uint8_t>(xc && zt && (xt == zc));
        if (xc) {
            xs_[r * words_ + wt] ^= mt;
        }
        if (zt) {
            zs_[r * words_ + wc] ^= mc;
        }
    }
    if (debug_validation_enabled()) {
        validate();
    }
}

void StabilizerTableau::conjugate_pair(
    size_t i, size_t j, const uint8_t new_bits[16], const uint8_t sign_flips[16]) {
    if (i == j) {
        throw std::invalid_argument("conjugate_pair: qubits must differ");
    }
    if (i >= n_ || j >= n_) {
        throw std::out_of_range("conjugate_pair: qubit out of range");
    }
    size_t wi = i / 64, wj = j / 64;
    uint64_t mi = 1ULL << (i % 64), mj = 1ULL << (j % 64);
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t &xi = xs_[r * words_ + wi];
        uint64_t &zi = zs_[r * words_ + wi];
        uint64_t &xj = xs_[r * words_ + wj];
        uint64_t &zj = zs_[r * words_ + wj];
        uint8_t w = static_cast<uint8_t>(
            ((xi & mi) ? 1 : 0) | ((zi & mi) ? 2 : 0) | ((xj & mj) ? 4 : 0) | ((zj & mj) ? 8 : 0));
        if (w == 0) {
            continue;
        }
        uint8_t nb = new_bits[w];
        xi = (xi & ~mi) | ((nb & 1) ? mi : 0);
        zi = (zi & ~mi) | ((nb & 2) ? mi : 0);
        xj = (xj & ~mj) | ((nb & 4) ? mj : 0);
        zj = (zj & ~mj) | ((nb & 8) ? mj : 0);
        signs_[r] ^= sign_flips[w];
    }
}

void StabilizerTableau::mult_left(size_t dst_row, size_t src_row) {
    signs_[dst_row] = mult_rows(
        xs_.data() + dst_row * words_, zs_.data() + dst_row * words_, signs_[dst_row],
        xs_.data() + src_row * words_, zs_.data() + src_row * words_, signs_[src_row], words_);
}

bool StabilizerTableau::is_deterministic_z(size_t q) const {
    if (q >= n_) {
        throw std::out_of_range("is_deterministic_z: qubit out of range");
    }
    size_t w = q / 64;
    uint64_t mask = 1ULL << (q % 64);
    for (size_t r = n_; r < 2 * n_; r++) {
        if (xs_[r * words_ + w] & mask) {
            return false;
        }
    }
    return true;
}

bool StabilizerTableau::measure_z(size_t q, Rng &rng) {
    if (q >= n_) {
        throw std::out_of_range("measure_z: qubit out of range");
    }
    size_t w = q / 64;
    uint64_t mask = 1ULL << (q % 64);

    size_t pivot = 2 * n_;
    for (size_t r = n_; r < 2 * n_; r++) {
        if (xs_[r * words_ + w] & mask) {
            pivot = r;
            break;
        }
    }

    if (pivot < 2 * n_) {
        // Random outcome: Z_q anticommutes with the pivot stabilizer.
        bool outcome = rng.bit();
        for (size_t r = 0; r < 2 * n_; r++) {
            if (r != pivot && (xs_[r * words_ + w] & mask)) {
                mult_left(r, pivot);
            }
        }
        // Old pivot becomes the matching destabilizer; Z_q (with the
        // outcome sign) takes its stabilizer slot.
        size_t d = pivot - n_;
        for (size_t k = 0; k < words_; k++) {
            xs_[d * words_ + k] = xs_[pivot * words_ + k];
            zs_[d * words_ + k] = zs_[pivot * words_ + k];
            xs_[pivot * words_ + k] = 0;
            zs_[pivot * words_ + k] = 0;
        }
        signs_[d] = signs_[pivot];
        zs_[pivot * words_ + w] = mask;
        signs_[pivot] = outcome ? 1 : 0;
        if (debug_validation_enabled()) {
            validate();
        }
        return outcome;
    }

    // Deterministic outcome: accumulate the stabilizer-group expression of
    // Z_q via the destabilizer bits.
    std::vector<uint64_t> sx(words_, 0), sz(words_, 0);
    uint8_t sign = 0;
    for (size_t i = 0; i < n_; i++) {
        if (xs_[i * words_ + w] & mask) {
            sign = mult_rows(
                sx.data(), sz.data(), sign,
                xs_.data() + (n_ + i) * words_, zs_.data() + (n_ + i) * words_, signs_[n_ + i], words_);
        }
    }
    return sign != 0;
}

size_t StabilizerTableau::entropy_bits(std::span<const size_t> subset) const {
    if (subset.empty()) {
        throw std::invalid_argument("entropy_bits: empty subset");
    }
    std::vector<size_t> qs(subset.begin(), subset.end());
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    if (qs.size() != subset.size()) {
        throw std::invalid_argument("entropy_bits: duplicate qubit in subset");
    }
    if (qs.back() >= n_) {
        throw std::out_of_range("entropy_bits: qubit out of range");
    }

    size_t k = qs.size();
    size_t cols = 2 * k;
    size_t ww = (cols + 63) / 64;
    std::vector<uint64_t> rows(n_ * ww, 0);
    for (size_t r = 0; r < n_; r++) {
        for (size_t idx = 0; idx < k; idx++) {
            size_t q = qs[idx];
            if (x_bit(n_ + r, q)) {
                rows[r * ww + (2 * idx) / 64] |= 1ULL << ((2 * idx) % 64);
            }
            if (z_bit(n_ + r, q)) {
                rows[r * ww + (2 * idx + 1) / 64] |= 1ULL << ((2 * idx + 1) % 64);
            }
        }
    }
    size_t rank = gf2_rank(rows, n_, ww, cols);
    return rank - k;
}

void StabilizerTableau::validate() const {
    auto xr = [&](size_t r) { return xs_.data() + r * words_; };
    auto zr = [&](size_t r) { return zs_.data() + r * words_; };

    for (size_t i = 0; i < n_; i++) {
        for (size_t j = i; j < n_; j++) {
            if (rows_anticommute(xr(n_ + i), zr(n_ + i), xr(n_ + j), zr(n_ + j), words_)) {
                throw std::logic_error("tableau: stabilizer rows anticommute");
            }
            if (rows_anticommute(xr(i), zr(i), xr(j), zr(j), words_)) {
                throw std::logic_error("tableau: destabilizer rows anticommute");
            }
        }
    }
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = 0; j < n_; j++) {
            bool anti = rows_anticommute(xr(i), zr(i), xr(n_ + j), zr(n_ + j), words_);
            if (anti != (i == j)) {
                throw std::logic_error("tableau: destabilizer pairing broken");
            }
        }
    }
    // Independence: the n stabilizer rows must have full rank over GF(2).
    size_t cols = 2 * n_;
    size_t ww = (cols + 63) / 64;
    std::vector<uint64_t> rows(n_ * ww, 0);
    for (size_t r = 0; r < n_; r++) {
        for (size_t q = 0; q < n_; q++) {
            if (x_bit(n_ + r, q)) {
                rows[r * ww + (2 * q) / 64] |= 1ULL << ((2 * q) % 64);
            }
            if (z_bit(n_ + r, q)) {
                rows[r * ww + (2 * q + 1) / 64] |= 1ULL << ((2 * q + 1) % 64);
            }
        }
    }
    if (gf2_rank(rows, n_, ww, cols) != n_) {
        throw std::logic_error("tableau: stabilizer rows not independent");
    }
}

void entangle_reference(StabilizerTableau &state, size_t ref_q, size_t sys_q) {
    if (ref_q == sys_q) {
        throw std::invalid_argument("entangle_reference: qubits must differ");
    }
    state.h(ref_q);
    state.cnot(ref_q, sys_q);
}

bool same_state(const StabilizerTableau &a, const StabilizerTableau &b) {
    if (a.n_qubits() != b.n_qubits()) {
        return false;
    }
    size_t n = a.n_qubits();
    size_t words = (n + 63) / 64;

    // Phase-tracked RREF of a's stabilizer rows, then reduce each b row
    // against it. Membership (bits reduce to zero) with final sign + on
    // every generator of b means identical groups.
    struct Row {
        std::vector<uint64_t> x, z;
        uint8_t sign;
    };
    std::vector<Row> basis;
    basis.reserve(n);
    for (size_t r = 0; r < n; r++) {
        Row row;
        row.x.assign(a.x_row(n + r).begin(), a.x_row(n + r).end());
        row.z.assign(a.z_row(n + r).begin(), a.z_row(n + r).end());
        row.sign = a.sign_bit(n + r);
        basis.push_back(std::move(row));
    }
    auto bit_at = [&](const Row &row, size_t col) {
        // Columns interleave x and z bits per qubit.
        size_t q = col / 2;
        const auto &v = (col % 2 == 0) ? row.x : row.z;
        return (v[q / 64] >> (q % 64)) & 1ULL;
    };
    std::vector<size_t> pivot_col(n, 0);
    size_t rank = 0;
    for (size_t col = 0; col < 2 * n && rank < n; col++) {
        size_t pivot = n;
        for (size_t r = rank; r < n; r++) {
            if (bit_at(basis[r], col)) {
                pivot = r;
                break;
            }
        }
        if (pivot == n) {
            continue;
        }
        std::swap(basis[rank], basis[pivot]);
        for (size_t r = 0; r < n; r++) {
            if (r != rank && bit_at(basis[r], col)) {
                basis[r].sign = mult_rows(
                    basis[r].x.data(), basis[r].z.data(), basis[r].sign,
                    basis[rank].x.data(), basis[rank].z.data(), basis[rank].sign, words);
            }
        }
        pivot_col[rank] = col;
        rank++;
    }

    for (size_t rb = 0; rb < n; rb++) {
        Row row;
        row.x.assign(b.x_row(n + rb).begin(), b.x_row(n + rb).end());
        row.z.assign(b.z_row(n + rb).begin(), b.z_row(n + rb).end());
        row.sign = b.sign_bit(n + rb);
        for (size_t r = 0; r < rank; r++) {
            if (bit_at(row, pivot_col[r])) {
                row.sign = mult_rows(
                    row.x.data(), row.z.data(), row.sign,
                    basis[r].x.data(), basis[r].z.data(), basis[r].sign, words);
            }
        }
        bool zero = true;
        for (size_t w = 0; w < words; w++) {
            zero = zero && row.x[w] == 0 && row.z[w] == 0;
        }
        if (!zero || row.sign != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace telesim
