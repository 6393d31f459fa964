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

#include "telesim/clifford2.h"

#include <stdexcept>

namespace telesim {

namespace {

// i-exponent of the literal single-qubit product P(a)*P(b), with codes
// 0=I, 1=X, 2=Z, 3=Y (code = x + 2z).
constexpr int8_t kMulPhase[4][4] = {
    // b:  I  X  Z  Y
    {0, 0, 0, 0},  // a = I
    {0, 0, 3, 1},  // a = X   (X*Z=-iY, X*Y=iZ)
    {0, 1, 0, 3},  // a = Z   (Z*X=iY,  Z*Y=-iX)
    {0, 3, 1, 0},  // a = Y   (Y*X=-iZ, Y*Z=iX)
};

inline int qubit_code(uint8_t bits, int qubit) {
    return (bits >> (2 * qubit)) & 3;  // x bit then z bit per qubit
}

// Multiply literal two-qubit Paulis: returns bits of the product and adds
// the i-exponent to `phase` (mod 4 kept by the caller).
inline uint8_t mul_bits(uint8_t a, uint8_t b, int &phase) {
    phase += kMulPhase[qubit_code(a, 0)][qubit_code(b, 0)];
    phase += kMulPhase[qubit_code(a, 1)][qubit_code(b, 1)];
    return a ^ b;
}

}  // namespace

TwoQubitClifford TwoQubitClifford::identity() {
    TwoQubitClifford g;
    g.images[0] = {0b0001, 0};  // X1
    g.images[1] = {0b0010, 0};  // Z1
    g.images[2] = {0b0100, 0};  // X2
    g.images[3] = {0b1000, 0};  // Z2
    return g;
}

Pauli2q TwoQubitClifford::conjugate(Pauli2q p) const {
    // Decompose the literal input as i^c * X1^x1 Z1^z1 X2^x2 Z2^z2 (c counts
    // Y factors), replace each generator by its image, and multiply back out
    // tracking the i-exponent. A valid Clifford maps Hermitian to Hermitian,
    // so the total exponent is 0 or 2 (the new sign).
    int phase = ((p.bits & 1) & (p.bits >> 1)) + ((p.bits >> 2) & (p.bits >> 3) & 1);
    phase += 2 * p.sign;
    uint8_t bits = 0;
    for (int k = 0; k < 4; k++) {
        if ((p.bits >> k) & 1) {
            bits = mul_bits(bits, images[k].bits, phase);
            phase += 2 * images[k].sign;
        }
    }
    phase = ((phase % 4) + 4) % 4;
    if (phase != 0 && phase != 2) {
        throw std::logic_error("TwoQubitClifford::conjugate: non-Hermitian image");
    }
    return {bits, static_cast<uint8_t>(phase / 2)};
}

TwoQubitClifford TwoQubitClifford::then(const TwoQubitClifford &second) const {
    TwoQubitClifford g;
    for (int k = 0; k < 4; k++) {
        g.images[k] = second.conjugate(images[k]);
    }
    return g;
}

TwoQubitClifford TwoQubitClifford::inverse() const {
    // Invert the 4x4 binary symplectic matrix whose columns are the image
    // bits, then fix each sign so that conjugating the candidate gives back
    // the generator with a + sign.
    uint8_t cols[4];
    for (int k = 0; k < 4; k++) {
        cols[k] = images[k].bits;
    }
    // Gauss-Jordan on [M | I] with vectors as bit rows of an 8-bit table.
    uint8_t m[4];  // row i of M (bit k = M[i][k])
    for (int i = 0; i < 4; i++) {
        uint8_t row = 0;
        for (int k = 0; k < 4; k++) {
            row |= static_cast<uint8_t>(((cols[k] >> i) & 1) << k);
        }
        m[i] = row;
    }
    uint8_t inv[4] = {1, 2, 4, 8};
    for (int col = 0; col < 4; col++) {
        int pivot = -1;
        for (int r = col; r < 4; r++) {
            if ((m[r] >> col) & 1) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            throw std::logic_error("TwoQubitClifford::inverse: singular matrix");
        }
        std::swap(m[col], m[pivot]);
        std::swap(inv[col], inv[pivot]);
        for (int r = 0; r < 4; r++) {
            if (r != col && ((m[r] >> col) & 1)) {
                m[r] ^= m[col];
                inv[r] ^= inv[col];
            }
        }
    }
    // Row i of inv = coordinates of the preimage of generator i.
    TwoQubitClifford g;
    for (int k = 0; k < 4; k++) {
        uint8_t pre_bits = 0;
        for (int j = 0; j < 4; j++) {
            if ((inv[k] >> j) & 1) {
                pre_bits ^= static_cast<uint8_t>(1 << j);
            }
        }
        // conjugate() is linear in the sign, so the sign of the preimage is
        // whatever makes the forward image come out +.
        Pauli2q candidate{pre_bits, 0};
        Pauli2q image = conjugate(candidate);
        g.images[k] = {pre_bits, image.sign};
    }
    return g;
}

bool TwoQubitClifford::is_symplectic() const {
    for (int a = 0; a < 4; a++) {
        if (images[a].bits == 0) {
            return false;
        }
        for (int b = a + 1; b < 4; b++) {
            // Generators (X1,Z1) and (X2,Z2) anticommute within a pair and
            // commute across pairs.
            int want = (a / 2 == b / 2) ? 1 : 0;
            if (symplectic_product(images[a], images[b]) != want) {
                return false;
            }
        }
    }
    return true;
}

uint32_t TwoQubitClifford::key() const {
    uint32_t k = 0;
    for (int i = 0; i < 4; i++) {
        k |= static_cast<uint32_t>(images[i].bits | (images[i].sign << 4)) << (5 * i);
    }
    return k;
}

TwoQubitClifford sample_clifford2(Rng &rng) {
    auto draw_bits = [&rng]() { return static_cast<uint8_t>(rng.below(16)); };

    TwoQubitClifford g;
    // X1 image: any non-identity Pauli.
    uint8_t a;
    do {
        a = draw_bits();
    } while (a == 0);
    // Z1 image: anticommutes with a (never 0: identity commutes).
    uint8_t b;
    do {
        b = draw_bits();
    } while (symplectic_product({a, 0}, {b, 0}) != 1);
    // X2 image: commutes with both; any nonzero solution is independent.
    uint8_t c;
    do {
        c = draw_bits();
    } while (c == 0 || symplectic_product({a, 0}, {c, 0}) != 0 ||
             symplectic_product({b, 0}, {c, 0}) != 0);
    // Z2 image: commutes with a and b, anticommutes with c.
    uint8_t d;
    do {
        d = draw_bits();
    } while (symplectic_product({a, 0}, {d, 0}) != 0 ||
             symplectic_product({b, 0}, {d, 0}) != 0 ||
             symplectic_product({c, 0}, {d, 0}) != 1);

    g.images[0] = {a, static_cast<uint8_t>(rng.bit())};
    g.images[1] = {b, static_cast<uint8_t>(rng.bit())};
    g.images[2] = {c, static_cast<uint8_t>(rng.bit())};
    g.images[3] = {d, static_cast<uint8_t>(rng.bit())};
    return g;
}

void apply_clifford2(StabilizerTableau &state, const TwoQubitClifford &gate, size_t i, size_t j) {
    size_t n = state.n_qubits();
    if (i == j) {
        throw std::invalid_argument("apply_clifford2: qubits must differ");
    }
    if (i >= n || j >= n) {
        throw std::out_of_range("apply_clifford2: qubit out of range");
    }

    // Conjugation acts the same way on every row; precompute the action on
    // all 16 window patterns once per gate application.
    uint8_t new_bits[16];
    uint8_t sign_flip[16];
    for (uint8_t b = 0; b < 16; b++) {
        Pauli2q r = gate.conjugate({b, 0});
        new_bits[b] = r.bits;
        sign_flip[b] = r.sign;
    }

    struct ColOps {
        // Scatter/gather for one qubit column handled via single-bit ops.
        size_t q;
    };
    for (size_t row = 0; row < 2 * n; row++) {
        uint8_t w = static_cast<uint8_t>(
            (state.x_bit(row, i) ? 1 : 0) | (state.z_bit(row, i) ? 2 : 0) |
            (state.x_bit(row, j) ? 4 : 0) | (state.z_bit(row, j) ? 8 : 0));
        if (w == 0) {
            continue;
        }
        uint8_t nb = new_bits[w];
        // Write back through the mutating single-qubit accessors below.
        state.set_window_(row, i, j, nb, sign_flip[w]);
    }
    if (debug_validation_enabled()) {
        state.validate();
    }
}

}  // namespace telesim
