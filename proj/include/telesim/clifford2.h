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

#ifndef TELESIM_CLIFFORD2_H
#define TELESIM_CLIFFORD2_H

#include <array>
#include <cstdint>

#include "telesim/rng.h"
#include "telesim/tableau.h"

namespace telesim {

/// Signed two-qubit Pauli, literal-Y convention.
/// bits: bit0 = x1, bit1 = z1, bit2 = x2, bit3 = z2. sign: 0 -> +, 1 -> -.
struct Pauli2q {
    uint8_t bits = 0;
    uint8_t sign = 0;

    bool operator==(const Pauli2q &) const = default;
};

/// GF(2) symplectic inner product: 0 if the Paulis commute, 1 otherwise.
inline int symplectic_product(Pauli2q a, Pauli2q b) {
    auto bit = [](uint8_t v, int k) { return (v >> k) & 1; };
    int s = bit(a.bits, 0) & bit(b.bits, 1);
    s ^= bit(a.bits, 1) & bit(b.bits, 0);
    s ^= bit(a.bits, 2) & bit(b.bits, 3);
    s ^= bit(a.bits, 3) & bit(b.bits, 2);
    return s;
}

/// Element of the two-qubit Clifford group modulo global phase, stored as
/// the conjugation images of the generators X1, Z1, X2, Z2 (equivalently a
/// 4x4 binary symplectic matrix plus 4 sign bits; 11520 elements).
struct TwoQubitClifford {
    std::array<Pauli2q, 4> images;  // images of X1, Z1, X2, Z2

    static TwoQubitClifford identity();

    /// Conjugation image of an arbitrary signed Pauli under this gate.
    Pauli2q conjugate(Pauli2q p) const;

    /// Composition: the gate that applies *this first, then `second`.
    TwoQubitClifford then(const TwoQubitClifford &second) const;

    TwoQubitClifford inverse() const;

    /// True iff the images preserve all pairwise (anti)commutation
    /// relations of the generators.
    bool is_symplectic() const;

    /// Canonical 20-bit encoding (5 bits per generator image); unique per
    /// group element.
    uint32_t key() const;

    bool operator==(const TwoQubitClifford &) const = default;
};

/// Uniform sample from the 11520-element two-qubit Clifford group.
///
/// Builds the images stage by stage: X1-image uniform over the 30 signed
/// non-identity Paulis, Z1-image uniform over the 16 signed anticommuting
/// partners, then the (X2, Z2) images from the centralizer (6 and 4
/// choices). Every group element corresponds to exactly one such tuple.
TwoQubitClifford sample_clifford2(Rng &rng);

/// Conjugate every tableau row by the gate acting on qubits (i, j).
void apply_clifford2(StabilizerTableau &state, const TwoQubitClifford &gate, size_t i, size_t j);

}  // namespace telesim

#endif
