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

#ifndef TELESIM_TABLEAU_H
#define TELESIM_TABLEAU_H

#include <cstdint>
#include <span>
#include <vector>

#include "telesim/rng.h"

namespace telesim {

/// Pure n-qubit stabilizer state in tableau form.
///
/// Rows [0, n) are destabilizers, rows [n, 2n) are stabilizers. Each row is
/// a signed Pauli string stored as packed x/z bit vectors plus one sign bit.
/// The sign convention is the literal one: a row with x=z=1 on a qubit means
/// Y on that qubit (not XZ), and the sign bit encodes the +-1 prefactor.
///
/// Invariants (checked by validate()):
///   - stabilizer rows commute pairwise and are independent over GF(2),
///   - destabilizer row i anticommutes with stabilizer row i and commutes
///     with stabilizer row j for j != i,
///   - there are exactly n stabilizers (the state is pure).
class StabilizerTableau {
   public:
    /// |0...0>: stabilizers {Z_i}, destabilizers {X_i}, all signs +.
    explicit StabilizerTableau(size_t n_qubits);

    size_t n_qubits() const {
        return n_;
    }

    bool x_bit(size_t row, size_t q) const {
        return (xs_[row * words_ + q / 64] >> (q % 64)) & 1;
    }
    bool z_bit(size_t row, size_t q) const {
        return (zs_[row * words_ + q / 64] >> (q % 64)) & 1;
    }
    bool sign_bit(size_t row) const {
        return signs_[row] != 0;
    }

    // Elementary Clifford gates (conjugation action on every row).
    void h(size_t q);
    void s(size_t q);
    void x(size_t q);
    void z(size_t q);
    void cnot(size_t control, size_t target);

    /// Projective Z-basis measurement of qubit q.
    ///
    /// If Z_q is (up to sign) in the stabilizer group the outcome is
    /// deterministic and the state is untouched; otherwise the outcome is a
    /// fair coin from `rng` and the tableau is collapsed accordingly.
    bool measure_z(size_t q, Rng &rng);

    /// True iff a Z measurement of q would have a deterministic outcome.
    bool is_deterministic_z(size_t q) const;

    /// Von Neumann entropy of the reduced state on `subset`, in bits.
    ///
    /// Equals rank_GF2(stabilizer rows restricted to the subset columns)
    /// minus |subset|; exact integer.
    size_t entropy_bits(std::span<const size_t> subset) const;

    /// Rewrite the (x, z) bits of qubits (i, j) in every row through a
    /// 16-entry substitution table, xoring the row sign per `sign_flips`.
    /// This is the conjugation primitive behind two-qubit gates.
    void conjugate_pair(size_t i, size_t j, const uint8_t new_bits[16], const uint8_t sign_flips[16]);

    /// Throws std::logic_error if any tableau invariant is violated.
    void validate() const;

    // Raw row access for group-membership checks and tests.
    std::span<const uint64_t> x_row(size_t row) const {
        return {xs_.data() + row * words_, words_};
    }
    std::span<const uint64_t> z_row(size_t row) const {
        return {zs_.data() + row * words_, words_};
    }

   private:
    void mult_left(size_t dst_row, size_t src_row);  // R_dst <- R_src * R_dst

    size_t n_;
    size_t words_;
    std::vector<uint64_t> xs_;  // 2n rows * words_
    std::vector<uint64_t> zs_;
    std::vector<uint8_t> signs_;  // 2n
};

/// Prepare a Bell pair (|00>+|11>)/sqrt(2) on (ref_q, sys_q) via H + CNOT.
/// Both qubits are expected to be fresh |0> states.
void entangle_reference(StabilizerTableau &state, size_t ref_q, size_t sys_q);

/// True iff the two tableaux represent the same quantum state (equal
/// stabilizer groups including signs).
bool same_state(const StabilizerTableau &a, const StabilizerTableau &b);

/// Global toggle: when on, tableau mutators re-validate after every
/// operation (slow; meant for tests and debugging runs).
void set_debug_validation(bool enabled);
bool debug_validation_enabled();

}  // namespace telesim

#endif
