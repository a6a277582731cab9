// Copyright 2026 the graphshare authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAPHSHARE_PAULI_HPP
#define GRAPHSHARE_PAULI_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "graphshare/bitvec.hpp"

namespace graphshare {

/// n-qubit Pauli operator in binary symplectic form with an exact phase:
/// the operator is i^phase * prod_q X_q^{x_q} Z_q^{z_q}, phase in Z_4.
/// With this convention Y = i*XZ, so the single-qubit product X*Z comes out
/// as (x=1, z=1, phase=0), i.e. -iY.
class PauliOperator {
 public:
  PauliOperator() = default;

  /// Identity on n qubits.
  explicit PauliOperator(size_t n) : x_(n), z_(n) {}

  PauliOperator(BitVector x, BitVector z, unsigned phase);

  static PauliOperator identity(size_t n) { return PauliOperator(n); }
  static PauliOperator single(size_t n, size_t q, char kind);
  static PauliOperator x_on(size_t n, const std::vector<size_t>& support);
  static PauliOperator z_on(size_t n, const std::vector<size_t>& support);

  /// Parse text like "XZZXI", "-YIZ", "+XX", "iXZ", "-iZ".
  static PauliOperator parse(std::string_view text);

  size_t num_qubits() const { return x_.size(); }
  const BitVector& x() const { return x_; }
  const BitVector& z() const { return z_; }
  unsigned phase() const { return phase_; }

  bool is_identity() const { return phase_ == 0 && x_.none() && z_.none(); }
  bool is_hermitian() const {
    return ((phase_ + (x_ & z_).popcount()) & 1) == 0;
  }

  /// Qubits acted on non-trivially.
  std::vector<size_t> support() const;
  BitVector support_mask() const;

  char letter(size_t q) const;

  PauliOperator operator*(const PauliOperator& other) const;
  PauliOperator negated() const;

  bool commutes_with(const PauliOperator& other) const;

  bool operator==(const PauliOperator& other) const {
    return phase_ == other.phase_ && x_ == other.x_ && z_ == other.z_;
  }
  bool operator!=(const PauliOperator& other) const {
    return !(*this == other);
  }

  /// Per-qubit letters with a sign/phase prefix ("+" omitted): "XZZXI",
  /// "-YIZ", "iXZ", "-iZ".
  std::string str() const;

 private:
  BitVector x_, z_;
  uint8_t phase_ = 0;
};

PauliOperator pauli_product(const PauliOperator& a, const PauliOperator& b);
bool commutes(const PauliOperator& a, const PauliOperator& b);

/// In-place Clifford conjugations g -> U g U^dagger with exact phase
/// tracking.
void conjugate_h(PauliOperator& g, size_t q);
void conjugate_s(PauliOperator& g, size_t q);
void conjugate_s_dag(PauliOperator& g, size_t q);
void conjugate_cz(PauliOperator& g, size_t q, size_t r);
void conjugate_swap(PauliOperator& g, size_t q, size_t r);
/// Conjugation by a Pauli p: flips the sign when g and p anticommute.
void conjugate_pauli(PauliOperator& g, const PauliOperator& p);

/// Removes coordinate q from an operator acting trivially there; throws when
/// p touches qubit q. Phase is preserved.
PauliOperator drop_coordinate(const PauliOperator& p, size_t q);

}  // namespace graphshare

#endif
