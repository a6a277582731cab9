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

#include "graphshare/pauli.hpp"

#include <stdexcept>

namespace graphshare {

PauliOperator::PauliOperator(BitVector x, BitVector z, unsigned phase)
    : x_(std::move(x)), z_(std::move(z)), phase_(phase & 3) {
  if (x_.size() != z_.size()) {
    throw std::invalid_argument("PauliOperator: x/z size mismatch");
  }
}

PauliOperator PauliOperator::single(size_t n, size_t q, char kind) {
  if (q >= n) throw std::out_of_range("PauliOperator::single: qubit index");
  PauliOperator p(n);
  switch (kind) {
    case 'X':
      p.x_.set(q, true);
      break;
    case 'Z':
      p.z_.set(q, true);
      break;
    case 'Y':
      p.x_.set(q, true);
      p.z_.set(q, true);
      p.phase_ = 1;  // Y = i XZ
      break;
    default:
      throw std::invalid_argument("PauliOperator::single: kind must be X/Y/Z");
  }
  return p;
}

PauliOperator PauliOperator::x_on(size_t n, const std::vector<size_t>& s) {
  return PauliOperator(BitVector::from_support(n, s), BitVector(n), 0);
}

PauliOperator PauliOperator::z_on(size_t n, const std::vector<size_t>& s) {
  return PauliOperator(BitVector(n), BitVector::from_support(n, s), 0);
}

PauliOperator PauliOperator::parse(std::string_view text) {
  size_t pos = 0;
  unsigned phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase += 2;
    ++pos;
  } else if (text.substr(pos, 3) == "\xe2\x88\x92") {  // U+2212 minus sign
    phase += 2;
    pos += 3;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase += 1;
    ++pos;
  }
  size_t n = text.size() - pos;
  BitVector x(n), z(n);
  for (size_t q = 0; q < n; ++q) {
    switch (text[pos + q]) {
      case 'I':
        break;
      case 'X':
        x.set(q, true);
        break;
      case 'Z':
        z.set(q, true);
        break;
      case 'Y':
        x.set(q, true);
        z.set(q, true);
        phase += 1;
        break;
      default:
        throw std::invalid_argument(
            std::string("PauliOperator::parse: bad character '") +
            text[pos + q] + "' at position " + std::to_string(pos + q));
    }
  }
  return PauliOperator(std::move(x), std::move(z), phase);
}

std::vector<size_t> PauliOperator::support() const {
  return support_mask().support();
}

BitVector PauliOperator::support_mask() const {
  BitVector m = x_;
  for (size_t q = 0; q < z_.size(); ++q) {
    if (z_.get(q)) m.set(q, true);
  }
  return m;
}

char PauliOperator::letter(size_t q) const {
  bool xb = x_.get(q);
  bool zb = z_.get(q);
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

PauliOperator PauliOperator::operator*(const PauliOperator& other) const {
  return pauli_product(*this, other);
}

PauliOperator PauliOperator::negated() const {
  return PauliOperator(x_, z_, phase_ + 2);
}

bool PauliOperator::commutes_with(const PauliOperator& other) const {
  return commutes(*this, other);
}

std::string PauliOperator::str() const {
  // Letters contribute i^(#Y); the remainder is the printed prefix.
  unsigned rest = (phase_ + 4 - ((x_ & z_).popcount() & 3)) & 3;
  std::string s;
  switch (rest) {
    case 0:
      break;
    case 1:
      s = "i";
      break;
    case 2:
      s = "-";
      break;
    case 3:
      s = "-i";
      break;
  }
  for (size_t q = 0; q < num_qubits(); ++q) s += letter(q);
  return s;
}

PauliOperator pauli_product(const PauliOperator& a, const PauliOperator& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("pauli_product: qubit count mismatch");
  }
  // (i^p X^x1 Z^z1)(i^q X^x2 Z^z2): moving X^x2 left across Z^z1 flips a
  // sign per overlapping qubit.
  unsigned phase = a.phase() + b.phase();
  if (a.z().dot(b.x())) phase += 2;
  return PauliOperator(a.x() ^ b.x(), a.z() ^ b.z(), phase);
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
  return !(a.x().dot(b.z()) ^ a.z().dot(b.x()));
}

void conjugate_h(PauliOperator& g, size_t q) {
  bool xb = g.x().get(q);
  bool zb = g.z().get(q);
  unsigned phase = g.phase();
  if (xb && zb) phase += 2;  // H Y H = -Y
  BitVector x = g.x(), z = g.z();
  x.set(q, zb);
  z.set(q, xb);
  g = PauliOperator(std::move(x), std::move(z), phase);
}

void conjugate_s(PauliOperator& g, size_t q) {
  // S X S^dag = Y = iXZ, S Z S^dag = Z.
  if (!g.x().get(q)) return;
  BitVector z = g.z();
  z.flip(q);
  g = PauliOperator(g.x(), std::move(z), g.phase() + 1);
}

void conjugate_s_dag(PauliOperator& g, size_t q) {
  if (!g.x().get(q)) return;
  BitVector z = g.z();
  z.flip(q);
  g = PauliOperator(g.x(), std::move(z), g.phase() + 3);
}

void conjugate_cz(PauliOperator& g, size_t q, size_t r) {
  if (q == r) throw std::invalid_argument("conjugate_cz: equal qubits");
  bool xq = g.x().get(q);
  bool xr = g.x().get(r);
  unsigned phase = g.phase();
  if (xq && xr) phase += 2;
  BitVector z = g.z();
  if (xr) z.flip(q);
  if (xq) z.flip(r);
  g = PauliOperator(g.x(), std::move(z), phase);
}

void conjugate_swap(PauliOperator& g, size_t q, size_t r) {
  BitVector x = g.x(), z = g.z();
  bool t;
  t = x.get(q); x.set(q, x.get(r)); x.set(r, t);
  t = z.get(q); z.set(q, z.get(r)); z.set(r, t);
  g = PauliOperator(std::move(x), std::move(z), g.phase());
}

void conjugate_pauli(PauliOperator& g, const PauliOperator& p) {
  if (!commutes(g, p)) {
    g = g.negated();
  }
}

PauliOperator drop_coordinate(const PauliOperator& p, size_t q) {
  size_t n = p.num_qubits();
  if (q >= n) throw std::out_of_range("drop_coordinate: qubit out of range");
  if (p.x().get(q) || p.z().get(q)) {
    throw std::invalid_argument("drop_coordinate: operator touches the qubit");
  }
  BitVector x(n - 1), z(n - 1);
  for (size_t i = 0, j = 0; i < n; ++i) {
    if (i == q) continue;
    x.set(j, p.x().get(i));
    z.set(j, p.z().get(i));
    ++j;
  }
  return PauliOperator(std::move(x), std::move(z), p.phase());
}

}  // namespace graphshare
