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

#include "graphshare/stabilizer_code.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace graphshare {

namespace {

std::string ordinal_pair(size_t a, size_t b) {
  std::ostringstream os;
  os << "generators " << a << " and " << b;
  return os.str();
}

}  // namespace

void StabilizerCode::validate() const {
  const size_t m = generators.size();
  if (m > n) {
    throw std::invalid_argument("StabilizerCode: more generators than qubits");
  }
  if (n - m > 1) {
    throw std::invalid_argument("StabilizerCode: k must be 0 or 1");
  }
  for (size_t i = 0; i < m; ++i) {
    if (generators[i].num_qubits() != n) {
      throw std::invalid_argument("StabilizerCode: generator width mismatch");
    }
    if (!generators[i].is_hermitian()) {
      throw std::invalid_argument("StabilizerCode: non-Hermitian generator");
    }
    for (size_t j = i + 1; j < m; ++j) {
      if (!commutes(generators[i], generators[j])) {
        throw std::invalid_argument("StabilizerCode: " + ordinal_pair(i, j) +
                                    " do not commute");
      }
    }
  }
  if (m > 0 && rank(symplectic_matrix(generators)) != m) {
    throw std::invalid_argument("StabilizerCode: dependent generators");
  }
  for (const auto* logical : {&logical_x, &logical_z}) {
    if (!logical->has_value()) continue;
    const PauliOperator& op = logical->value();
    if (op.num_qubits() != n) {
      throw std::invalid_argument("StabilizerCode: logical width mismatch");
    }
    if (!op.is_hermitian()) {
      throw std::invalid_argument("StabilizerCode: non-Hermitian logical");
    }
    for (size_t i = 0; i < m; ++i) {
      if (!commutes(op, generators[i])) {
        throw std::invalid_argument(
            "StabilizerCode: logical does not commute with the stabilizer");
      }
    }
  }
  if (logical_x && logical_z && commutes(*logical_x, *logical_z)) {
    throw std::invalid_argument(
        "StabilizerCode: logical X and Z must anticommute");
  }
}

BitVector symplectic_row(const PauliOperator& p) {
  size_t n = p.num_qubits();
  BitVector row(2 * n);
  for (size_t q = 0; q < n; ++q) {
    if (p.x().get(q)) row.set(q, true);
    if (p.z().get(q)) row.set(n + q, true);
  }
  return row;
}

BitMatrix symplectic_matrix(const std::vector<PauliOperator>& ops) {
  std::vector<BitVector> rows;
  rows.reserve(ops.size());
  for (const PauliOperator& op : ops) rows.push_back(symplectic_row(op));
  return BitMatrix::from_rows(std::move(rows));
}

namespace {

bool symplectic_bit(const PauliOperator& p, size_t col) {
  size_t n = p.num_qubits();
  return col < n ? p.x().get(col) : p.z().get(col - n);
}

}  // namespace

std::vector<PauliOperator> canonical_generators(
    std::vector<PauliOperator> gens) {
  if (gens.empty()) return gens;
  const size_t n = gens[0].num_qubits();
  size_t top = 0;
  for (size_t col = 0; col < 2 * n && top < gens.size(); ++col) {
    size_t pivot = top;
    while (pivot < gens.size() && !symplectic_bit(gens[pivot], col)) ++pivot;
    if (pivot == gens.size()) continue;
    std::swap(gens[top], gens[pivot]);
    for (size_t r = 0; r < gens.size(); ++r) {
      if (r != top && symplectic_bit(gens[r], col)) {
        gens[r] = gens[r] * gens[top];
      }
    }
    ++top;
  }
  for (size_t r = top; r < gens.size(); ++r) {
    if (gens[r].phase() != 0) {
      throw std::invalid_argument(
          "canonical_generators: group contains a phase of the identity");
    }
  }
  gens.resize(top);
  return gens;
}

bool same_group(const std::vector<PauliOperator>& a,
                const std::vector<PauliOperator>& b) {
  return canonical_generators(a) == canonical_generators(b);
}

bool same_group_gf2(const std::vector<PauliOperator>& a,
                    const std::vector<PauliOperator>& b) {
  if (a.empty() && b.empty()) return true;
  if (a.empty() || b.empty()) {
    return rank(symplectic_matrix(a.empty() ? b : a)) == 0;
  }
  if (a[0].num_qubits() != b[0].num_qubits()) return false;
  RrefResult ra = rref(symplectic_matrix(a));
  RrefResult rb = rref(symplectic_matrix(b));
  if (ra.rank != rb.rank) return false;
  for (size_t i = 0; i < ra.rank; ++i) {
    if (ra.r.row(i) != rb.r.row(i)) return false;
  }
  return true;
}

std::optional<BitVector> group_coefficients(
    const std::vector<PauliOperator>& gens, const PauliOperator& p) {
  if (gens.empty()) {
    if (p.x().none() && p.z().none()) return BitVector(0);
    return std::nullopt;
  }
  BitMatrix coords = symplectic_matrix(gens).transpose();
  auto sol = solve(coords, symplectic_row(p));
  if (!sol) return std::nullopt;
  return sol->particular;
}

std::optional<PauliOperator> group_element_matching(
    const std::vector<PauliOperator>& gens, const PauliOperator& p) {
  auto coeffs = group_coefficients(gens, p);
  if (!coeffs) return std::nullopt;
  PauliOperator product(p.num_qubits());
  for (size_t j = 0; j < gens.size(); ++j) {
    if (coeffs->get(j)) product = product * gens[j];
  }
  return product;
}

PauliOperator vertex_stabilizer(const Graph& g, size_t v) {
  if (v >= g.num_vertices()) {
    throw std::out_of_range("vertex_stabilizer: vertex out of range");
  }
  BitVector x(g.num_vertices());
  x.set(v, true);
  return PauliOperator(std::move(x), g.neighbor_mask(v), 0);
}

StabilizerCode graph_to_code(const Graph& g,
                             const std::vector<size_t>& a_set) {
  const size_t n = g.num_vertices();
  if (a_set.empty()) {
    throw std::invalid_argument(
        "graph_to_code: empty A gives no secret dependence");
  }
  std::vector<size_t> a = a_set;
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (a.back() >= n) {
    throw std::out_of_range("graph_to_code: A vertex out of range");
  }
  BitVector a_mask = BitVector::from_support(n, a);
  const size_t a0 = a.front();
  PauliOperator pivot = vertex_stabilizer(g, a0);

  StabilizerCode code;
  code.n = n;
  code.generators.reserve(n - 1);
  for (size_t v = 0; v < n; ++v) {
    if (v == a0) continue;
    PauliOperator kv = vertex_stabilizer(g, v);
    code.generators.push_back(a_mask.get(v) ? pivot * kv : kv);
  }
  code.logical_z = pivot;
  code.logical_x = PauliOperator(BitVector(n), a_mask, 0);
  code.validate();
  return code;
}

void for_each_logical_z(const StabilizerCode& code,
                        const std::function<void(const PauliOperator&)>& fn,
                        size_t cap) {
  if (code.k() != 1 || !code.logical_z) {
    throw std::invalid_argument(
        "for_each_logical_z: needs a k=1 code with a logical Z");
  }
  if (code.n > cap) {
    throw std::invalid_argument(
        "for_each_logical_z: qubit count exceeds the enumeration cap; use "
        "the graphical deciders instead");
  }
  const size_t m = code.generators.size();
  PauliOperator current = *code.logical_z;
  const uint64_t total = uint64_t{1} << m;
  for (uint64_t i = 0;; ++i) {
    fn(current);
    if (i + 1 == total) break;
    // Reflected Gray order: step i -> i+1 toggles generator ctz(i+1).
    current = current * code.generators[std::countr_zero(i + 1)];
  }
}

std::vector<PauliOperator> logical_z_coset(const StabilizerCode& code,
                                           size_t cap) {
  std::vector<PauliOperator> out;
  if (code.n <= cap && code.generators.size() < 32) {
    out.reserve(size_t{1} << code.generators.size());
  }
  for_each_logical_z(
      code, [&out](const PauliOperator& p) { out.push_back(p); }, cap);
  return out;
}

StabilizerCode css_state_code(const BitMatrix& p) {
  OrthogonalityCheck check = check_orthogonal(p);
  if (!check) {
    throw std::invalid_argument("css_state_code: " + check.reason);
  }
  const size_t k = p.rows();
  const size_t n = 2 * k;
  StabilizerCode code;
  code.n = n;
  code.generators.reserve(n);
  for (size_t i = 0; i < k; ++i) {
    BitVector x(n);
    x.set(i, true);
    for (size_t j = 0; j < k; ++j) {
      if (p.get(i, j)) x.set(k + j, true);
    }
    code.generators.emplace_back(std::move(x), BitVector(n), 0);
  }
  for (size_t i = 0; i < k; ++i) {
    BitVector z(n);
    z.set(i, true);
    for (size_t j = 0; j < k; ++j) {
      if (p.get(i, j)) z.set(k + j, true);
    }
    code.generators.emplace_back(BitVector(n), std::move(z), 0);
  }
  code.validate();
  return code;
}

namespace {

PauliOperator combine(const std::vector<PauliOperator>& gens,
                      const BitVector& coeffs, size_t n) {
  PauliOperator out(n);
  for (size_t j = 0; j < gens.size(); ++j) {
    if (coeffs.get(j)) out = out * gens[j];
  }
  return out;
}

/// Clears one symplectic bit of a full-group element known to act as exactly
/// X_i or Z_i tensor rest, then drops the coordinate.
PauliOperator restrict_off(PauliOperator p, size_t i, bool x_bit) {
  BitVector x = p.x(), z = p.z();
  if (x_bit) {
    x.set(i, false);
  } else {
    z.set(i, false);
  }
  return drop_coordinate(PauliOperator(std::move(x), std::move(z), p.phase()),
                         i);
}

}  // namespace

StabilizerCode puncture(const StabilizerCode& code, size_t i) {
  code.validate();
  if (code.k() != 0) {
    throw std::invalid_argument("puncture: needs an [[n, 0]] state code");
  }
  if (i >= code.n) {
    throw std::out_of_range("puncture: qubit out of range");
  }
  const size_t m = code.generators.size();
  // Row 0: x bits of the generators at qubit i; row 1: z bits.
  BitMatrix action(2, m);
  for (size_t j = 0; j < m; ++j) {
    action.set(0, j, code.generators[j].x().get(i));
    action.set(1, j, code.generators[j].z().get(i));
  }
  BitVector want_x = BitVector::from_bits({1, 0});
  BitVector want_z = BitVector::from_bits({0, 1});
  auto sol_x = solve(action, want_x);
  auto sol_z = solve(action, want_z);
  if (!sol_x || !sol_z) {
    throw std::invalid_argument(
        "puncture: qubit is not maximally mixed in the state");
  }
  auto kernel = solve(action, BitVector(2));

  StabilizerCode out;
  out.n = code.n - 1;
  for (const BitVector& coeffs : kernel->nullspace) {
    out.generators.push_back(
        drop_coordinate(combine(code.generators, coeffs, code.n), i));
  }
  out.logical_x =
      restrict_off(combine(code.generators, sol_x->particular, code.n), i,
                   /*x_bit=*/true);
  out.logical_z =
      restrict_off(combine(code.generators, sol_z->particular, code.n), i,
                   /*x_bit=*/false);
  out.validate();
  return out;
}

namespace {

[[noreturn]] void fail_line(size_t line_no, const std::string& message) {
  std::ostringstream os;
  os << "stabilizer file, line " << line_no << ": " << message;
  throw std::invalid_argument(os.str());
}

std::string strip(std::string_view line) {
  size_t hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  size_t begin = line.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return "";
  size_t end = line.find_last_not_of(" \t\r");
  return std::string(line.substr(begin, end - begin + 1));
}

}  // namespace

StabilizerCode parse_stabilizer_file(std::string_view text) {
  enum class Section { kGenerators, kLogicalX, kLogicalZ };
  Section section = Section::kGenerators;
  StabilizerCode code;
  std::optional<size_t> width;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    std::string line = strip(raw);
    if (line.empty()) continue;
    if (line == "LX:") {
      section = Section::kLogicalX;
      continue;
    }
    if (line == "LZ:") {
      section = Section::kLogicalZ;
      continue;
    }
    PauliOperator op;
    try {
      op = PauliOperator::parse(line);
    } catch (const std::invalid_argument& e) {
      fail_line(line_no, e.what());
    }
    if (width && op.num_qubits() != *width) {
      fail_line(line_no, "operator width differs from earlier lines");
    }
    width = op.num_qubits();
    switch (section) {
      case Section::kGenerators:
        code.generators.push_back(std::move(op));
        break;
      case Section::kLogicalX:
        if (code.logical_x) fail_line(line_no, "second operator after LX:");
        code.logical_x = std::move(op);
        break;
      case Section::kLogicalZ:
        if (code.logical_z) fail_line(line_no, "second operator after LZ:");
        code.logical_z = std::move(op);
        break;
    }
  }
  if (!width) {
    throw std::invalid_argument("stabilizer file: no operators found");
  }
  code.n = *width;
  code.validate();
  return code;
}

std::string serialize_stabilizer_file(const StabilizerCode& code) {
  std::string out;
  for (const PauliOperator& g : code.generators) {
    out += g.str();
    out += '\n';
  }
  if (code.logical_x) {
    out += "LX:\n";
    out += code.logical_x->str();
    out += '\n';
  }
  if (code.logical_z) {
    out += "LZ:\n";
    out += code.logical_z->str();
    out += '\n';
  }
  return out;
}

}  // namespace graphshare
