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

#include "graphshare/standard_form.hpp"

#include <sstream>
#include <stdexcept>

namespace graphshare {

std::string gate_str(const CliffordGate& gate) {
  std::ostringstream os;
  switch (gate.kind) {
    case CliffordGateKind::kHadamard:
      os << "H " << gate.q;
      break;
    case CliffordGateKind::kPhase:
      os << "S " << gate.q;
      break;
    case CliffordGateKind::kSwap:
      os << "SWAP " << gate.q << " " << gate.r;
      break;
    case CliffordGateKind::kPauliX:
      os << "X " << gate.q;
      break;
    case CliffordGateKind::kPauliZ:
      os << "Z " << gate.q;
      break;
  }
  return os.str();
}

void apply_gate(PauliOperator& p, const CliffordGate& gate) {
  switch (gate.kind) {
    case CliffordGateKind::kHadamard:
      conjugate_h(p, gate.q);
      break;
    case CliffordGateKind::kPhase:
      conjugate_s(p, gate.q);
      break;
    case CliffordGateKind::kSwap:
      conjugate_swap(p, gate.q, gate.r);
      break;
    case CliffordGateKind::kPauliX:
      conjugate_pauli(p, PauliOperator::single(p.num_qubits(), gate.q, 'X'));
      break;
    case CliffordGateKind::kPauliZ:
      conjugate_pauli(p, PauliOperator::single(p.num_qubits(), gate.q, 'Z'));
      break;
  }
}

std::vector<PauliOperator> apply_transform(
    std::vector<PauliOperator> gens, const std::vector<size_t>& perm,
    const std::vector<CliffordGate>& gates) {
  for (PauliOperator& p : gens) {
    size_t n = p.num_qubits();
    if (perm.size() != n) {
      throw std::invalid_argument("apply_transform: permutation size");
    }
    BitVector x(n), z(n);
    for (size_t j = 0; j < n; ++j) {
      x.set(j, p.x().get(perm[j]));
      z.set(j, p.z().get(perm[j]));
    }
    p = PauliOperator(std::move(x), std::move(z), p.phase());
    for (const CliffordGate& gate : gates) apply_gate(p, gate);
  }
  return gens;
}

namespace {

void swap_qubits(std::vector<PauliOperator>& gens, std::vector<size_t>& perm,
                 size_t a, size_t b) {
  if (a == b) return;
  for (PauliOperator& g : gens) conjugate_swap(g, a, b);
  std::swap(perm[a], perm[b]);
}

}  // namespace

StandardFormCode standard_form(const StabilizerCode& code) {
  code.validate();
  if (code.k() != 1) {
    throw std::invalid_argument("standard_form: needs a k = 1 code");
  }
  const size_t n = code.n;
  const size_t m = code.generators.size();
  std::vector<PauliOperator> gens = code.generators;
  std::vector<size_t> perm(n);
  for (size_t j = 0; j < n; ++j) perm[j] = j;
  std::vector<CliffordGate> gates;

  // X block: pivots onto columns 0..r-1, Gauss-Jordan on the rest.
  size_t row = 0;
  for (; row < m; ++row) {
    size_t pr = m, pc = n;
    for (size_t col = row; col < n && pr == m; ++col) {
      for (size_t rr = row; rr < m; ++rr) {
        if (gens[rr].x().get(col)) {
          pr = rr;
          pc = col;
          break;
        }
      }
    }
    if (pr == m) break;
    std::swap(gens[row], gens[pr]);
    swap_qubits(gens, perm, pc, row);
    for (size_t rr = 0; rr < m; ++rr) {
      if (rr != row && gens[rr].x().get(row)) gens[rr] = gens[rr] * gens[row];
    }
  }
  const size_t r = row;
  for (size_t rr = r; rr < m; ++rr) {
    if (gens[rr].x().any()) {
      throw std::logic_error("standard_form: X elimination left residue");
    }
  }

  // Z block of the X-free rows: pivots onto columns r..n-2. Full rank on
  // the trailing columns is forced by commutation with the top rows, so
  // every row finds a pivot; a pivot sitting at column n-1 is swapped in.
  for (size_t brow = r; brow < m; ++brow) {
    size_t pr = m, pc = n;
    for (size_t col = brow; col < n && pr == m; ++col) {
      for (size_t rr = brow; rr < m; ++rr) {
        if (gens[rr].z().get(col)) {
          pr = rr;
          pc = col;
          break;
        }
      }
    }
    if (pr == m) {
      throw std::logic_error("standard_form: Z elimination ran out of pivots");
    }
    std::swap(gens[brow], gens[pr]);
    swap_qubits(gens, perm, pc, brow);
    for (size_t rr = 0; rr < m; ++rr) {
      if (rr != brow && gens[rr].z().get(brow)) {
        gens[rr] = gens[rr] * gens[brow];
      }
    }
  }

  // Phase gates kill diag(B + C A2^t). Only row q has an X entry on qubit
  // q < r, so S(q) toggles exactly B_qq.
  for (size_t q = 0; q < r; ++q) {
    bool diag = gens[q].z().get(q);
    if (n >= 1 && gens[q].z().get(n - 1) && gens[q].x().get(n - 1)) {
      diag = !diag;
    }
    if (diag) {
      for (PauliOperator& g : gens) conjugate_s(g, q);
      gates.push_back({CliffordGateKind::kPhase, q, 0});
    }
  }

  StandardFormCode sf;
  sf.n = n;
  sf.r = r;
  sf.qubit_permutation = std::move(perm);
  sf.local_cliffords = std::move(gates);
  const size_t mid = n - r - 1;
  sf.a1 = BitMatrix(r, mid);
  sf.a2 = BitMatrix(r, 1);
  sf.b = BitMatrix(r, r);
  sf.c = BitMatrix(r, 1);
  sf.d = BitMatrix(m - r, r);
  sf.e = BitMatrix(m - r, 1);
  for (size_t s = 0; s < r; ++s) {
    for (size_t j = 0; j < mid; ++j) sf.a1.set(s, j, gens[s].x().get(r + j));
    sf.a2.set(s, 0, gens[s].x().get(n - 1));
    for (size_t t = 0; t < r; ++t) sf.b.set(s, t, gens[s].z().get(t));
    sf.c.set(s, 0, gens[s].z().get(n - 1));
  }
  for (size_t s = 0; s < m - r; ++s) {
    for (size_t t = 0; t < r; ++t) sf.d.set(s, t, gens[r + s].z().get(t));
    sf.e.set(s, 0, gens[r + s].z().get(n - 1));
  }
  sf.block_generators = std::move(gens);

  BitVector lx_x(n), lx_z(n), lz_z(n);
  lx_x.set(n - 1, true);
  lz_z.set(n - 1, true);
  for (size_t j = 0; j < mid; ++j) {
    if (sf.e.get(j, 0)) lx_x.set(r + j, true);
  }
  for (size_t s = 0; s < r; ++s) {
    if (sf.c.get(s, 0)) lx_z.set(s, true);
    if (sf.a2.get(s, 0)) lz_z.set(s, true);
  }
  sf.logical_x = PauliOperator(std::move(lx_x), std::move(lx_z), 0);
  sf.logical_z = PauliOperator(BitVector(n), std::move(lz_z), 0);
  return sf;
}

CodeGraph code_to_graph(const StandardFormCode& sf) {
  const size_t n = sf.n;
  const size_t r = sf.r;
  const size_t mid = n - r - 1;
  BitMatrix adj(n, n);
  auto set_sym = [&adj](size_t u, size_t v, bool bit) {
    if (bit) {
      adj.set(u, v, true);
      adj.set(v, u, true);
    }
  };
  for (size_t s = 0; s < r; ++s) {
    for (size_t t = s + 1; t < r; ++t) {
      bool bit = sf.b.get(s, t) ^ (sf.c.get(s, 0) && sf.a2.get(t, 0));
      set_sym(s, t, bit);
    }
    bool diag = sf.b.get(s, s) ^ (sf.c.get(s, 0) && sf.a2.get(s, 0));
    if (diag) {
      throw std::invalid_argument("code_to_graph: diag(B + C A2^t) != 0");
    }
    for (size_t j = 0; j < mid; ++j) set_sym(s, r + j, sf.a1.get(s, j));
    set_sym(s, n - 1, sf.a2.get(s, 0));
  }
  CodeGraph out{Graph::from_adjacency(std::move(adj)), {}};
  for (size_t s = 0; s < r; ++s) {
    if (sf.c.get(s, 0)) out.a_set.push_back(s);
  }
  for (size_t j = 0; j < mid; ++j) {
    if (sf.e.get(j, 0)) out.a_set.push_back(r + j);
  }
  out.a_set.push_back(n - 1);
  return out;
}

GraphEquivalence graph_equivalence(const StabilizerCode& code) {
  StandardFormCode sf = standard_form(code);
  CodeGraph cg = code_to_graph(sf);
  StabilizerCode target = graph_to_code(cg.graph, cg.a_set);

  GraphEquivalence eq;
  eq.graph = cg.graph;
  eq.a_set = cg.a_set;
  eq.qubit_permutation = sf.qubit_permutation;
  eq.gates = sf.local_cliffords;
  for (size_t q = sf.r; q < sf.n; ++q) {
    eq.gates.push_back({CliffordGateKind::kHadamard, q, 0});
  }

  std::vector<PauliOperator> moved =
      apply_transform(code.generators, eq.qubit_permutation, eq.gates);
  std::vector<PauliOperator> canon_moved = canonical_generators(moved);
  std::vector<PauliOperator> canon_target =
      canonical_generators(target.generators);
  if (canon_moved.size() != canon_target.size()) {
    throw std::logic_error("graph_equivalence: group size mismatch");
  }

  // The two canonical lists share their GF(2) rows; a Pauli layer Q with
  // sympl(Q, row) = sign mismatch per row absorbs the phase differences.
  // Solvable since the rows are independent and the form non-degenerate.
  const size_t rows = canon_moved.size();
  const size_t n = sf.n;
  BitMatrix system(rows, 2 * n);
  BitVector mismatch(rows);
  for (size_t i = 0; i < rows; ++i) {
    if (canon_moved[i].x() != canon_target[i].x() ||
        canon_moved[i].z() != canon_target[i].z()) {
      throw std::logic_error("graph_equivalence: GF(2) groups differ");
    }
    unsigned diff = (canon_target[i].phase() - canon_moved[i].phase()) & 3u;
    if (diff & 1u) {
      throw std::logic_error("graph_equivalence: imaginary sign mismatch");
    }
    mismatch.set(i, diff == 2);
    for (size_t q = 0; q < n; ++q) {
      system.set(i, q, canon_moved[i].z().get(q));
      system.set(i, n + q, canon_moved[i].x().get(q));
    }
  }
  auto sol = solve(system, mismatch);
  if (!sol) {
    throw std::logic_error("graph_equivalence: sign fixup unsolvable");
  }
  for (size_t q = 0; q < n; ++q) {
    if (sol->particular.get(q)) {
      eq.gates.push_back({CliffordGateKind::kPauliX, q, 0});
    }
    if (sol->particular.get(n + q)) {
      eq.gates.push_back({CliffordGateKind::kPauliZ, q, 0});
    }
  }

  std::vector<PauliOperator> final_gens =
      apply_transform(code.generators, eq.qubit_permutation, eq.gates);
  if (!same_group(final_gens, target.generators)) {
    throw std::logic_error("graph_equivalence: replay check failed");
  }
  return eq;
}

std::string standard_form_report(const StandardFormCode& sf) {
  std::ostringstream os;
  os << "n = " << sf.n << ", r = " << sf.r << "\n";
  os << "permutation (block position <- original qubit):";
  for (size_t j = 0; j < sf.qubit_permutation.size(); ++j) {
    os << " " << j << "<-" << sf.qubit_permutation[j];
  }
  os << "\n";
  os << "local Cliffords:";
  if (sf.local_cliffords.empty()) {
    os << " (none)";
  } else {
    for (const CliffordGate& g : sf.local_cliffords) os << " " << gate_str(g);
  }
  os << "\n";
  auto block = [&os](const char* name, const BitMatrix& mat) {
    os << name << " (" << mat.rows() << "x" << mat.cols() << "):\n";
    if (mat.rows() == 0 || mat.cols() == 0) {
      os << "  (empty)\n";
    } else {
      std::istringstream lines(mat.str());
      std::string line;
      while (std::getline(lines, line)) os << "  " << line << "\n";
    }
  };
  block("A1", sf.a1);
  block("A2", sf.a2);
  block("B", sf.b);
  block("C", sf.c);
  block("D", sf.d);
  block("E", sf.e);
  os << "generators:\n";
  for (const PauliOperator& g : sf.block_generators) {
    os << "  " << g.str() << "\n";
  }
  os << "logical X = " << sf.logical_x.str() << "\n";
  os << "logical Z = " << sf.logical_z.str() << "\n";
  return os.str();
}

}  // namespace graphshare
