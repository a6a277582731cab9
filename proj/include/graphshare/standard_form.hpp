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

#ifndef GRAPHSHARE_STANDARD_FORM_HPP
#define GRAPHSHARE_STANDARD_FORM_HPP

#include <string>
#include <vector>

#include "graphshare/stabilizer_code.hpp"

namespace graphshare {

enum class CliffordGateKind { kHadamard, kPhase, kSwap, kPauliX, kPauliZ };

/// Single transform-log entry; `r` is the second qubit of a kSwap and unused
/// otherwise.
struct CliffordGate {
  CliffordGateKind kind = CliffordGateKind::kHadamard;
  size_t q = 0;
  size_t r = 0;
};

std::string gate_str(const CliffordGate& gate);

/// Conjugates p by the gate, exact phase included.
void apply_gate(PauliOperator& p, const CliffordGate& gate);

/// Relabels coordinates so that position j reads original qubit perm[j],
/// then conjugates by the gates in order (gate qubits are positions).
std::vector<PauliOperator> apply_transform(
    std::vector<PauliOperator> gens, const std::vector<size_t>& perm,
    const std::vector<CliffordGate>& gates);

/// Block form of a k = 1 code: generators row-reduced and qubit-permuted to
///   [ I_r A1 A2 | B 0 C ]
///   [ 0  0  0   | D I E ]
/// with diag(B + C A2^t) = 0, achieved by phase gates on the first r qubits.
struct StandardFormCode {
  size_t n = 0;
  size_t r = 0;  // X-block rank
  BitMatrix a1;  // r x (n-r-1)
  BitMatrix a2;  // r x 1
  BitMatrix b;   // r x r
  BitMatrix c;   // r x 1
  BitMatrix d;   // (n-r-1) x r
  BitMatrix e;   // (n-r-1) x 1
  std::vector<size_t> qubit_permutation;       // block position -> original
  std::vector<CliffordGate> local_cliffords;   // phase gates, block labels
  std::vector<PauliOperator> block_generators; // exact, signs included
  PauliOperator logical_x;  // [0 E^t 1 | C^t 0 0]
  PauliOperator logical_z;  // [0 0  0  | A2^t 0 1]
};

/// Row operations, qubit swaps and phase gates suffice: the Z block of the
/// X-free generators always has full rank on the trailing columns, so no
/// Hadamards are ever emitted (kHadamard stays supported in replay).
StandardFormCode standard_form(const StabilizerCode& code);

struct CodeGraph {
  Graph graph;
  std::vector<size_t> a_set;
};

/// Adjacency [[B+C A2^t, A1, A2], [A1^t, 0, 0], [A2^t, 0, 0]] and
/// A = supp([C^t E^t 1]); vertex n-1 is always in A.
CodeGraph code_to_graph(const StandardFormCode& sf);

/// Full local-Clifford equivalence from a k = 1 code to its graph code:
/// permutation, the standard-form phase gates, trailing Hadamards on qubits
/// r..n-1, and a Pauli layer fixing residual generator signs. Replaying
/// gates over the permuted input generates, signs included, the same group
/// as graph_to_code(graph, a_set); verified during construction.
struct GraphEquivalence {
  Graph graph;
  std::vector<size_t> a_set;
  std::vector<size_t> qubit_permutation;
  std::vector<CliffordGate> gates;
};

GraphEquivalence graph_equivalence(const StabilizerCode& code);

/// Labeled GF(2) blocks plus the transform log, for humans.
std::string standard_form_report(const StandardFormCode& sf);

}  // namespace graphshare

#endif
