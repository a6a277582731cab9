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

#ifndef GRAPHSHARE_STATEVECTOR_HPP
#define GRAPHSHARE_STATEVECTOR_HPP

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "graphshare/access.hpp"
#include "graphshare/graph.hpp"
#include "graphshare/pauli.hpp"

namespace graphshare {

inline constexpr size_t kDenseQubitCap = 14;
inline constexpr double kOracleTolerance = 1e-9;

/// Dense 2^n amplitude vector. Basis index bit convention: qubit 0 is the
/// most significant bit of the index, qubit n-1 the least.
struct StateVector {
  size_t n = 0;
  std::vector<std::complex<double>> amp;
};

/// amp(x) = 2^(-n/2) (-1)^(sum over edges uv of x_u x_v). Caps at
/// kDenseQubitCap qubits.
StateVector dense_graph_state(const Graph& graph);

/// The two shared states Z_A^s |G>, s = 0 and 1.
std::pair<StateVector, StateVector> cc_pair(const SchemeCC& scheme);

StateVector apply_pauli_dense(const PauliOperator& p, const StateVector& v);

std::complex<double> inner(const StateVector& a, const StateVector& b);
double fidelity(const StateVector& a, const StateVector& b);

using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;

/// M[a][b] = sum over t of psi0(a:t) conj(psi1(b:t)), tracing the qubits in
/// `traced` out of |psi0><psi1|. Kept-qubit index bits stay in qubit order.
ComplexMatrix cross_partial_trace(const StateVector& psi0,
                                  const StateVector& psi1,
                                  const std::vector<size_t>& traced);

/// Reduced density matrix on `keep`, in keep-label order.
ComplexMatrix reduced_density(const StateVector& psi,
                              const std::vector<size_t>& keep);

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// The subset t sees identical reduced states for both secrets.
bool check_unauthorized_dense(const StateVector& psi0, const StateVector& psi1,
                              const std::vector<size_t>& t,
                              double tol = kOracleTolerance);

/// Outside t no coherence between the two secrets survives: the cross
/// term Tr_t |psi0><psi1| vanishes entrywise, so t holds all the
/// distinguishing information.
bool check_authorized_dense(const StateVector& psi0, const StateVector& psi1,
                            const std::vector<size_t>& t,
                            double tol = kOracleTolerance);

/// Dense end-to-end QQ run: share a|0> + b|1> from `dealer`, recover from
/// D via the teleportation circuit, return the worst-case fidelity of the
/// recovered ancilla state against the secret over both X-measurement
/// branches.
double qq_roundtrip(const Graph& graph, size_t dealer,
                    const std::vector<size_t>& d, std::complex<double> a,
                    std::complex<double> b);

/// State fixed by the generator set, via the product of (I + g)/2
/// projectors. Generators must describe a pure state.
StateVector dense_from_generators(const std::vector<PauliOperator>& gens);

}  // namespace graphshare

#endif
