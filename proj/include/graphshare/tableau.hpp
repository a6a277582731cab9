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

#ifndef GRAPHSHARE_TABLEAU_HPP
#define GRAPHSHARE_TABLEAU_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "graphshare/access.hpp"
#include "graphshare/graph.hpp"
#include "graphshare/pauli.hpp"

namespace graphshare {

inline constexpr uint64_t kDefaultSeed = 0x6772617068;

/// Pure n-qubit stabilizer state as n independent commuting Hermitian
/// generators with exact signs. Random measurement outcomes come from the
/// state's own seeded engine, so runs replay exactly.
class StabilizerState {
 public:
  StabilizerState(size_t n, std::vector<PauliOperator> generators,
                  uint64_t seed = kDefaultSeed);

  static StabilizerState graph_state(const Graph& g,
                                     uint64_t seed = kDefaultSeed);

  size_t num_qubits() const { return n_; }
  const std::vector<PauliOperator>& generators() const { return gens_; }

  void apply_h(size_t q);
  void apply_s(size_t q);
  void apply_cz(size_t q, size_t r);
  /// Conjugation by the Pauli p (only signs can change).
  void apply_pauli(const PauliOperator& p);
  /// Controlled-P with control qubit `control`, which P must not touch.
  /// P must be Hermitian. g maps to P^a g Z_control^b with a = x bit of g
  /// at the control and b = (g anticommutes with P).
  void apply_controlled_pauli(size_t control, const PauliOperator& p);

  /// Measures the Hermitian Pauli p; returns the outcome bit b, meaning
  /// eigenvalue (-1)^b. Deterministic when +-p is in the group (a forced
  /// bit contradicting it throws); otherwise the outcome is drawn from the
  /// engine unless `forced` pins it.
  int measure(const PauliOperator& p, std::optional<int> forced = {});

  /// Outcome bit when measuring p is deterministic, else nullopt.
  std::optional<int> deterministic_outcome(const PauliOperator& p) const;

  /// Removes qubit q. Requires q to be disentangled, i.e. some
  /// +-X_q/+-Y_q/+-Z_q lies in the group; throws otherwise.
  void drop_qubit(size_t q);

  /// Appends one qubit in |+> as index n.
  void append_plus_qubit();

  std::vector<PauliOperator> canonical() const;
  bool same_state(const StabilizerState& other) const;

 private:
  size_t n_ = 0;
  std::vector<PauliOperator> gens_;
  std::mt19937_64 rng_;
};

/// +-X/Y/Z eigenstate stabilizers at qubit q of n, by label "0", "1", "+",
/// "-", "+i", "-i".
PauliOperator secret_stabilizer(const std::string& label, size_t n, size_t q);

inline const std::vector<std::string> kSecretLabels = {"0", "1",  "+",
                                                       "-", "+i", "-i"};

/// Z_A^s |G>.
StabilizerState cc_encode(const SchemeCC& scheme, int secret_bit,
                          uint64_t seed = kDefaultSeed);

/// Measures K_D = prod_{j in D} K_j on the shared state and returns the
/// recovered bit. Requires |D cap A| odd; an even overlap would make the
/// outcome independent of the secret. Whether D and Odd(D) stay inside the
/// measuring coalition is the caller's concern.
int cc_recover(StabilizerState& state, const std::vector<size_t>& d,
               const SchemeCC& scheme,
               std::vector<std::string>* trace = nullptr);

/// Dealer i injects the secret: start from shares in |G minus i> plus the
/// dealer qubit in the secret state, entangle with CZ(i, u) for u in N_i,
/// measure X_i, correct with K'_j (j = min N_i) on outcome 1, drop the
/// dealer qubit. Qubit labels of the result follow graph minus i.
StabilizerState qq_encode(const Graph& graph, size_t dealer,
                          const std::string& secret,
                          uint64_t seed = kDefaultSeed,
                          std::optional<int> forced_outcome = {},
                          std::vector<std::string>* trace = nullptr);

struct QQRecovery {
  std::string secret;
  StabilizerState residual;
};

/// Teleports the secret out of the shares onto a fresh ancilla using the
/// recovery set D (dealer excluded, |D cap N_dealer| odd):
/// controlled-K_D, H on the ancilla, controlled-(Z_D X_{Odd(D) minus i}),
/// then the ancilla is read out and dropped. Returns the secret label and
/// the residual share state.
QQRecovery qq_recover(const StabilizerState& state, const Graph& graph,
                      size_t dealer, const std::vector<size_t>& d,
                      std::vector<std::string>* trace = nullptr);

}  // namespace graphshare

#endif
