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

#include "graphshare/tableau.hpp"

#include <algorithm>
#include <stdexcept>

#include "graphshare/stabilizer_code.hpp"

namespace graphshare {

namespace {

PauliOperator widen_by_one(const PauliOperator& p) {
  size_t n = p.num_qubits();
  BitVector x(n + 1);
  BitVector z(n + 1);
  for (size_t q = 0; q < n; ++q) {
    if (p.x().get(q)) x.set(q, true);
    if (p.z().get(q)) z.set(q, true);
  }
  return PauliOperator(std::move(x), std::move(z), p.phase());
}

std::vector<size_t> checked_set(std::vector<size_t> s, size_t n,
                                const std::string& what) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!s.empty() && s.back() >= n) {
    throw std::invalid_argument(what + " mentions vertex " +
                                std::to_string(s.back()) + " of a " +
                                std::to_string(n) + "-vertex graph");
  }
  return s;
}

void emit(std::vector<std::string>* trace, std::string line) {
  if (trace) trace->push_back(std::move(line));
}

}  // namespace

StabilizerState::StabilizerState(size_t n,
                                 std::vector<PauliOperator> generators,
                                 uint64_t seed)
    : n_(n), gens_(std::move(generators)), rng_(seed) {
  if (gens_.size() != n_) {
    throw std::invalid_argument("a pure state on " + std::to_string(n_) +
                                " qubits needs exactly that many generators");
  }
  StabilizerCode code;
  code.n = n_;
  code.generators = gens_;
  code.validate();
}

StabilizerState StabilizerState::graph_state(const Graph& g, uint64_t seed) {
  std::vector<PauliOperator> gens;
  gens.reserve(g.num_vertices());
  for (size_t v = 0; v < g.num_vertices(); ++v) {
    gens.push_back(vertex_stabilizer(g, v));
  }
  return StabilizerState(g.num_vertices(), std::move(gens), seed);
}

void StabilizerState::apply_h(size_t q) {
  if (q >= n_) throw std::out_of_range("qubit index out of range");
  for (auto& g : gens_) conjugate_h(g, q);
}

void StabilizerState::apply_s(size_t q) {
  if (q >= n_) throw std::out_of_range("qubit index out of range");
  for (auto& g : gens_) conjugate_s(g, q);
}

void StabilizerState::apply_cz(size_t q, size_t r) {
  if (q >= n_ || r >= n_) throw std::out_of_range("qubit index out of range");
  if (q == r) throw std::invalid_argument("CZ needs two distinct qubits");
  for (auto& g : gens_) conjugate_cz(g, q, r);
}

void StabilizerState::apply_pauli(const PauliOperator& p) {
  if (p.num_qubits() != n_) {
    throw std::invalid_argument("operator width does not match the state");
  }
  for (auto& g : gens_) conjugate_pauli(g, p);
}

void StabilizerState::apply_controlled_pauli(size_t control,
                                             const PauliOperator& p) {
  if (control >= n_) throw std::out_of_range("control qubit out of range");
  if (p.num_qubits() != n_) {
    throw std::invalid_argument("operator width does not match the state");
  }
  if (!p.is_hermitian()) {
    throw std::invalid_argument("controlled Pauli must be Hermitian");
  }
  if (p.x().get(control) || p.z().get(control)) {
    throw std::invalid_argument("controlled Pauli must not touch the control");
  }
  PauliOperator zc = PauliOperator::single(n_, control, 'Z');
  for (auto& g : gens_) {
    bool a = g.x().get(control);
    bool b = !commutes(g, p);
    if (b) g = g * zc;
    if (a) g = p * g;
  }
}

int StabilizerState::measure(const PauliOperator& p,
                             std::optional<int> forced) {
  if (p.num_qubits() != n_) {
    throw std::invalid_argument("operator width does not match the state");
  }
  if (!p.is_hermitian()) {
    throw std::invalid_argument("measured operator must be Hermitian");
  }
  if (forced && *forced != 0 && *forced != 1) {
    throw std::invalid_argument("forced outcome must be 0 or 1");
  }
  std::vector<size_t> anti;
  for (size_t j = 0; j < gens_.size(); ++j) {
    if (!commutes(gens_[j], p)) anti.push_back(j);
  }
  if (anti.empty()) {
    auto det = deterministic_outcome(p);
    if (!det) {
      throw std::logic_error(
          "operator commutes with the group but lies outside it");
    }
    if (forced && *forced != *det) {
      throw std::logic_error(
          "forced outcome contradicts a deterministic measurement");
    }
    return *det;
  }
  int bit = forced ? *forced : static_cast<int>(rng_() & 1);
  size_t j0 = anti.front();
  for (size_t idx = 1; idx < anti.size(); ++idx) {
    gens_[anti[idx]] = gens_[anti[idx]] * gens_[j0];
  }
  gens_[j0] = bit ? p.negated() : p;
  return bit;
}

std::optional<int> StabilizerState::deterministic_outcome(
    const PauliOperator& p) const {
  if (p.num_qubits() != n_) {
    throw std::invalid_argument("operator width does not match the state");
  }
  for (const auto& g : gens_) {
    if (!commutes(g, p)) return std::nullopt;
  }
  auto e = group_element_matching(gens_, p);
  if (!e) return std::nullopt;
  unsigned diff = (p.phase() - e->phase() + 4) % 4;
  if (diff == 0) return 0;
  if (diff == 2) return 1;
  throw std::logic_error("group element differs by an imaginary phase");
}

void StabilizerState::drop_qubit(size_t q) {
  if (q >= n_) throw std::out_of_range("qubit index out of range");
  std::optional<BitVector> coeffs;
  PauliOperator found;
  for (char kind : {'Z', 'X', 'Y'}) {
    PauliOperator cand = PauliOperator::single(n_, q, kind);
    coeffs = group_coefficients(gens_, cand);
    if (coeffs) {
      found = cand;
      break;
    }
  }
  if (!coeffs) {
    throw std::invalid_argument("drop_qubit: qubit " + std::to_string(q) +
                                " is entangled with the rest");
  }
  PauliOperator element(n_);
  size_t pivot = gens_.size();
  for (size_t j = 0; j < gens_.size(); ++j) {
    if (coeffs->get(j)) {
      if (pivot == gens_.size()) pivot = j;
      element = element * gens_[j];
    }
  }
  // element is the exact group member acting as +-found on q alone.
  // Swapping it in for one of its factors keeps the group; every other
  // generator acts on q as I or as found's letter, so one multiply clears
  // it.
  gens_[pivot] = element;
  std::vector<PauliOperator> rest;
  rest.reserve(n_ - 1);
  for (size_t j = 0; j < gens_.size(); ++j) {
    if (j == pivot) continue;
    PauliOperator g = gens_[j];
    if (g.x().get(q) || g.z().get(q)) g = g * element;
    if (g.x().get(q) || g.z().get(q)) {
      throw std::logic_error("drop_qubit left residual action on the qubit");
    }
    rest.push_back(drop_coordinate(g, q));
  }
  gens_ = std::move(rest);
  n_ -= 1;
}

void StabilizerState::append_plus_qubit() {
  for (auto& g : gens_) g = widen_by_one(g);
  gens_.push_back(PauliOperator::single(n_ + 1, n_, 'X'));
  n_ += 1;
}

std::vector<PauliOperator> StabilizerState::canonical() const {
  return canonical_generators(gens_);
}

bool StabilizerState::same_state(const StabilizerState& other) const {
  return n_ == other.n_ && canonical() == other.canonical();
}

PauliOperator secret_stabilizer(const std::string& label, size_t n,
                                size_t q) {
  if (q >= n) throw std::out_of_range("qubit index out of range");
  if (label == "0") return PauliOperator::single(n, q, 'Z');
  if (label == "1") return PauliOperator::single(n, q, 'Z').negated();
  if (label == "+") return PauliOperator::single(n, q, 'X');
  if (label == "-") return PauliOperator::single(n, q, 'X').negated();
  if (label == "+i") return PauliOperator::single(n, q, 'Y');
  if (label == "-i") return PauliOperator::single(n, q, 'Y').negated();
  throw std::invalid_argument(
      "unknown secret label \"" + label +
      "\"; expected one of 0, 1, +, -, +i, -i");
}

StabilizerState cc_encode(const SchemeCC& scheme, int secret_bit,
                          uint64_t seed) {
  if (secret_bit != 0 && secret_bit != 1) {
    throw std::invalid_argument("the classical secret is one bit");
  }
  StabilizerState state = StabilizerState::graph_state(scheme.graph, seed);
  if (secret_bit) {
    state.apply_pauli(
        PauliOperator::z_on(scheme.graph.num_vertices(), scheme.a_set));
  }
  return state;
}

int cc_recover(StabilizerState& state, const std::vector<size_t>& d,
               const SchemeCC& scheme, std::vector<std::string>* trace) {
  size_t n = scheme.graph.num_vertices();
  if (state.num_qubits() != n) {
    throw std::invalid_argument("state width does not match the scheme");
  }
  auto dd = checked_set(d, n, "D");
  size_t overlap = 0;
  for (size_t v : dd) {
    if (std::binary_search(scheme.a_set.begin(), scheme.a_set.end(), v)) {
      ++overlap;
    }
  }
  if (overlap % 2 == 0) {
    throw std::invalid_argument(
        "D overlaps A evenly; the outcome would not depend on the secret");
  }
  PauliOperator kd(n);
  for (size_t v : dd) kd = kd * vertex_stabilizer(scheme.graph, v);
  int bit = state.measure(kd);
  emit(trace, "MEAS " + kd.str() + " -> " + std::to_string(bit));
  return bit;
}

StabilizerState qq_encode(const Graph& graph, size_t dealer,
                          const std::string& secret, uint64_t seed,
                          std::optional<int> forced_outcome,
                          std::vector<std::string>* trace) {
  size_t n = graph.num_vertices();
  if (dealer >= n) throw std::out_of_range("dealer index out of range");
  auto nbrs = graph.neighbors(dealer);
  if (nbrs.empty()) {
    throw std::invalid_argument("the dealer has no neighbors to entangle");
  }
  // Shares start in the graph state of G minus the dealer, embedded on the
  // full label set; the dealer qubit holds the secret.
  Graph detached(n);
  for (auto [u, v] : graph.edges()) {
    if (u != dealer && v != dealer) detached.add_edge(u, v);
  }
  std::vector<PauliOperator> gens;
  gens.reserve(n);
  for (size_t v = 0; v < n; ++v) {
    if (v == dealer) {
      gens.push_back(secret_stabilizer(secret, n, dealer));
    } else {
      gens.push_back(vertex_stabilizer(detached, v));
    }
  }
  StabilizerState state(n, std::move(gens), seed);
  for (size_t u : nbrs) {
    state.apply_cz(dealer, u);
    emit(trace, "CZ " + std::to_string(dealer) + " " + std::to_string(u));
  }
  int bit = state.measure(PauliOperator::single(n, dealer, 'X'),
                          forced_outcome);
  emit(trace,
       "MEASX " + std::to_string(dealer) + " -> " + std::to_string(bit));
  if (bit) {
    PauliOperator correction = vertex_stabilizer(detached, nbrs.front());
    state.apply_pauli(correction);
    emit(trace, "PAULI " + correction.str());
  }
  state.drop_qubit(dealer);
  return state;
}

QQRecovery qq_recover(const StabilizerState& state, const Graph& graph,
                      size_t dealer, const std::vector<size_t>& d,
                      std::vector<std::string>* trace) {
  size_t n = graph.num_vertices();
  if (dealer >= n) throw std::out_of_range("dealer index out of range");
  if (state.num_qubits() != n - 1) {
    throw std::invalid_argument("state width does not match graph minus i");
  }
  auto dd = checked_set(d, n, "D");
  if (std::binary_search(dd.begin(), dd.end(), dealer)) {
    throw std::invalid_argument("D must not contain the dealer");
  }
  const BitVector& ni = graph.neighbor_mask(dealer);
  size_t overlap = 0;
  for (size_t v : dd) {
    if (ni.get(v)) ++overlap;
  }
  if (overlap % 2 == 0) {
    throw std::invalid_argument(
        "D overlaps the dealer neighborhood evenly; nothing to teleport");
  }

  // K_D with the dealer coordinate cleared: the logical Z of the shares.
  PauliOperator kd(n);
  for (size_t v : dd) kd = kd * vertex_stabilizer(graph, v);
  BitVector kx = kd.x();
  BitVector kz = kd.z();
  kz.set(dealer, false);
  PauliOperator k_rest = drop_coordinate(
      PauliOperator(std::move(kx), std::move(kz), kd.phase()), dealer);

  // Z_D X_{Odd(D) minus i}: the logical X.
  BitVector odd = odd_neighborhood(graph, BitVector::from_support(n, dd));
  odd.set(dealer, false);
  BitVector zd = BitVector::from_support(n, dd);
  PauliOperator u_prime(odd, zd, 0);
  if (!u_prime.is_hermitian()) {
    throw std::invalid_argument(
        "D meets its own odd neighborhood; pick D inside one bipartition "
        "part");
  }
  PauliOperator u_rest = drop_coordinate(u_prime, dealer);

  StabilizerState work = state;
  work.append_plus_qubit();
  size_t anc = n - 1;
  PauliOperator ck = widen_by_one(k_rest);
  work.apply_controlled_pauli(anc, ck);
  emit(trace, "CPAULI " + std::to_string(anc) + " " + k_rest.str());
  work.apply_h(anc);
  emit(trace, "H " + std::to_string(anc));
  PauliOperator cu = widen_by_one(u_rest);
  work.apply_controlled_pauli(anc, cu);
  emit(trace, "CPAULI " + std::to_string(anc) + " " + u_rest.str());

  std::string label;
  for (char kind : {'Z', 'X', 'Y'}) {
    auto det =
        work.deterministic_outcome(PauliOperator::single(n, anc, kind));
    if (!det) continue;
    switch (kind) {
      case 'Z':
        label = *det ? "1" : "0";
        break;
      case 'X':
        label = *det ? "-" : "+";
        break;
      default:
        label = *det ? "-i" : "+i";
        break;
    }
    break;
  }
  if (label.empty()) {
    throw std::logic_error("recovery left the ancilla entangled");
  }
  emit(trace, "READ " + std::to_string(anc) + " -> " + label);
  work.drop_qubit(anc);
  return QQRecovery{label, std::move(work)};
}

}  // namespace graphshare
