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

#include "graphshare/statevector.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "graphshare/stabilizer_code.hpp"

namespace graphshare {

namespace {

using cd = std::complex<double>;

// Index-space bit of qubit q: qubit 0 is the most significant bit.
size_t qubit_bit(size_t n, size_t q) { return size_t{1} << (n - 1 - q); }

std::vector<size_t> normalize_qubits(std::vector<size_t> s, size_t n) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!s.empty() && s.back() >= n) {
    throw std::out_of_range("qubit " + std::to_string(s.back()) + " of " +
                            std::to_string(n));
  }
  return s;
}

std::vector<size_t> complement_of(const std::vector<size_t>& s, size_t n) {
  std::vector<size_t> out;
  size_t j = 0;
  for (size_t v = 0; v < n; ++v) {
    if (j < s.size() && s[j] == v) {
      ++j;
      continue;
    }
    out.push_back(v);
  }
  return out;
}

// part_index -> scattered full-space index bits.
std::vector<size_t> spread_table(size_t n, const std::vector<size_t>& qubits) {
  std::vector<size_t> table(size_t{1} << qubits.size(), 0);
  for (size_t idx = 1; idx < table.size(); ++idx) {
    size_t low = idx & (idx - 1);
    size_t bit = static_cast<size_t>(std::countr_zero(idx));
    table[idx] = table[low] | qubit_bit(n, qubits[qubits.size() - 1 - bit]);
  }
  return table;
}

size_t pauli_index_mask(size_t n, const BitVector& bits) {
  size_t m = 0;
  for (size_t q = 0; q < n; ++q) {
    if (bits.get(q)) m |= qubit_bit(n, q);
  }
  return m;
}

// Applies p to the amplitudes whose index satisfies (s & select) == want.
// select == 0 applies it everywhere.
void apply_pauli_masked(const PauliOperator& p, StateVector& v, size_t select,
                        size_t want) {
  size_t n = v.n;
  size_t xmask = pauli_index_mask(n, p.x());
  size_t zmask = pauli_index_mask(n, p.z());
  static const cd kPhase[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
  cd base = kPhase[p.phase() & 3];
  std::vector<cd> out(v.amp.size(), cd(0, 0));
  for (size_t s = 0; s < v.amp.size(); ++s) {
    if ((s & select) != want) {
      out[s] += v.amp[s];
      continue;
    }
    cd f = base;
    if (std::popcount(s & zmask) & 1) f = -f;
    out[s ^ xmask] += f * v.amp[s];
  }
  v.amp = std::move(out);
}

double norm_squared(const StateVector& v) {
  double t = 0;
  for (const cd& a : v.amp) t += std::norm(a);
  return t;
}

}  // namespace

StateVector dense_graph_state(const Graph& graph) {
  size_t n = graph.num_vertices();
  if (n > kDenseQubitCap) {
    throw std::invalid_argument("dense simulation caps at " +
                                std::to_string(kDenseQubitCap) + " qubits");
  }
  auto edges = graph.edges();
  std::vector<std::pair<size_t, size_t>> masks;
  masks.reserve(edges.size());
  for (auto [u, v] : edges) {
    masks.emplace_back(qubit_bit(n, u), qubit_bit(n, v));
  }
  StateVector psi;
  psi.n = n;
  psi.amp.resize(size_t{1} << n);
  double scale = std::pow(2.0, -static_cast<double>(n) / 2.0);
  for (size_t s = 0; s < psi.amp.size(); ++s) {
    size_t parity = 0;
    for (auto [mu, mv] : masks) {
      if ((s & mu) && (s & mv)) parity ^= 1;
    }
    psi.amp[s] = parity ? cd(-scale, 0) : cd(scale, 0);
  }
  return psi;
}

std::pair<StateVector, StateVector> cc_pair(const SchemeCC& scheme) {
  StateVector psi0 = dense_graph_state(scheme.graph);
  PauliOperator za =
      PauliOperator::z_on(scheme.graph.num_vertices(), scheme.a_set);
  StateVector psi1 = apply_pauli_dense(za, psi0);
  return {std::move(psi0), std::move(psi1)};
}

StateVector apply_pauli_dense(const PauliOperator& p, const StateVector& v) {
  if (p.num_qubits() != v.n) {
    throw std::invalid_argument("operator width does not match the state");
  }
  StateVector out = v;
  apply_pauli_masked(p, out, 0, 0);
  return out;
}

std::complex<double> inner(const StateVector& a, const StateVector& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("states live on different qubit counts");
  }
  cd t(0, 0);
  for (size_t s = 0; s < a.amp.size(); ++s) {
    t += std::conj(a.amp[s]) * b.amp[s];
  }
  return t;
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(inner(a, b));
}

ComplexMatrix cross_partial_trace(const StateVector& psi0,
                                  const StateVector& psi1,
                                  const std::vector<size_t>& traced) {
  if (psi0.n != psi1.n) {
    throw std::invalid_argument("states live on different qubit counts");
  }
  size_t n = psi0.n;
  auto tr = normalize_qubits(traced, n);
  auto keep = complement_of(tr, n);
  auto keep_spread = spread_table(n, keep);
  auto traced_spread = spread_table(n, tr);
  size_t dim = keep_spread.size();
  ComplexMatrix m(dim, std::vector<cd>(dim, cd(0, 0)));
  for (size_t a = 0; a < dim; ++a) {
    for (size_t b = 0; b < dim; ++b) {
      cd acc(0, 0);
      for (size_t t : traced_spread) {
        acc += psi0.amp[keep_spread[a] | t] *
               std::conj(psi1.amp[keep_spread[b] | t]);
      }
      m[a][b] = acc;
    }
  }
  return m;
}

ComplexMatrix reduced_density(const StateVector& psi,
                              const std::vector<size_t>& keep) {
  auto kept = normalize_qubits(keep, psi.n);
  return cross_partial_trace(psi, psi, complement_of(kept, psi.n));
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  size_t dim = a.size();
  if (b.size() != dim) {
    throw std::invalid_argument("matrices have different sizes");
  }
  Eigen::MatrixXcd diff(dim, dim);
  for (size_t i = 0; i < dim; ++i) {
    if (a[i].size() != dim || b[i].size() != dim) {
      throw std::invalid_argument("matrices must be square");
    }
    for (size_t j = 0; j < dim; ++j) {
      diff(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          a[i][j] - b[i][j];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(diff,
                                                     Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

bool check_unauthorized_dense(const StateVector& psi0, const StateVector& psi1,
                              const std::vector<size_t>& t, double tol) {
  auto kept = normalize_qubits(t, psi0.n);
  auto traced = complement_of(kept, psi0.n);
  ComplexMatrix r0 = cross_partial_trace(psi0, psi0, traced);
  ComplexMatrix r1 = cross_partial_trace(psi1, psi1, traced);
  double worst = 0;
  for (size_t i = 0; i < r0.size(); ++i) {
    for (size_t j = 0; j < r0.size(); ++j) {
      worst = std::max(worst, std::abs(r0[i][j] - r1[i][j]));
    }
  }
  // Graph-state amplitudes are exact dyadics, so equal reductions agree
  // entrywise to rounding; the eigensolver only settles the grey zone.
  if (worst < tol) return true;
  if (worst >= 2 * tol) return false;
  return trace_distance(r0, r1) < tol;
}

bool check_authorized_dense(const StateVector& psi0, const StateVector& psi1,
                            const std::vector<size_t>& t, double tol) {
  auto traced = normalize_qubits(t, psi0.n);
  ComplexMatrix m = cross_partial_trace(psi0, psi1, traced);
  for (const auto& row : m) {
    for (const cd& e : row) {
      if (std::abs(e) >= tol) return false;
    }
  }
  return true;
}

double qq_roundtrip(const Graph& graph, size_t dealer,
                    const std::vector<size_t>& d, std::complex<double> a,
                    std::complex<double> b) {
  size_t n = graph.num_vertices();
  if (n > kDenseQubitCap) {
    throw std::invalid_argument("dense simulation caps at " +
                                std::to_string(kDenseQubitCap) + " qubits");
  }
  if (dealer >= n) throw std::out_of_range("dealer index out of range");
  auto dd = normalize_qubits(d, n);
  if (std::binary_search(dd.begin(), dd.end(), dealer)) {
    throw std::invalid_argument("D must not contain the dealer");
  }
  const BitVector& ni_mask = graph.neighbor_mask(dealer);
  size_t overlap = 0;
  for (size_t v : dd) {
    if (ni_mask.get(v)) ++overlap;
  }
  if (overlap % 2 == 0) {
    throw std::invalid_argument(
        "D overlaps the dealer neighborhood evenly; nothing to teleport");
  }
  auto nbrs = graph.neighbors(dealer);
  if (nbrs.empty()) {
    throw std::invalid_argument("the dealer has no neighbors to entangle");
  }
  double secret_norm = std::sqrt(std::norm(a) + std::norm(b));
  if (secret_norm < 1e-12) {
    throw std::invalid_argument("the secret amplitudes are both zero");
  }
  a /= secret_norm;
  b /= secret_norm;

  // Shares in the graph state of G minus the dealer, dealer in the secret,
  // then the CZ layer: together the phase is the full edge sum of G.
  auto edges = graph.edges();
  std::vector<std::pair<size_t, size_t>> masks;
  for (auto [u, v] : edges) {
    masks.emplace_back(qubit_bit(n, u), qubit_bit(n, v));
  }
  size_t dealer_mask = qubit_bit(n, dealer);
  StateVector psi;
  psi.n = n;
  psi.amp.resize(size_t{1} << n);
  double scale = std::pow(2.0, -static_cast<double>(n - 1) / 2.0);
  for (size_t s = 0; s < psi.amp.size(); ++s) {
    size_t parity = 0;
    for (auto [mu, mv] : masks) {
      if ((s & mu) && (s & mv)) parity ^= 1;
    }
    cd amp = (s & dealer_mask) ? b : a;
    psi.amp[s] = (parity ? -scale : scale) * amp;
  }

  // Recovery operators, on share labels (dealer coordinate removed).
  PauliOperator kd(n);
  for (size_t v : dd) kd = kd * vertex_stabilizer(graph, v);
  BitVector kx = kd.x();
  BitVector kz = kd.z();
  kz.set(dealer, false);
  PauliOperator k_rest = drop_coordinate(
      PauliOperator(std::move(kx), std::move(kz), kd.phase()), dealer);
  BitVector odd = odd_neighborhood(graph, BitVector::from_support(n, dd));
  odd.set(dealer, false);
  PauliOperator u_prime(odd, BitVector::from_support(n, dd), 0);
  if (!u_prime.is_hermitian()) {
    throw std::invalid_argument(
        "D meets its own odd neighborhood; pick D inside one bipartition "
        "part");
  }
  PauliOperator u_rest = drop_coordinate(u_prime, dealer);

  PauliOperator correction(n - 1);
  {
    // K'_j of G minus the dealer, on share labels.
    size_t j = nbrs.front();
    VertexDeletion del = delete_vertex(graph, dealer);
    correction =
        vertex_stabilizer(del.graph, static_cast<size_t>(del.old_to_new[j]));
  }

  double worst = 1.0;
  for (int branch = 0; branch < 2; ++branch) {
    // Project X_dealer onto (-1)^branch and fold the dealer qubit away.
    StateVector after;
    after.n = n - 1;
    after.amp.resize(size_t{1} << (n - 1));
    double sgn = branch ? -1.0 : 1.0;
    for (size_t y = 0; y < after.amp.size(); ++y) {
      size_t high = y >> (n - 1 - dealer);
      size_t low = y & ((size_t{1} << (n - 1 - dealer)) - 1);
      size_t s0 = (high << (n - dealer)) | low;
      size_t s1 = s0 | dealer_mask;
      after.amp[y] = (psi.amp[s0] + sgn * psi.amp[s1]) / std::sqrt(2.0);
    }
    double p = norm_squared(after);
    if (p < 1e-12) continue;
    for (cd& amp : after.amp) amp /= std::sqrt(p);
    if (branch) {
      apply_pauli_masked(correction, after, 0, 0);
    }

    // Ancilla |+> appended as the last qubit (least significant bit).
    StateVector ext;
    ext.n = n;
    ext.amp.resize(size_t{1} << n);
    for (size_t y = 0; y < after.amp.size(); ++y) {
      ext.amp[(y << 1)] = after.amp[y] / std::sqrt(2.0);
      ext.amp[(y << 1) | 1] = after.amp[y] / std::sqrt(2.0);
    }
    auto widen = [&](const PauliOperator& p_small) {
      BitVector x(n);
      BitVector z(n);
      for (size_t q = 0; q + 1 < n; ++q) {
        if (p_small.x().get(q)) x.set(q, true);
        if (p_small.z().get(q)) z.set(q, true);
      }
      return PauliOperator(std::move(x), std::move(z), p_small.phase());
    };
    apply_pauli_masked(widen(k_rest), ext, 1, 1);
    // H on the ancilla.
    for (size_t y = 0; y < ext.amp.size(); y += 2) {
      cd lo = ext.amp[y];
      cd hi = ext.amp[y + 1];
      ext.amp[y] = (lo + hi) / std::sqrt(2.0);
      ext.amp[y + 1] = (lo - hi) / std::sqrt(2.0);
    }
    apply_pauli_masked(widen(u_rest), ext, 1, 1);

    ComplexMatrix rho = reduced_density(ext, {n - 1});
    cd fid = std::conj(a) * (rho[0][0] * a + rho[0][1] * b) +
             std::conj(b) * (rho[1][0] * a + rho[1][1] * b);
    worst = std::min(worst, fid.real());
  }
  return worst;
}

StateVector dense_from_generators(const std::vector<PauliOperator>& gens) {
  if (gens.empty()) {
    throw std::invalid_argument("need at least one generator");
  }
  size_t n = gens.front().num_qubits();
  if (n > kDenseQubitCap) {
    throw std::invalid_argument("dense simulation caps at " +
                                std::to_string(kDenseQubitCap) + " qubits");
  }
  if (gens.size() != n) {
    throw std::invalid_argument("a pure state needs n generators");
  }
  size_t dim = size_t{1} << n;
  for (size_t start = 0; start < dim; ++start) {
    StateVector psi;
    psi.n = n;
    psi.amp.assign(dim, cd(0, 0));
    psi.amp[start] = cd(1, 0);
    bool dead = false;
    for (const auto& g : gens) {
      StateVector moved = apply_pauli_dense(g, psi);
      for (size_t s = 0; s < dim; ++s) {
        psi.amp[s] = (psi.amp[s] + moved.amp[s]) / 2.0;
      }
      if (norm_squared(psi) < 1e-18) {
        dead = true;
        break;
      }
    }
    if (dead) continue;
    double nn = std::sqrt(norm_squared(psi));
    if (nn < 1e-9) continue;
    for (cd& amp : psi.amp) amp /= nn;
    return psi;
  }
  throw std::invalid_argument("generators do not fix a pure state");
}

}  // namespace graphshare
