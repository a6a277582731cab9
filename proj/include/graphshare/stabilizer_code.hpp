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

#ifndef GRAPHSHARE_STABILIZER_CODE_HPP
#define GRAPHSHARE_STABILIZER_CODE_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphshare/graph.hpp"
#include "graphshare/pauli.hpp"

namespace graphshare {

/// Coset enumeration walks 2^(n-1) group elements; past this qubit count the
/// graphical deciders are the only practical route.
inline constexpr size_t kCosetCap = 22;

/// [[n, k]] stabilizer code with k = n - generators in {0, 1}. Signs of the
/// generators are part of the code: they pin the actual fixed subspace.
struct StabilizerCode {
  size_t n = 0;
  std::vector<PauliOperator> generators;
  std::optional<PauliOperator> logical_x;
  std::optional<PauliOperator> logical_z;
  std::optional<size_t> distance;  // metadata only, never computed here

  size_t k() const { return n - generators.size(); }

  /// Throws std::invalid_argument naming the first violated invariant:
  /// operator widths, pairwise commutation, GF(2) independence, k in {0,1},
  /// logicals commuting with the group and anticommuting with each other.
  void validate() const;
};

/// One row per operator: [x block | z block], 2n columns.
BitMatrix symplectic_matrix(const std::vector<PauliOperator>& ops);

/// (x | z) of a single operator as a 2n-bit row.
BitVector symplectic_row(const PauliOperator& p);

/// Canonical generating set of the signed group <gens>: symplectic RREF over
/// columns (x_0..x_{n-1}, z_0..z_{n-1}) where row operations are exact
/// operator products. Unique for any group not containing -I, so equality of
/// the returned lists is equality of signed groups.
std::vector<PauliOperator> canonical_generators(
    std::vector<PauliOperator> gens);

/// Same group including signs.
bool same_group(const std::vector<PauliOperator>& a,
                const std::vector<PauliOperator>& b);

/// Same GF(2) row space (signs ignored).
bool same_group_gf2(const std::vector<PauliOperator>& a,
                    const std::vector<PauliOperator>& b);

/// Coefficient vector c with prod gens[j]^{c_j} matching p's (x, z), or
/// nullopt when that vector is outside the span. Deterministic: free
/// coefficients come out zero.
std::optional<BitVector> group_coefficients(
    const std::vector<PauliOperator>& gens, const PauliOperator& p);

/// If p's (x, z) vector lies in the span of the generators, returns the
/// exact group element with that (x, z); p then equals i^d times the result
/// for some d. Returns nullopt when the vector is outside the span.
std::optional<PauliOperator> group_element_matching(
    const std::vector<PauliOperator>& gens, const PauliOperator& p);

/// K_v = X_v prod_{u in N_v} Z_u.
PauliOperator vertex_stabilizer(const Graph& g, size_t v);

/// CC scheme code for (G, A): the index-2 subgroup of <K_v> commuting with
/// Z_A, generated deterministically as K_v for v outside A plus K_{a0} K_a
/// for every a in A past the pivot a0 = min(A), in vertex order. Logical Z
/// is K_{a0}, logical X is Z_A; the code space is span{|G>, Z_A|G>}.
StabilizerCode graph_to_code(const Graph& g, const std::vector<size_t>& a_set);

/// Streams all 2^(n-1) elements of logicalZ * S exactly once (Gray-code
/// order, one operator product per step). Requires k = 1 with a logical Z;
/// throws past the cap, pointing at the graphical decider.
void for_each_logical_z(const StabilizerCode& code,
                        const std::function<void(const PauliOperator&)>& fn,
                        size_t cap = kCosetCap);

std::vector<PauliOperator> logical_z_coset(const StabilizerCode& code,
                                           size_t cap = kCosetCap);

/// [[2k, 0]] state code with stabilizer rows [I P | 0 0] and [0 0 | I P].
/// Requires P square with P P^t = I; that identity is exactly what makes the
/// X-type and Z-type rows commute.
StabilizerCode css_state_code(const BitMatrix& p);

/// Deletes qubit i from an [[n, 0]] state code, producing the [[n-1, 1]]
/// code whose stabilizer is the restriction of every group element acting
/// trivially on i. Logicals are the restrictions of the elements acting as
/// X_i and Z_i. Throws when qubit i carries no such anticommuting pair.
StabilizerCode puncture(const StabilizerCode& code, size_t i);

/// Text format: '#' comments, one Pauli string per line for the generators,
/// then optional "LX:" / "LZ:" section headers each followed by one Pauli
/// line. Errors carry 1-based line numbers.
StabilizerCode parse_stabilizer_file(std::string_view text);
std::string serialize_stabilizer_file(const StabilizerCode& code);

}  // namespace graphshare

#endif
