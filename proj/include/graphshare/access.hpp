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

#ifndef GRAPHSHARE_ACCESS_HPP
#define GRAPHSHARE_ACCESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphshare/graph.hpp"
#include "graphshare/stabilizer_code.hpp"

namespace graphshare {

/// Classical bit shared through Z_A^s on the graph state of `graph`.
struct SchemeCC {
  Graph graph;
  std::vector<size_t> a_set;  // sorted, deduplicated, non-empty
};

SchemeCC make_scheme_cc(Graph graph, std::vector<size_t> a_set);

/// Quantum secret dealt from vertex `dealer` of a bipartite graph whose
/// biadjacency P satisfies P P^t = I. Shares live on the remaining n-1
/// vertices; the equivalent classical scheme is (graph minus dealer, N_i).
struct SchemeQQ {
  Graph graph;
  size_t dealer = 0;
  std::vector<size_t> dealer_part;  // bipartition side holding the dealer
  std::vector<size_t> share_part;   // opposite side; recovery sets D live here
  VertexDeletion share;             // graph minus dealer, with label maps
  std::vector<size_t> a_share;      // N_dealer in share-graph labels
};

SchemeQQ make_scheme_qq(const Graph& graph, size_t dealer);

/// The CC scheme (share graph, N_dealer) underlying a QQ scheme.
SchemeCC cc_scheme(const SchemeQQ& qq);

/// Antichain of minimal authorized sets. QQ structures keep the original
/// graph's vertex labels (dealer absent); CC structures label players
/// 0..n-1 directly.
struct AccessStructure {
  size_t player_count = 0;
  std::vector<std::vector<size_t>> minimal_sets;  // ascending sets, sorted
};

/// Witness D subseteq S with Odd(D) subseteq S and |D cap A| odd, i.e. the
/// measurement set proving S can read the secret. Decided by one GF(2)
/// solve: {adjacency rows V minus S, columns S} x = 0 and chi_A|_S . x = 1.
std::optional<std::vector<size_t>> authorized_witness(
    const SchemeCC& scheme, const std::vector<size_t>& s);

/// Witness K subseteq V minus S with Odd(K) cap S = A cap S, proving S
/// learns nothing. Decided by {adjacency rows S, columns V minus S} y =
/// chi_{A cap S}.
std::optional<std::vector<size_t>> unauthorized_witness(
    const SchemeCC& scheme, const std::vector<size_t>& s);

/// Minimal supports over the logical-Z coset of graph_to_code(scheme).
AccessStructure cc_generators(const SchemeCC& scheme, size_t cap = kCosetCap);

/// Enumerates D over the share part with |D cap N_dealer| odd and collects
/// the minimal sets D cup Odd(D) minus dealer.
AccessStructure qq_generators(const SchemeQQ& scheme, size_t cap = kCosetCap);

/// Subset-minimal antichain of the family's up-closure.
std::vector<std::vector<size_t>> minimize(
    const std::vector<std::vector<size_t>>& family);

enum class ClassifyMethod { kGraphical, kGenerators, kOracle };

/// Exhaustive labeling of all 2^players subsets. `witness[mask]` holds the
/// witness D (authorized) or K (unauthorized) as a bit mask where the
/// deciding method produced one, else -1.
struct Classification {
  size_t player_count = 0;
  ClassifyMethod method = ClassifyMethod::kGraphical;
  std::vector<uint8_t> authorized;
  std::vector<int32_t> witness;
};

/// playerCount capped at 20 (12 for the oracle method). Subsets are split
/// across workers (GRAPHSHARE_WORKERS caps the count); a subset where the
/// method's two conditions both hold or both fail raises a diagnostic
/// error naming it.
Classification classify(const SchemeCC& scheme, ClassifyMethod method);

/// Throws with the first offending subset when two classifications differ.
void require_agreement(const Classification& a, const Classification& b);

AccessStructure minimal_from_classification(const Classification& c);

/// Exactly one of S, complement(S) authorized, for every subset.
bool check_perfect(const Classification& c);

/// All pairs of minimal sets intersect.
bool check_no_cloning(const AccessStructure& acc);

/// GRAPHSHARE_WORKERS when set, else hardware concurrency, clamped to
/// [1, 16].
size_t worker_count();

std::string method_name(ClassifyMethod m);
std::optional<ClassifyMethod> method_from_name(std::string_view name);

}  // namespace graphshare

#endif
