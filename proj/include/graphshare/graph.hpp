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

#ifndef GRAPHSHARE_GRAPH_HPP
#define GRAPHSHARE_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphshare/bitmatrix.hpp"

namespace graphshare {

/// Simple undirected graph (no self loops, no multi-edges) stored as a
/// symmetric GF(2) adjacency matrix.
class Graph {
 public:
  Graph() = default;
  explicit Graph(size_t n) : n_(n), adj_(n, n) {}

  static Graph from_edges(size_t n,
                          const std::vector<std::pair<size_t, size_t>>& edges);
  /// Adjacency matrix must be square, symmetric, zero-diagonal.
  static Graph from_adjacency(BitMatrix adj);

  size_t num_vertices() const { return n_; }
  const BitMatrix& adjacency() const { return adj_; }

  void add_edge(size_t u, size_t v);
  bool has_edge(size_t u, size_t v) const;

  const BitVector& neighbor_mask(size_t v) const { return adj_.row(v); }
  std::vector<size_t> neighbors(size_t v) const { return adj_.row(v).support(); }
  size_t degree(size_t v) const { return adj_.row(v).popcount(); }
  size_t num_edges() const;
  std::vector<std::pair<size_t, size_t>> edges() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }
  bool operator!=(const Graph& other) const { return !(*this == other); }

 private:
  size_t n_ = 0;
  BitMatrix adj_;
};

/// Odd(D) = { v : |N_v intersect D| is odd } = supp(chi_D * A_G).
BitVector odd_neighborhood(const Graph& g, const BitVector& d);
std::vector<size_t> odd_neighborhood(const Graph& g,
                                     const std::vector<size_t>& d);

struct Bipartition {
  std::vector<size_t> left;    // ascending; contains the lowest-index vertex
  std::vector<size_t> right;   // ascending
  BitMatrix biadjacency;       // rows indexed by left, columns by right
};

/// Two-coloring via BFS. For each connected component the lowest-index
/// vertex goes to the left part. nullopt when an odd cycle exists.
std::optional<Bipartition> bipartition(const Graph& g);

struct OrthogonalityCheck {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// True iff p is square and p * p^t = I.
OrthogonalityCheck check_orthogonal(const BitMatrix& p);

struct VertexDeletion {
  Graph graph;                  // n-1 vertices, compact labels
  std::vector<int> old_to_new;  // -1 for the removed vertex
  std::vector<size_t> new_to_old;
  size_t removed = 0;
};

VertexDeletion delete_vertex(const Graph& g, size_t v);

/// Bipartite graph on 2k vertices (parts {0..k-1}, {k..2k-1}) whose
/// biadjacency P satisfies P P^t = I. Deterministic per (k, seed): a random
/// permutation matrix multiplied by random even-weight transvections
/// I + v v^t, which are exactly orthogonal since v.v = 0.
Graph random_orthogonal_graph(size_t k, uint64_t seed);

/// Edge-list format: optional '#' comment lines, a header "n <count>", then
/// one "u v" pair per line. Errors carry 1-based line numbers.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

/// Graphviz output; vertices in a_set are drawn with doubled periphery.
std::string to_dot(const Graph& g, const std::vector<size_t>* a_set = nullptr);

}  // namespace graphshare

#endif
