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

#include "graphshare/graph.hpp"

#include <deque>
#include <random>
#include <sstream>
#include <stdexcept>

namespace graphshare {

Graph Graph::from_edges(size_t n,
                        const std::vector<std::pair<size_t, size_t>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_adjacency(BitMatrix adj) {
  if (adj.rows() != adj.cols()) {
    throw std::invalid_argument("Graph::from_adjacency: matrix not square");
  }
  if (!adj.is_symmetric()) {
    throw std::invalid_argument("Graph::from_adjacency: matrix not symmetric");
  }
  if (!adj.has_zero_diagonal()) {
    throw std::invalid_argument("Graph::from_adjacency: nonzero diagonal");
  }
  Graph g;
  g.n_ = adj.rows();
  g.adj_ = std::move(adj);
  return g;
}

void Graph::add_edge(size_t u, size_t v) {
  if (u >= n_ || v >= n_) {
    throw std::out_of_range("Graph::add_edge: vertex out of range");
  }
  if (u == v) throw std::invalid_argument("Graph::add_edge: self loop");
  adj_.set(u, v, true);
  adj_.set(v, u, true);
}

bool Graph::has_edge(size_t u, size_t v) const {
  if (u >= n_ || v >= n_) {
    throw std::out_of_range("Graph::has_edge: vertex out of range");
  }
  return adj_.get(u, v);
}

size_t Graph::num_edges() const {
  size_t total = 0;
  for (size_t v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

std::vector<std::pair<size_t, size_t>> Graph::edges() const {
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t u = 0; u < n_; ++u) {
    for (size_t v = u + 1; v < n_; ++v) {
      if (adj_.get(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

BitVector odd_neighborhood(const Graph& g, const BitVector& d) {
  if (d.size() != g.num_vertices()) {
    throw std::invalid_argument("odd_neighborhood: set size mismatch");
  }
  return g.adjacency().vec_mul(d);
}

std::vector<size_t> odd_neighborhood(const Graph& g,
                                     const std::vector<size_t>& d) {
  return odd_neighborhood(g, BitVector::from_support(g.num_vertices(), d))
      .support();
}

std::optional<Bipartition> bipartition(const Graph& g) {
  size_t n = g.num_vertices();
  std::vector<int> color(n, -1);
  for (size_t start = 0; start < n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::deque<size_t> queue{start};
    while (!queue.empty()) {
      size_t v = queue.front();
      queue.pop_front();
      for (size_t u : g.neighbors(v)) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition part;
  for (size_t v = 0; v < n; ++v) {
    (color[v] == 0 ? part.left : part.right).push_back(v);
  }
  part.biadjacency = g.adjacency().submatrix(part.left, part.right);
  return part;
}

OrthogonalityCheck check_orthogonal(const BitMatrix& p) {
  if (p.rows() != p.cols()) {
    return {false, "matrix is not square (" + std::to_string(p.rows()) + "x" +
                       std::to_string(p.cols()) + ")"};
  }
  BitMatrix prod = p * p.transpose();
  if (prod != BitMatrix::identity(p.rows())) {
    return {false, "P * P^t is not the identity"};
  }
  return {true, ""};
}

VertexDeletion delete_vertex(const Graph& g, size_t v) {
  size_t n = g.num_vertices();
  if (v >= n) throw std::out_of_range("delete_vertex: vertex out of range");
  VertexDeletion del;
  del.removed = v;
  del.old_to_new.assign(n, -1);
  for (size_t u = 0; u < n; ++u) {
    if (u == v) continue;
    del.old_to_new[u] = static_cast<int>(del.new_to_old.size());
    del.new_to_old.push_back(u);
  }
  Graph h(n - 1);
  for (auto [a, b] : g.edges()) {
    if (a == v || b == v) continue;
    h.add_edge(del.old_to_new[a], del.old_to_new[b]);
  }
  del.graph = std::move(h);
  return del;
}

Graph random_orthogonal_graph(size_t k, uint64_t seed) {
  if (k == 0) throw std::invalid_argument("random_orthogonal_graph: k == 0");
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (k + 1)));

  std::vector<size_t> perm(k);
  for (size_t i = 0; i < k; ++i) perm[i] = i;
  for (size_t i = k; i > 1; --i) {
    std::uniform_int_distribution<size_t> dist(0, i - 1);
    std::swap(perm[i - 1], perm[dist(rng)]);
  }
  BitMatrix p(k, k);
  for (size_t i = 0; i < k; ++i) p.set(i, perm[i], true);

  // Random orthogonal transvections x -> x + (x.v) v with |v| even.
  std::uniform_int_distribution<uint64_t> word;
  size_t factors = 2 * k + 2;
  for (size_t t = 0; t < factors; ++t) {
    BitVector v(k);
    for (size_t i = 0; i < k; ++i) v.set(i, (word(rng) & 1) != 0);
    if (v.popcount() & 1) v.flip(word(rng) % k);
    if (v.none()) continue;
    // p <- p * (I + v v^t): add to each row r (row_r . v) * v.
    for (size_t r = 0; r < k; ++r) {
      if (p.row(r).dot(v)) {
        BitVector updated = p.row(r) ^ v;
        p.set_row(r, std::move(updated));
      }
    }
  }

  Graph g(2 * k);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      if (p.get(i, j)) g.add_edge(i, k + j);
    }
  }
  return g;
}

namespace {

[[noreturn]] void fail_line(size_t line, const std::string& message) {
  throw std::invalid_argument("edge list, line " + std::to_string(line) +
                              ": " + message);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::istringstream stream{std::string(text)};
  std::string line;
  size_t line_no = 0;
  bool have_header = false;
  size_t n = 0;
  Graph g;
  while (std::getline(stream, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream fields(line);
    std::string extra;
    if (!have_header) {
      std::string tag;
      if (!(fields >> tag)) continue;  // blank line
      if (tag != "n") {
        fail_line(line_no, "expected header \"n <vertexCount>\"");
      }
      long long count = -1;
      if (!(fields >> count) || count < 0) {
        fail_line(line_no, "bad vertex count");
      }
      if (fields >> extra) fail_line(line_no, "trailing tokens in header");
      have_header = true;
      n = static_cast<size_t>(count);
      g = Graph(n);
      continue;
    }
    long long u = -1, v = -1;
    if (!(fields >> u)) continue;  // blank line
    if (!(fields >> v)) fail_line(line_no, "expected \"u v\"");
    if (fields >> extra) fail_line(line_no, "trailing tokens after edge");
    if (u < 0 || v < 0 || static_cast<size_t>(u) >= n ||
        static_cast<size_t>(v) >= n) {
      fail_line(line_no, "vertex index out of range");
    }
    if (u == v) fail_line(line_no, "self loop");
    if (g.has_edge(u, v)) fail_line(line_no, "duplicate edge");
    g.add_edge(u, v);
  }
  if (!have_header) {
    throw std::invalid_argument(
        "edge list: missing header \"n <vertexCount>\"");
  }
  return g;
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.num_vertices() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

std::string to_dot(const Graph& g, const std::vector<size_t>* a_set) {
  BitVector marked(g.num_vertices());
  if (a_set != nullptr) {
    for (size_t v : *a_set) marked.set(v, true);
  }
  std::ostringstream out;
  out << "graph G {\n";
  for (size_t v = 0; v < g.num_vertices(); ++v) {
    out << "  " << v;
    if (marked.get(v)) out << " [peripheries=2]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace graphshare
