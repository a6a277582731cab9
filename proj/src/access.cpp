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

#include "graphshare/access.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "graphshare/statevector.hpp"

namespace graphshare {

namespace {

std::vector<size_t> normalize_vertices(std::vector<size_t> s, size_t n,
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

std::vector<size_t> complement_of(const std::vector<size_t>& s, size_t n) {
  std::vector<size_t> out;
  out.reserve(n - s.size());
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

std::string set_str(const std::vector<size_t>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

uint64_t mask_of(const std::vector<size_t>& s) {
  uint64_t m = 0;
  for (size_t v : s) {
    if (v >= 64) {
      throw std::invalid_argument("player labels past 63 are not supported");
    }
    m |= uint64_t{1} << v;
  }
  return m;
}

std::vector<size_t> set_of(uint64_t mask) {
  std::vector<size_t> out;
  while (mask) {
    out.push_back(static_cast<size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

// Subset-minimal masks. Sorting by popcount first means every potential
// cover of a candidate has already been kept when the candidate is seen.
std::vector<uint64_t> minimize_masks(std::vector<uint64_t> masks) {
  std::sort(masks.begin(), masks.end(), [](uint64_t a, uint64_t b) {
    int pa = std::popcount(a);
    int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<uint64_t> kept;
  for (uint64_t m : masks) {
    bool covered = false;
    for (uint64_t k : kept) {
      if ((k & m) == k) {
        covered = true;
        break;
      }
    }
    if (!covered) kept.push_back(m);
  }
  return kept;
}

AccessStructure structure_from_masks(size_t player_count,
                                     std::vector<uint64_t> masks) {
  AccessStructure acc;
  acc.player_count = player_count;
  for (uint64_t m : minimize_masks(std::move(masks))) {
    acc.minimal_sets.push_back(set_of(m));
  }
  std::sort(acc.minimal_sets.begin(), acc.minimal_sets.end());
  return acc;
}

// Splits [0, total) across worker_count() threads. The first exception
// wins and is rethrown after the join.
void run_partitioned(size_t total,
                     const std::function<void(size_t, size_t)>& chunk_fn) {
  size_t workers = std::min(worker_count(), std::max<size_t>(total, 1));
  if (workers <= 1) {
    chunk_fn(0, total);
    return;
  }
  std::vector<std::thread> pool;
  std::mutex mu;
  std::exception_ptr first;
  size_t step = (total + workers - 1) / workers;
  for (size_t w = 0; w < workers; ++w) {
    size_t lo = w * step;
    size_t hi = std::min(total, lo + step);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      try {
        chunk_fn(lo, hi);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first) first = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first) std::rethrow_exception(first);
}

}  // namespace

SchemeCC make_scheme_cc(Graph graph, std::vector<size_t> a_set) {
  size_t n = graph.num_vertices();
  a_set = normalize_vertices(std::move(a_set), n, "A");
  if (a_set.empty()) {
    throw std::invalid_argument("the sharing set A must be non-empty");
  }
  return SchemeCC{std::move(graph), std::move(a_set)};
}

SchemeQQ make_scheme_qq(const Graph& graph, size_t dealer) {
  size_t n = graph.num_vertices();
  if (dealer >= n) {
    throw std::out_of_range("dealer " + std::to_string(dealer) + " of a " +
                            std::to_string(n) + "-vertex graph");
  }
  auto bp = bipartition(graph);
  if (!bp) {
    throw std::invalid_argument("QQ schemes need a bipartite graph");
  }
  auto check = check_orthogonal(bp->biadjacency);
  if (!check) {
    throw std::invalid_argument("QQ schemes need P P^t = I: " + check.reason);
  }
  bool dealer_left =
      std::binary_search(bp->left.begin(), bp->left.end(), dealer);
  SchemeQQ qq;
  qq.graph = graph;
  qq.dealer = dealer;
  qq.dealer_part = dealer_left ? bp->left : bp->right;
  qq.share_part = dealer_left ? bp->right : bp->left;
  qq.share = delete_vertex(graph, dealer);
  for (size_t u : graph.neighbors(dealer)) {
    qq.a_share.push_back(static_cast<size_t>(qq.share.old_to_new[u]));
  }
  return qq;
}

SchemeCC cc_scheme(const SchemeQQ& qq) {
  return make_scheme_cc(qq.share.graph, qq.a_share);
}

std::optional<std::vector<size_t>> authorized_witness(
    const SchemeCC& scheme, const std::vector<size_t>& s) {
  size_t n = scheme.graph.num_vertices();
  auto cols = normalize_vertices(s, n, "S");
  auto outside = complement_of(cols, n);
  BitMatrix block = scheme.graph.adjacency().submatrix(outside, cols);
  std::vector<BitVector> rows;
  rows.reserve(block.rows() + 1);
  for (size_t i = 0; i < block.rows(); ++i) rows.push_back(block.row(i));
  BitVector chi(cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (std::binary_search(scheme.a_set.begin(), scheme.a_set.end(),
                           cols[j])) {
      chi.set(j, true);
    }
  }
  rows.push_back(chi);
  BitVector b(rows.size());
  b.set(rows.size() - 1, true);
  auto sol = solve(BitMatrix::from_rows(std::move(rows)), b);
  if (!sol) return std::nullopt;
  std::vector<size_t> d;
  for (size_t j = 0; j < cols.size(); ++j) {
    if (sol->particular.get(j)) d.push_back(cols[j]);
  }
  return d;
}

std::optional<std::vector<size_t>> unauthorized_witness(
    const SchemeCC& scheme, const std::vector<size_t>& s) {
  size_t n = scheme.graph.num_vertices();
  auto rows = normalize_vertices(s, n, "S");
  auto cols = complement_of(rows, n);
  BitMatrix block = scheme.graph.adjacency().submatrix(rows, cols);
  BitVector b(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (std::binary_search(scheme.a_set.begin(), scheme.a_set.end(),
                           rows[i])) {
      b.set(i, true);
    }
  }
  auto sol = solve(block, b);
  if (!sol) return std::nullopt;
  std::vector<size_t> k;
  for (size_t j = 0; j < cols.size(); ++j) {
    if (sol->particular.get(j)) k.push_back(cols[j]);
  }
  return k;
}

AccessStructure cc_generators(const SchemeCC& scheme, size_t cap) {
  StabilizerCode code = graph_to_code(scheme.graph, scheme.a_set);
  std::vector<uint64_t> masks;
  std::unordered_set<uint64_t> seen;
  for_each_logical_z(
      code,
      [&](const PauliOperator& p) {
        uint64_t m = mask_of(p.support());
        if (seen.insert(m).second) masks.push_back(m);
      },
      cap);
  return structure_from_masks(scheme.graph.num_vertices(), std::move(masks));
}

AccessStructure qq_generators(const SchemeQQ& scheme, size_t cap) {
  const auto& part = scheme.share_part;
  if (part.size() > cap) {
    throw std::invalid_argument(
        "recovery-set enumeration over " + std::to_string(part.size()) +
        " vertices exceeds the cap of " + std::to_string(cap));
  }
  size_t n = scheme.graph.num_vertices();
  std::vector<uint64_t> row_mask(n, 0);
  for (size_t v = 0; v < n; ++v) {
    row_mask[v] = mask_of(scheme.graph.neighbors(v));
  }
  uint64_t ni = row_mask[scheme.dealer];
  uint64_t dealer_bit = uint64_t{1} << scheme.dealer;
  uint64_t cur_d = 0;
  uint64_t cur_odd = 0;
  std::vector<uint64_t> found;
  std::unordered_set<uint64_t> seen;
  uint64_t total = uint64_t{1} << part.size();
  // Gray-code walk: step i toggles the vertex indexed by the lowest set
  // bit of i, so D and Odd(D) update in O(1).
  for (uint64_t step = 1; step < total; ++step) {
    size_t v = part[static_cast<size_t>(std::countr_zero(step))];
    cur_d ^= uint64_t{1} << v;
    cur_odd ^= row_mask[v];
    if (std::popcount(cur_d & ni) % 2 == 1) {
      uint64_t m = (cur_d | cur_odd) & ~dealer_bit;
      if (seen.insert(m).second) found.push_back(m);
    }
  }
  return structure_from_masks(n - 1, std::move(found));
}

std::vector<std::vector<size_t>> minimize(
    const std::vector<std::vector<size_t>>& family) {
  std::vector<uint64_t> masks;
  masks.reserve(family.size());
  for (const auto& s : family) masks.push_back(mask_of(s));
  std::vector<std::vector<size_t>> out;
  for (uint64_t m : minimize_masks(std::move(masks))) out.push_back(set_of(m));
  std::sort(out.begin(), out.end());
  return out;
}

Classification classify(const SchemeCC& scheme, ClassifyMethod method) {
  size_t n = scheme.graph.num_vertices();
  if (n > 20) {
    throw std::invalid_argument(
        "classify enumerates 2^players subsets and caps at 20 players");
  }
  size_t total = size_t{1} << n;
  Classification c;
  c.player_count = n;
  c.method = method;
  c.authorized.assign(total, 0);
  c.witness.assign(total, -1);

  if (method == ClassifyMethod::kGraphical) {
    run_partitioned(total, [&](size_t lo, size_t hi) {
      for (size_t mask = lo; mask < hi; ++mask) {
        auto subset = set_of(mask);
        auto d = authorized_witness(scheme, subset);
        auto k = unauthorized_witness(scheme, subset);
        if (d && k) {
          throw std::runtime_error("subset " + set_str(subset) +
                                   " passes both graphical deciders");
        }
        if (!d && !k) {
          throw std::runtime_error("subset " + set_str(subset) +
                                   " passes neither graphical decider");
        }
        c.authorized[mask] = d ? 1 : 0;
        c.witness[mask] = static_cast<int32_t>(mask_of(d ? *d : *k));
      }
    });
  } else if (method == ClassifyMethod::kGenerators) {
    AccessStructure acc = cc_generators(scheme);
    std::vector<uint64_t> gens;
    gens.reserve(acc.minimal_sets.size());
    for (const auto& g : acc.minimal_sets) gens.push_back(mask_of(g));
    run_partitioned(total, [&](size_t lo, size_t hi) {
      for (size_t mask = lo; mask < hi; ++mask) {
        for (uint64_t g : gens) {
          if ((g & mask) == g) {
            c.authorized[mask] = 1;
            c.witness[mask] = static_cast<int32_t>(g);
            break;
          }
        }
      }
    });
  } else {
    if (n > 12) {
      throw std::invalid_argument(
          "oracle classification caps at 12 qubits");
    }
    auto pair = cc_pair(scheme);
    run_partitioned(total, [&](size_t lo, size_t hi) {
      for (size_t mask = lo; mask < hi; ++mask) {
        auto subset = set_of(mask);
        bool auth = check_authorized_dense(pair.first, pair.second, subset);
        bool unauth =
            check_unauthorized_dense(pair.first, pair.second, subset);
        if (auth == unauth) {
          throw std::runtime_error("the oracle cannot settle subset " +
                                   set_str(subset));
        }
        c.authorized[mask] = auth ? 1 : 0;
      }
    });
  }
  return c;
}

void require_agreement(const Classification& a, const Classification& b) {
  if (a.player_count != b.player_count) {
    throw std::runtime_error("classifications cover different player counts");
  }
  for (size_t mask = 0; mask < a.authorized.size(); ++mask) {
    if (a.authorized[mask] != b.authorized[mask]) {
      throw std::runtime_error(
          method_name(a.method) + " and " + method_name(b.method) +
          " disagree on subset " + set_str(set_of(mask)));
    }
  }
}

AccessStructure minimal_from_classification(const Classification& c) {
  std::vector<uint64_t> masks;
  for (size_t mask = 0; mask < c.authorized.size(); ++mask) {
    if (c.authorized[mask]) masks.push_back(mask);
  }
  return structure_from_masks(c.player_count, std::move(masks));
}

bool check_perfect(const Classification& c) {
  size_t full = c.authorized.size() - 1;
  for (size_t mask = 0; mask < c.authorized.size(); ++mask) {
    if (c.authorized[mask] == c.authorized[full ^ mask]) return false;
  }
  return true;
}

bool check_no_cloning(const AccessStructure& acc) {
  std::vector<uint64_t> masks;
  masks.reserve(acc.minimal_sets.size());
  for (const auto& s : acc.minimal_sets) masks.push_back(mask_of(s));
  for (size_t i = 0; i < masks.size(); ++i) {
    for (size_t j = i + 1; j < masks.size(); ++j) {
      if ((masks[i] & masks[j]) == 0) return false;
    }
  }
  return true;
}

size_t worker_count() {
  if (const char* env = std::getenv("GRAPHSHARE_WORKERS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 1) {
      return std::min<size_t>(static_cast<size_t>(v), 16);
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return std::clamp<size_t>(hw == 0 ? 1 : hw, 1, 16);
}

std::string method_name(ClassifyMethod m) {
  switch (m) {
    case ClassifyMethod::kGraphical:
      return "graphical";
    case ClassifyMethod::kGenerators:
      return "generators";
    case ClassifyMethod::kOracle:
      return "oracle";
  }
  throw std::logic_error("unknown classify method");
}

std::optional<ClassifyMethod> method_from_name(std::string_view name) {
  if (name == "graphical") return ClassifyMethod::kGraphical;
  if (name == "generators") return ClassifyMethod::kGenerators;
  if (name == "oracle") return ClassifyMethod::kOracle;
  return std::nullopt;
}

}  // namespace graphshare
