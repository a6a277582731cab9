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

#ifndef GRAPHSHARE_TESTS_TESTUTIL_HPP
#define GRAPHSHARE_TESTS_TESTUTIL_HPP

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphshare/graph.hpp"
#include "graphshare/pauli.hpp"
#include "graphshare/stabilizer_code.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) {
  return std::string(GRAPHSHARE_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("test data missing: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline graphshare::Graph ref8() {
  return graphshare::parse_edge_list(slurp(data_path("ref8.graph")));
}

inline graphshare::Graph path3() {
  return graphshare::parse_edge_list(slurp(data_path("path3.graph")));
}

inline graphshare::StabilizerCode five_qubit() {
  return graphshare::parse_stabilizer_file(
      slurp(data_path("five_qubit.stab")));
}

/// Random [[n, 1]] code: the trivial code {Z_1..Z_{n-1}} with logicals
/// X_0/Z_0, pushed through a random H/S/CZ circuit. Stays valid by
/// construction.
inline graphshare::StabilizerCode random_code(size_t n, uint64_t seed) {
  using graphshare::PauliOperator;
  std::mt19937_64 rng(seed);
  std::vector<PauliOperator> ops;
  for (size_t q = 1; q < n; ++q) {
    ops.push_back(PauliOperator::single(n, q, 'Z'));
  }
  PauliOperator lx = PauliOperator::single(n, 0, 'X');
  PauliOperator lz = PauliOperator::single(n, 0, 'Z');
  auto everywhere = [&](auto&& gate) {
    for (auto& g : ops) gate(g);
    gate(lx);
    gate(lz);
  };
  size_t steps = 8 * n + 4;
  for (size_t t = 0; t < steps; ++t) {
    size_t q = rng() % n;
    switch (rng() % 3) {
      case 0:
        everywhere([&](PauliOperator& g) { conjugate_h(g, q); });
        break;
      case 1:
        everywhere([&](PauliOperator& g) { conjugate_s(g, q); });
        break;
      default: {
        size_t r = rng() % n;
        if (r == q) r = (q + 1) % n;
        everywhere([&](PauliOperator& g) { conjugate_cz(g, q, r); });
        break;
      }
    }
  }
  graphshare::StabilizerCode code;
  code.n = n;
  code.generators = std::move(ops);
  code.logical_x = lx;
  code.logical_z = lz;
  code.validate();
  return code;
}

}  // namespace testutil

#endif
