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

#include <complex>
#include <vector>

#include "doctest.h"
#include "graphshare/access.hpp"
#include "graphshare/statevector.hpp"
#include "graphshare/tableau.hpp"
#include "testutil.hpp"

using namespace graphshare;
using cd = std::complex<double>;

namespace {

SchemeCC share_scheme() {
  VertexDeletion del = delete_vertex(testutil::ref8(), 0);
  return make_scheme_cc(del.graph, {3, 4, 6});
}

std::vector<size_t> bits_of(size_t mask, size_t n) {
  std::vector<size_t> out;
  for (size_t v = 0; v < n; ++v) {
    if ((mask >> v) & 1) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("dense graph states pin the amplitude convention") {
  Graph k2 = Graph::from_edges(2, {{0, 1}});
  StateVector psi = dense_graph_state(k2);
  REQUIRE(psi.amp.size() == 4);
  CHECK(psi.amp[0].real() == doctest::Approx(0.5));
  CHECK(psi.amp[1].real() == doctest::Approx(0.5));
  CHECK(psi.amp[2].real() == doctest::Approx(0.5));
  CHECK(psi.amp[3].real() == doctest::Approx(-0.5));

  // Z on qubit 1 flips the amplitudes whose least significant bit is set:
  // qubit 0 owns the most significant index bit.
  auto pair = cc_pair(make_scheme_cc(k2, {1}));
  CHECK(pair.second.amp[0].real() == doctest::Approx(0.5));
  CHECK(pair.second.amp[1].real() == doctest::Approx(-0.5));
  CHECK(pair.second.amp[2].real() == doctest::Approx(0.5));
  CHECK(pair.second.amp[3].real() == doctest::Approx(0.5));

  CHECK_THROWS_WITH_AS(dense_graph_state(Graph(15)),
                       "dense simulation caps at 14 qubits",
                       std::invalid_argument);
}

TEST_CASE("dense graph states satisfy their stabilizers") {
  for (const Graph& g : {testutil::path3(), testutil::ref8()}) {
    StateVector psi = dense_graph_state(g);
    for (size_t v = 0; v < g.num_vertices(); ++v) {
      StateVector moved = apply_pauli_dense(vertex_stabilizer(g, v), psi);
      CHECK(fidelity(moved, psi) == doctest::Approx(1.0));
      CHECK(inner(moved, psi).real() == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("single qubit paulis act with exact phases") {
  StateVector zero;
  zero.n = 1;
  zero.amp = {cd(1, 0), cd(0, 0)};

  StateVector x = apply_pauli_dense(PauliOperator::single(1, 0, 'X'), zero);
  CHECK(x.amp[0] == cd(0, 0));
  CHECK(x.amp[1] == cd(1, 0));

  StateVector y = apply_pauli_dense(PauliOperator::single(1, 0, 'Y'), zero);
  CHECK(y.amp[1] == cd(0, 1));  // Y|0> = i|1>

  StateVector z = apply_pauli_dense(PauliOperator::single(1, 0, 'Z'), x);
  CHECK(z.amp[1] == cd(-1, 0));

  CHECK_THROWS_AS(apply_pauli_dense(PauliOperator(2), zero),
                  std::invalid_argument);
  CHECK_THROWS_AS(inner(zero, dense_graph_state(Graph(2))),
                  std::invalid_argument);
}

TEST_CASE("shared state pairs are orthogonal") {
  for (const SchemeCC& scheme :
       {share_scheme(), make_scheme_cc(testutil::path3(), {0, 1, 2}),
        make_scheme_cc(Graph::from_edges(2, {{0, 1}}), {0})}) {
    auto pair = cc_pair(scheme);
    CHECK(std::abs(inner(pair.first, pair.second)) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("partial trace building blocks") {
  StateVector bell;
  bell.n = 2;
  bell.amp = {cd(1 / std::sqrt(2.0), 0), cd(0, 0), cd(0, 0),
              cd(1 / std::sqrt(2.0), 0)};

  // Reduced state of either qubit is maximally mixed.
  for (size_t q = 0; q < 2; ++q) {
    ComplexMatrix rho = reduced_density(bell, {q});
    CHECK(rho[0][0].real() == doctest::Approx(0.5));
    CHECK(rho[1][1].real() == doctest::Approx(0.5));
    CHECK(std::abs(rho[0][1]) == doctest::Approx(0.0));
  }

  // Tracing nothing gives the outer product; tracing everything the inner
  // product with the conjugate on the second argument.
  StateVector psi = dense_graph_state(Graph::from_edges(2, {{0, 1}}));
  ComplexMatrix outer = cross_partial_trace(psi, bell, {});
  CHECK(outer[3][3].real() == doctest::Approx(-0.5 / std::sqrt(2.0)));
  ComplexMatrix scalar = cross_partial_trace(psi, bell, {0, 1});
  CHECK(scalar.size() == 1);
  CHECK(scalar[0][0].real() == doctest::Approx(0.0));

  CHECK_THROWS_AS(reduced_density(bell, {2}), std::out_of_range);
}

TEST_CASE("reduced densities are valid quantum states") {
  SchemeCC scheme = share_scheme();
  StateVector psi = dense_graph_state(scheme.graph);
  for (const std::vector<size_t>& keep :
       {std::vector<size_t>{0}, {0, 3, 5}, {1, 2, 4, 6}}) {
    ComplexMatrix rho = reduced_density(psi, keep);
    size_t dim = rho.size();
    cd trace(0, 0);
    for (size_t i = 0; i < dim; ++i) {
      trace += rho[i][i];
      for (size_t j = 0; j < dim; ++j) {
        CHECK(std::abs(rho[i][j] - std::conj(rho[j][i])) ==
              doctest::Approx(0.0).epsilon(1e-12));
      }
    }
    CHECK(trace.real() == doctest::Approx(1.0));
    // 0.5 * sum |eigenvalue| == 0.5 exactly when the spectrum is
    // nonnegative, which certifies positive semidefiniteness.
    ComplexMatrix zero(dim, std::vector<cd>(dim, cd(0, 0)));
    CHECK(trace_distance(rho, zero) == doctest::Approx(0.5));
  }
}

TEST_CASE("trace distance endpoints") {
  ComplexMatrix zero2(2, std::vector<cd>(2, cd(0, 0)));
  ComplexMatrix ket0 = zero2, ket1 = zero2;
  ket0[0][0] = cd(1, 0);
  ket1[1][1] = cd(1, 0);
  CHECK(trace_distance(ket0, ket0) == doctest::Approx(0.0));
  CHECK(trace_distance(ket0, ket1) == doctest::Approx(1.0));
  CHECK_THROWS_AS(trace_distance(ket0, ComplexMatrix(3)),
                  std::invalid_argument);
}

TEST_CASE("dense deciders agree with the graphical ones everywhere") {
  std::vector<SchemeCC> corpus = {
      share_scheme(),
      make_scheme_cc(testutil::path3(), {0, 1, 2}),
      make_scheme_cc(testutil::path3(), {1}),
      make_scheme_cc(Graph::from_edges(2, {{0, 1}}), {0}),
      make_scheme_cc(Graph::from_edges(2, {{0, 1}}), {0, 1}),
  };
  for (const SchemeCC& scheme : corpus) {
    size_t n = scheme.graph.num_vertices();
    auto pair = cc_pair(scheme);
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
      std::vector<size_t> t = bits_of(mask, n);
      bool auth = check_authorized_dense(pair.first, pair.second, t);
      bool unauth = check_unauthorized_dense(pair.first, pair.second, t);
      CHECK(auth != unauth);
      CHECK(auth == authorized_witness(scheme, t).has_value());
    }
  }
}

TEST_CASE("dense deciders on the worked examples") {
  Graph k2 = Graph::from_edges(2, {{0, 1}});
  auto pair = cc_pair(make_scheme_cc(k2, {0}));
  CHECK(check_authorized_dense(pair.first, pair.second, {0, 1}));
  CHECK_FALSE(check_authorized_dense(pair.first, pair.second, {0}));
  CHECK(check_unauthorized_dense(pair.first, pair.second, {0}));
  CHECK(check_unauthorized_dense(pair.first, pair.second, {1}));
  CHECK(check_unauthorized_dense(pair.first, pair.second, {}));

  SchemeCC scheme = share_scheme();
  auto ref = cc_pair(scheme);
  CHECK(check_unauthorized_dense(ref.first, ref.second, {0, 1, 2}));
  CHECK(check_authorized_dense(ref.first, ref.second, {1, 2, 3}));
}

TEST_CASE("dense teleport round trip on the reference scheme") {
  Graph ref = testutil::ref8();
  const cd a(0.6, 0.0);
  const cd b(0.0, 0.8);
  for (const std::vector<size_t>& d :
       {std::vector<size_t>{4}, {5}, {7}, {4, 6}, {5, 6}, {6, 7}, {4, 5, 7}}) {
    CHECK(qq_roundtrip(ref, 0, d, a, b) >= 1.0 - 1e-9);
  }

  // Random-ish secrets, both extremes included.
  CHECK(qq_roundtrip(ref, 0, {4}, cd(1, 0), cd(0, 0)) >= 1.0 - 1e-9);
  CHECK(qq_roundtrip(ref, 0, {4}, cd(0, 0), cd(1, 0)) >= 1.0 - 1e-9);
  CHECK(qq_roundtrip(ref, 0, {4}, cd(0.3, -0.4), cd(-0.5, 0.7)) >=
        1.0 - 1e-9);

  CHECK_THROWS_WITH_AS(
      qq_roundtrip(ref, 0, {6}, a, b),
      "D overlaps the dealer neighborhood evenly; nothing to teleport",
      std::invalid_argument);
  CHECK_THROWS_WITH_AS(qq_roundtrip(ref, 0, {0, 4}, a, b),
                       "D must not contain the dealer",
                       std::invalid_argument);
  CHECK_THROWS_AS(qq_roundtrip(ref, 0, {4}, cd(0, 0), cd(0, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(qq_roundtrip(ref, 8, {4}, a, b), std::out_of_range);
}

TEST_CASE("dense teleport matches smaller schemes too") {
  Graph k2 = Graph::from_edges(2, {{0, 1}});
  CHECK(qq_roundtrip(k2, 0, {1}, cd(0.8, 0), cd(0.6, 0)) >= 1.0 - 1e-9);

  Graph matching = Graph::from_edges(6, {{0, 3}, {1, 4}, {2, 5}});
  CHECK(qq_roundtrip(matching, 0, {3}, cd(0.28, 0.96), cd(0, 0.2)) >=
        1.0 - 1e-9);

  for (uint64_t seed = 1; seed <= 3; ++seed) {
    Graph g = random_orthogonal_graph(4, seed);
    SchemeQQ qq = make_scheme_qq(g, 0);
    AccessStructure acc = qq_generators(qq);
    REQUIRE(!acc.minimal_sets.empty());
    std::vector<size_t> d;
    for (size_t v : acc.minimal_sets.front()) {
      if (std::binary_search(qq.share_part.begin(), qq.share_part.end(),
                             v)) {
        d.push_back(v);
      }
    }
    CHECK(qq_roundtrip(g, 0, d, cd(0.6, 0.4), cd(-0.2, 0.66)) >= 1.0 - 1e-9);
  }
}

TEST_CASE("projector construction recovers dense states") {
  Graph ref = testutil::ref8();
  std::vector<PauliOperator> gens;
  for (size_t v = 0; v < 8; ++v) gens.push_back(vertex_stabilizer(ref, v));
  StateVector built = dense_from_generators(gens);
  CHECK(fidelity(built, dense_graph_state(ref)) == doctest::Approx(1.0));

  StateVector bell = dense_from_generators(
      {PauliOperator::parse("XX"), PauliOperator::parse("ZZ")});
  CHECK(std::abs(bell.amp[0]) == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(std::abs(bell.amp[3]) == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(std::abs(bell.amp[1]) == doctest::Approx(0.0));

  CHECK_THROWS_AS(dense_from_generators({}), std::invalid_argument);
  CHECK_THROWS_AS(dense_from_generators({PauliOperator::parse("ZI")}),
                  std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      dense_from_generators(
          {PauliOperator::parse("ZI"), PauliOperator::parse("-ZI")}),
      "generators do not fix a pure state", std::invalid_argument);
}

TEST_CASE("tableau and dense encoders build the same states") {
  // Z_A^s |G> from the tableau, rebuilt densely through its generators,
  // must match the dense oracle pair.
  SchemeCC scheme = share_scheme();
  auto pair = cc_pair(scheme);
  StateVector viaTab0 = dense_from_generators(cc_encode(scheme, 0).generators());
  StateVector viaTab1 = dense_from_generators(cc_encode(scheme, 1).generators());
  CHECK(fidelity(viaTab0, pair.first) == doctest::Approx(1.0));
  CHECK(fidelity(viaTab1, pair.second) == doctest::Approx(1.0));
}
