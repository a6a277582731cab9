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

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "graphshare/access.hpp"
#include "graphshare/stabilizer_code.hpp"
#include "graphshare/standard_form.hpp"
#include "testutil.hpp"

using namespace graphshare;

TEST_CASE("vertex stabilizers") {
  Graph path = testutil::path3();
  CHECK(vertex_stabilizer(path, 0).str() == "XZI");
  CHECK(vertex_stabilizer(path, 1).str() == "ZXZ");
  CHECK(vertex_stabilizer(path, 2).str() == "IZX");
  CHECK_THROWS_AS(vertex_stabilizer(path, 3), std::out_of_range);

  Graph ref = testutil::ref8();
  PauliOperator k45 = vertex_stabilizer(ref, 4) * vertex_stabilizer(ref, 5);
  CHECK(k45.str() == "IZZIXXII");
  // All vertex stabilizers of one graph commute.
  for (size_t u = 0; u < 8; ++u) {
    for (size_t v = u + 1; v < 8; ++v) {
      CHECK(vertex_stabilizer(ref, u).commutes_with(vertex_stabilizer(ref, v)));
    }
  }
}

TEST_CASE("graph code for a path") {
  Graph path = testutil::path3();

  StabilizerCode mid = graph_to_code(path, {1});
  CHECK(mid.n == 3);
  CHECK(mid.k() == 1);
  REQUIRE(mid.generators.size() == 2);
  CHECK(mid.generators[0].str() == "XZI");
  CHECK(mid.generators[1].str() == "IZX");
  CHECK(mid.logical_z->str() == "ZXZ");
  CHECK(mid.logical_x->str() == "IZI");

  StabilizerCode all = graph_to_code(path, {0, 1, 2});
  REQUIRE(all.generators.size() == 2);
  CHECK(all.generators[0].str() == "YYZ");
  CHECK(all.generators[1].str() == "XIX");
  CHECK(all.logical_z->str() == "XZI");
  CHECK(all.logical_x->str() == "ZZZ");

  CHECK_THROWS_AS(graph_to_code(path, {}), std::invalid_argument);
  CHECK_THROWS_AS(graph_to_code(path, {3}), std::out_of_range);
  // Duplicates collapse.
  CHECK(same_group(graph_to_code(path, {1, 1}).generators, mid.generators));
}

TEST_CASE("logical coset enumeration") {
  Graph path = testutil::path3();
  StabilizerCode all = graph_to_code(path, {0, 1, 2});
  std::vector<PauliOperator> coset = logical_z_coset(all);
  REQUIRE(coset.size() == 4);
  // Gray order from logical Z: K0, K0*(K0 K1) = K1, K1*(K0 K2), back.
  CHECK(coset[0].str() == "XZI");
  CHECK(coset[1].str() == "ZXZ");
  std::set<std::string> seen;
  for (const auto& p : coset) {
    seen.insert(p.str());
    // Every element anticommutes with logical X and commutes with the group.
    CHECK_FALSE(p.commutes_with(*all.logical_x));
    for (const auto& g : all.generators) CHECK(p.commutes_with(g));
  }
  CHECK(seen.size() == 4);

  StabilizerCode big;
  big.n = kCosetCap + 1;
  for (size_t v = 0; v + 1 < big.n; ++v) {
    big.generators.push_back(
        PauliOperator::single(big.n, v, 'Z'));
  }
  big.logical_z = PauliOperator::single(big.n, big.n - 1, 'Z');
  big.logical_x = PauliOperator::single(big.n, big.n - 1, 'X');
  CHECK_THROWS_WITH_AS(
      logical_z_coset(big),
      "for_each_logical_z: qubit count exceeds the enumeration cap; use "
      "the graphical deciders instead",
      std::invalid_argument);
}

TEST_CASE("five qubit code coset supports") {
  StabilizerCode code = testutil::five_qubit();
  CHECK(code.n == 5);
  CHECK(code.k() == 1);
  CHECK_NOTHROW(code.validate());

  std::vector<PauliOperator> coset = logical_z_coset(code);
  REQUIRE(coset.size() == 16);
  std::vector<std::vector<size_t>> supports;
  size_t weight3 = 0, weight5 = 0;
  for (const auto& p : coset) {
    size_t w = p.support().size();
    if (w == 3) ++weight3;
    if (w == 5) ++weight5;
    supports.push_back(p.support());
  }
  CHECK(weight3 == 10);
  CHECK(weight5 == 6);
  // Minimal supports are exactly the ten 3-subsets of the players.
  std::vector<std::vector<size_t>> min = minimize(supports);
  CHECK(min.size() == 10);
  for (const auto& s : min) CHECK(s.size() == 3);
  std::set<std::vector<size_t>> unique(min.begin(), min.end());
  CHECK(unique.size() == 10);
}

TEST_CASE("code validation rejects broken inputs") {
  StabilizerCode bad;
  bad.n = 2;
  bad.generators = {PauliOperator::parse("XI"), PauliOperator::parse("ZI")};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);  // anticommuting

  bad.generators = {PauliOperator::parse("ZI"), PauliOperator::parse("ZI")};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);  // dependent

  bad.generators = {PauliOperator::parse("iZI")};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);  // non-Hermitian

  bad.generators = {PauliOperator::parse("ZI")};
  bad.logical_x = PauliOperator::parse("XI");
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);  // anticommutes

  StabilizerCode ok;
  ok.n = 2;
  ok.generators = {PauliOperator::parse("ZZ")};
  ok.logical_x = PauliOperator::parse("XX");
  ok.logical_z = PauliOperator::parse("ZI");
  CHECK_NOTHROW(ok.validate());
}

TEST_CASE("canonical generators decide group equality") {
  StabilizerCode code = testutil::five_qubit();
  std::vector<PauliOperator> gens = code.generators;

  std::vector<PauliOperator> mixed = {gens[3], gens[0] * gens[1],
                                      gens[2] * gens[0], gens[1]};
  CHECK(same_group(gens, mixed));
  CHECK(canonical_generators(gens) == canonical_generators(mixed));

  std::vector<PauliOperator> flipped = gens;
  flipped[2] = flipped[2].negated();
  CHECK_FALSE(same_group(gens, flipped));
  CHECK(same_group_gf2(gens, flipped));

  std::vector<PauliOperator> smaller(gens.begin(), gens.end() - 1);
  CHECK_FALSE(same_group(gens, smaller));
  CHECK_FALSE(same_group_gf2(gens, smaller));
}

TEST_CASE("group membership with exact signs") {
  Graph path = testutil::path3();
  StabilizerCode mid = graph_to_code(path, {1});
  const auto& gens = mid.generators;  // XZI, IZX

  auto coeffs = group_coefficients(gens, PauliOperator::parse("XIX"));
  REQUIRE(coeffs.has_value());
  CHECK(coeffs->str() == "11");
  CHECK_FALSE(group_coefficients(gens, PauliOperator::parse("ZII")));

  auto element = group_element_matching(gens, PauliOperator::parse("-XIX"));
  REQUIRE(element.has_value());
  // The group element with that (x, z) carries a plus sign; the minus input
  // differs from it by i^2.
  CHECK(element->str() == "XIX");
  CHECK(*element == gens[0] * gens[1]);

  CHECK(group_coefficients({}, PauliOperator(3)).has_value());
  CHECK_FALSE(group_coefficients({}, PauliOperator::parse("XII")));
}

TEST_CASE("css state code from an orthogonal matrix") {
  StabilizerCode bell = css_state_code(BitMatrix::identity(1));
  CHECK(bell.n == 2);
  CHECK(bell.k() == 0);
  REQUIRE(bell.generators.size() == 2);
  CHECK(bell.generators[0].str() == "XX");
  CHECK(bell.generators[1].str() == "ZZ");

  CHECK_THROWS_WITH_AS(css_state_code(BitMatrix(2, 3)),
                       "css_state_code: matrix is not square (2x3)",
                       std::invalid_argument);
  CHECK_THROWS_AS(css_state_code(BitMatrix::from_strings({"11", "11"})),
                  std::invalid_argument);
}

TEST_CASE("puncturing a bell pair leaves a bare qubit") {
  StabilizerCode bell = css_state_code(BitMatrix::identity(1));
  StabilizerCode punctured = puncture(bell, 0);
  CHECK(punctured.n == 1);
  CHECK(punctured.k() == 1);
  CHECK(punctured.generators.empty());
  CHECK(punctured.logical_x->str() == "X");
  CHECK(punctured.logical_z->str() == "Z");

  CHECK_THROWS_AS(puncture(bell, 2), std::out_of_range);
  CHECK_THROWS_AS(puncture(testutil::five_qubit(), 0), std::invalid_argument);

  // A qubit pinned to |0> cannot host the secret.
  StabilizerCode pinned;
  pinned.n = 2;
  pinned.generators = {PauliOperator::parse("ZI"), PauliOperator::parse("IZ")};
  CHECK_THROWS_WITH_AS(puncture(pinned, 0),
                       "puncture: qubit is not maximally mixed in the state",
                       std::invalid_argument);
}

TEST_CASE("puncturing the reference css state matches the share graph code") {
  Graph ref = testutil::ref8();
  auto part = bipartition(ref);
  REQUIRE(part.has_value());
  StabilizerCode css = css_state_code(part->biadjacency);
  CHECK(css.n == 8);
  CHECK(css.k() == 0);

  StabilizerCode punctured = puncture(css, 0);
  CHECK(punctured.n == 7);
  CHECK(punctured.k() == 1);

  // Hadamards on the share-part qubits turn the punctured css state into
  // the graph code of the dealer-deleted graph with A = N_dealer.
  auto hadamard_right = [](PauliOperator p) {
    for (size_t q = 3; q <= 6; ++q) conjugate_h(p, q);
    return p;
  };
  std::vector<PauliOperator> transformed;
  for (const auto& g : punctured.generators) {
    transformed.push_back(hadamard_right(g));
  }

  VertexDeletion del = delete_vertex(ref, 0);
  StabilizerCode share_code = graph_to_code(del.graph, {3, 4, 6});
  CHECK(same_group(transformed, share_code.generators));

  // The dealer's X literally becomes the share code's logical X.
  CHECK(hadamard_right(*punctured.logical_x) == *share_code.logical_x);
  // Its Z becomes the logical Z up to a stabilizer element, sign included.
  PauliOperator diff =
      hadamard_right(*punctured.logical_z) * *share_code.logical_z;
  auto member = group_element_matching(share_code.generators, diff);
  REQUIRE(member.has_value());
  CHECK(*member == diff);
}

TEST_CASE("standard form of the five qubit code") {
  StabilizerCode code = testutil::five_qubit();
  StandardFormCode sf = standard_form(code);
  CHECK(sf.n == 5);
  CHECK(sf.r == 4);
  CHECK(sf.block_generators.size() == 4);

  // diag(B + C A2^t) = 0 after the phase fixes.
  BitMatrix skew = sf.b;
  BitMatrix ca2t = sf.c * sf.a2.transpose();
  for (size_t i = 0; i < sf.r; ++i) {
    CHECK(skew.get(i, i) == ca2t.get(i, i));
  }

  // Replaying the logged transform over the input reproduces the block
  // generators exactly.
  std::vector<PauliOperator> replay = apply_transform(
      code.generators, sf.qubit_permutation, sf.local_cliffords);
  CHECK(same_group(replay, sf.block_generators));

  CHECK(standard_form_report(sf).find("A1") != std::string::npos);
}

TEST_CASE("graph equivalence of the five qubit code") {
  StabilizerCode code = testutil::five_qubit();
  GraphEquivalence ge = graph_equivalence(code);
  CHECK(ge.graph.num_vertices() == 5);
  REQUIRE(!ge.a_set.empty());

  std::vector<PauliOperator> moved =
      apply_transform(code.generators, ge.qubit_permutation, ge.gates);
  StabilizerCode target = graph_to_code(ge.graph, ge.a_set);
  CHECK(same_group(moved, target.generators));

  // Local Cliffords preserve supports up to the permutation, so the access
  // structure carries over; the graph code coset must again have the ten
  // 3-subsets as minimal supports.
  std::vector<std::vector<size_t>> supports;
  for (const auto& p : logical_z_coset(target)) supports.push_back(p.support());
  CHECK(minimize(supports).size() == 10);
}

TEST_CASE("graph equivalence of a bare qubit code") {
  StabilizerCode bare;
  bare.n = 1;
  bare.logical_x = PauliOperator::parse("X");
  bare.logical_z = PauliOperator::parse("Z");
  GraphEquivalence ge = graph_equivalence(bare);
  CHECK(ge.graph.num_vertices() == 1);
  CHECK(ge.graph.num_edges() == 0);
  CHECK(ge.a_set == std::vector<size_t>{0});
}

TEST_CASE("graph equivalence of random codes") {
  for (size_t n = 3; n <= 6; ++n) {
    for (uint64_t seed = 1; seed <= 3; ++seed) {
      StabilizerCode code = testutil::random_code(n, seed);
      StandardFormCode sf = standard_form(code);
      std::vector<PauliOperator> replay = apply_transform(
          code.generators, sf.qubit_permutation, sf.local_cliffords);
      CHECK(same_group(replay, sf.block_generators));

      GraphEquivalence ge = graph_equivalence(code);
      std::vector<PauliOperator> moved =
          apply_transform(code.generators, ge.qubit_permutation, ge.gates);
      StabilizerCode target = graph_to_code(ge.graph, ge.a_set);
      CHECK(same_group(moved, target.generators));
    }
  }
}

TEST_CASE("stabilizer file round trips") {
  StabilizerCode code = testutil::five_qubit();
  std::string text = serialize_stabilizer_file(code);
  StabilizerCode back = parse_stabilizer_file(text);
  CHECK(back.n == code.n);
  CHECK(back.generators == code.generators);
  CHECK(back.logical_x == code.logical_x);
  CHECK(back.logical_z == code.logical_z);

  // Comments, indentation and signs survive parsing.
  StabilizerCode small = parse_stabilizer_file(
      "# one qubit pair\n  XX  # x type\n-ZZ\n");
  CHECK(small.generators[0].str() == "XX");
  CHECK(small.generators[1].str() == "-ZZ");
}

TEST_CASE("stabilizer file parse errors carry line numbers") {
  auto message = [](const std::string& text) {
    try {
      parse_stabilizer_file(text);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string("(no error)");
  };
  CHECK(message("XQ\n") ==
        "stabilizer file, line 1: PauliOperator::parse: bad character 'Q' at "
        "position 1");
  CHECK(message("ZZ\nZII\n") ==
        "stabilizer file, line 2: operator width differs from earlier lines");
  CHECK(message("ZZ\nLX:\nXX\nXI\n") ==
        "stabilizer file, line 4: second operator after LX:");
  CHECK(message("ZZ\nLZ:\nZI\nIZ\n") ==
        "stabilizer file, line 4: second operator after LZ:");
  CHECK(message("# empty\n") == "stabilizer file: no operators found");
  // Width errors respect comment-only and blank lines in the count.
  CHECK(message("XX\n\n# pad\nZ\n") ==
        "stabilizer file, line 4: operator width differs from earlier lines");
}
