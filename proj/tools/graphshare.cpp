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
//
// Command line front end. Exit codes: 0 success, 1 an analysis or
// simulation rejected the request (unauthorized set, failed verification),
// 2 bad usage or unreadable/malformed input.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphshare/access.hpp"
#include "graphshare/graph.hpp"
#include "graphshare/stabilizer_code.hpp"
#include "graphshare/standard_form.hpp"
#include "graphshare/statevector.hpp"
#include "graphshare/tableau.hpp"

namespace {

using nlohmann::json;
using namespace graphshare;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

uint64_t mask_of(const std::vector<size_t>& s) {
  uint64_t m = 0;
  for (size_t v : s) m |= uint64_t{1} << v;
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

std::vector<size_t> sorted_unique(std::vector<size_t> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<size_t> to_old_labels(const std::vector<size_t>& share_set,
                                  const VertexDeletion& del) {
  std::vector<size_t> out;
  out.reserve(share_set.size());
  for (size_t v : share_set) out.push_back(del.new_to_old.at(v));
  return out;
}

std::vector<size_t> to_share_labels(const std::vector<size_t>& old_set,
                                    const VertexDeletion& del) {
  std::vector<size_t> out;
  out.reserve(old_set.size());
  for (size_t v : old_set) {
    int mapped = del.old_to_new.at(v);
    if (mapped < 0) {
      throw std::invalid_argument("the dealer is not a player");
    }
    out.push_back(static_cast<size_t>(mapped));
  }
  return out;
}

json sets_json(std::vector<std::vector<size_t>> sets) {
  std::sort(sets.begin(), sets.end());
  json arr = json::array();
  for (const auto& s : sets) arr.push_back(s);
  return arr;
}

// Up-closure classification from an explicit family of minimal sets, for
// running the recovery-set enumeration as a classify method.
Classification closure_classification(size_t players,
                                      const std::vector<std::vector<size_t>>&
                                          sets) {
  Classification c;
  c.player_count = players;
  c.method = ClassifyMethod::kGenerators;
  size_t total = size_t{1} << players;
  c.authorized.assign(total, 0);
  c.witness.assign(total, -1);
  std::vector<uint64_t> masks;
  masks.reserve(sets.size());
  for (const auto& s : sets) masks.push_back(mask_of(s));
  for (size_t mask = 0; mask < total; ++mask) {
    for (uint64_t g : masks) {
      if ((g & mask) == g) {
        c.authorized[mask] = 1;
        c.witness[mask] = static_cast<int32_t>(g);
        break;
      }
    }
  }
  return c;
}

// Smallest D inside S (share part only) with Odd(D) minus the dealer also
// inside S and |D cap N_dealer| odd; ties broken towards lower labels.
std::optional<std::vector<size_t>> qq_recovery_set(
    const SchemeQQ& qq, const std::vector<size_t>& s_old) {
  std::vector<size_t> cand;
  for (size_t v : qq.share_part) {
    if (std::binary_search(s_old.begin(), s_old.end(), v)) cand.push_back(v);
  }
  if (cand.size() > kCosetCap) {
    throw std::invalid_argument("recovery-set search over " +
                                std::to_string(cand.size()) +
                                " vertices exceeds the cap");
  }
  size_t n = qq.graph.num_vertices();
  std::vector<uint64_t> row_mask(n, 0);
  for (size_t v = 0; v < n; ++v) {
    row_mask[v] = mask_of(qq.graph.neighbors(v));
  }
  uint64_t ni = row_mask[qq.dealer];
  uint64_t dealer_bit = uint64_t{1} << qq.dealer;
  uint64_t s_mask = mask_of(s_old);
  uint64_t cur_d = 0;
  uint64_t cur_odd = 0;
  std::optional<uint64_t> best;
  uint64_t total = uint64_t{1} << cand.size();
  for (uint64_t step = 1; step < total; ++step) {
    size_t v = cand[static_cast<size_t>(std::countr_zero(step))];
    cur_d ^= uint64_t{1} << v;
    cur_odd ^= row_mask[v];
    if (std::popcount(cur_d & ni) % 2 == 0) continue;
    uint64_t outside = (cur_odd & ~dealer_bit) & ~s_mask;
    if (outside) continue;
    if (!best || std::popcount(cur_d) < std::popcount(*best) ||
        (std::popcount(cur_d) == std::popcount(*best) && cur_d < *best)) {
      best = cur_d;
    }
  }
  if (!best) return std::nullopt;
  return set_of(*best);
}

struct SchemeArgs {
  std::string graph_path;
  std::vector<size_t> a_set;
  int64_t dealer = -1;

  bool is_qq() const { return dealer >= 0; }
};

void add_scheme_options(CLI::App* cmd, SchemeArgs& args, bool protocol_free) {
  cmd->add_option("--graph", args.graph_path, "edge-list file")
      ->required();
  auto* a_opt = cmd->add_option("--a", args.a_set,
                                "sharing set A (classical protocol)")
                    ->delimiter(',');
  auto* d_opt = cmd->add_option("--dealer", args.dealer,
                                "dealer vertex (quantum protocol)")
                    ->check(CLI::NonNegativeNumber);
  a_opt->excludes(d_opt);
  d_opt->excludes(a_opt);
  if (protocol_free) {
    cmd->callback([&args, cmd]() {
      if (cmd->count("--a") == 0 && cmd->count("--dealer") == 0) {
        throw CLI::RequiredError("--a or --dealer");
      }
    });
  }
}

// Names the methods whose caps admit this many players.
std::string feasible_methods(size_t players) {
  if (players > 20) return "none; classification caps at 20 players";
  std::string out = "graphical, generators";
  if (players <= 12) out += ", oracle";
  return out;
}

int run_access(const SchemeArgs& args, const std::string& method) {
  Graph g = parse_edge_list(read_file(args.graph_path));
  json out;
  out["schema"] = "1";
  out["method"] = method;

  SchemeCC cc;
  std::optional<SchemeQQ> qq;
  if (args.is_qq()) {
    qq = make_scheme_qq(g, static_cast<size_t>(args.dealer));
    cc = cc_scheme(*qq);
    out["scheme"] = "qq";
    out["dealer"] = qq->dealer;
    out["A"] = g.neighbors(qq->dealer);
    out["players"] = g.num_vertices() - 1;
  } else {
    cc = make_scheme_cc(g, args.a_set);
    out["scheme"] = "cc";
    out["A"] = cc.a_set;
    out["players"] = g.num_vertices();
  }

  size_t players = cc.graph.num_vertices();
  std::vector<std::string> wanted;
  if (method == "all") {
    wanted = {"graphical", "generators"};
    if (players <= 12) wanted.push_back("oracle");
  } else {
    if ((method == "oracle" && players > 12) ||
        (method == "generators" && players > 20)) {
      throw std::invalid_argument(
          "the " + method + " method caps below " + std::to_string(players) +
          " players; feasible methods here: " + feasible_methods(players));
    }
    wanted = {method};
  }

  std::vector<Classification> runs;
  for (const std::string& name : wanted) {
    ClassifyMethod m = *method_from_name(name);
    if (qq && m == ClassifyMethod::kGenerators) {
      AccessStructure thm2 = qq_generators(*qq);
      std::vector<std::vector<size_t>> share_sets;
      for (const auto& s : thm2.minimal_sets) {
        share_sets.push_back(to_share_labels(s, qq->share));
      }
      runs.push_back(
          closure_classification(cc.graph.num_vertices(), share_sets));
    } else {
      runs.push_back(classify(cc, m));
    }
  }
  for (size_t i = 1; i < runs.size(); ++i) {
    require_agreement(runs[0], runs[i]);
  }

  AccessStructure acc = minimal_from_classification(runs[0]);
  std::vector<std::vector<size_t>> named = acc.minimal_sets;
  if (qq) {
    for (auto& s : named) s = to_old_labels(s, qq->share);
  }
  out["minimal_authorized"] = sets_json(std::move(named));
  out["perfect"] = check_perfect(runs[0]);
  out["no_cloning"] = check_no_cloning(acc);
  print_json(out);
  return 0;
}

int run_simulate(const SchemeArgs& args, const std::string& protocol,
                 std::vector<size_t> coalition, int bit,
                 const std::string& secret, uint64_t seed, bool want_trace) {
  Graph g = parse_edge_list(read_file(args.graph_path));
  json out;
  out["schema"] = "1";
  out["protocol"] = protocol;
  std::vector<std::string> trace;

  if (protocol == "cc") {
    if (!args.is_qq() && args.a_set.empty()) {
      throw std::invalid_argument("cc simulation needs --a");
    }
    SchemeCC scheme = make_scheme_cc(g, args.a_set);
    coalition = sorted_unique(std::move(coalition));
    out["A"] = scheme.a_set;
    out["set"] = coalition;
    auto d = authorized_witness(scheme, coalition);
    if (!d) {
      out["authorized"] = false;
      auto k = unauthorized_witness(scheme, coalition);
      if (k) out["witness_k"] = *k;
      print_json(out);
      return 1;
    }
    out["authorized"] = true;
    out["witness_d"] = *d;
    StabilizerState state = cc_encode(scheme, bit, seed);
    int rec = cc_recover(state, *d, scheme, &trace);
    out["secret"] = std::to_string(bit);
    out["recovered"] = std::to_string(rec);
    out["match"] = rec == bit;
    if (want_trace) out["trace"] = trace;
    print_json(out);
    return rec == bit ? 0 : 1;
  }

  if (!args.is_qq()) {
    throw std::invalid_argument("qq simulation needs --dealer");
  }
  SchemeQQ qq = make_scheme_qq(g, static_cast<size_t>(args.dealer));
  coalition = sorted_unique(std::move(coalition));
  if (std::binary_search(coalition.begin(), coalition.end(), qq.dealer)) {
    throw std::invalid_argument("the dealer is not a player");
  }
  out["dealer"] = qq.dealer;
  out["set"] = coalition;
  auto d = qq_recovery_set(qq, coalition);
  if (!d) {
    out["authorized"] = false;
    auto k = unauthorized_witness(cc_scheme(qq),
                                  to_share_labels(coalition, qq.share));
    if (k) out["witness_k"] = to_old_labels(*k, qq.share);
    print_json(out);
    return 1;
  }
  out["authorized"] = true;
  out["witness_d"] = *d;
  StabilizerState state =
      qq_encode(g, qq.dealer, secret, seed, std::nullopt, &trace);
  QQRecovery rec = qq_recover(state, g, qq.dealer, *d, &trace);
  bool residual_ok =
      rec.residual.same_state(StabilizerState::graph_state(qq.share.graph));
  out["secret"] = secret;
  out["recovered"] = rec.secret;
  out["match"] = rec.secret == secret;
  out["residual_intact"] = residual_ok;
  if (want_trace) out["trace"] = trace;
  print_json(out);
  return (rec.secret == secret && residual_ok) ? 0 : 1;
}

int run_verify(const SchemeArgs& args, size_t max_oracle) {
  Graph g = parse_edge_list(read_file(args.graph_path));
  json out;
  out["schema"] = "1";
  json checks = json::object();
  std::vector<std::string> failures;
  auto fail = [&](const std::string& name, const std::string& why) {
    checks[name] = false;
    failures.push_back(name + ": " + why);
  };

  SchemeCC cc;
  std::optional<SchemeQQ> qq;
  try {
    if (args.is_qq()) {
      qq = make_scheme_qq(g, static_cast<size_t>(args.dealer));
      cc = cc_scheme(*qq);
      out["scheme"] = "qq";
      out["dealer"] = qq->dealer;
      out["players"] = g.num_vertices() - 1;
    } else {
      cc = make_scheme_cc(g, args.a_set);
      out["scheme"] = "cc";
      out["players"] = g.num_vertices();
    }
    checks["scheme"] = true;
  } catch (const std::exception& e) {
    fail("scheme", e.what());
    out["checks"] = checks;
    out["failures"] = failures;
    out["verified"] = false;
    print_json(out);
    return 1;
  }

  Classification base = classify(cc, ClassifyMethod::kGraphical);
  checks["method_agreement"] = true;
  try {
    require_agreement(base, classify(cc, ClassifyMethod::kGenerators));
    if (cc.graph.num_vertices() <= max_oracle) {
      require_agreement(base, classify(cc, ClassifyMethod::kOracle));
    }
  } catch (const std::exception& e) {
    fail("method_agreement", e.what());
  }

  AccessStructure acc = minimal_from_classification(base);
  bool perfect = check_perfect(base);
  bool no_cloning = check_no_cloning(acc);
  out["perfect"] = perfect;
  out["no_cloning"] = no_cloning;
  if (qq) {
    if (perfect) {
      checks["perfect"] = true;
    } else {
      fail("perfect", "a subset and its complement carry the same label");
    }
    if (no_cloning) {
      checks["no_cloning"] = true;
    } else {
      fail("no_cloning", "two minimal authorized sets are disjoint");
    }
    // Recovery-set enumeration must give the same minimal family as the
    // coset of the share scheme.
    AccessStructure thm2 = qq_generators(*qq);
    std::vector<std::vector<size_t>> mapped;
    for (const auto& s : thm2.minimal_sets) {
      mapped.push_back(to_share_labels(s, qq->share));
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == cc_generators(cc).minimal_sets) {
      checks["generator_families_match"] = true;
    } else {
      fail("generator_families_match",
           "coset supports and recovery-set enumeration differ");
    }
  }

  if (cc.graph.num_vertices() <= kDenseQubitCap) {
    auto pair = cc_pair(cc);
    if (std::abs(inner(pair.first, pair.second)) < kOracleTolerance) {
      checks["shared_states_orthogonal"] = true;
    } else {
      fail("shared_states_orthogonal",
           "the two shared states are not orthogonal");
    }
  }

  std::vector<std::vector<size_t>> named = acc.minimal_sets;
  if (qq) {
    for (auto& s : named) s = to_old_labels(s, qq->share);
    std::sort(named.begin(), named.end());
  }
  out["minimal_authorized"] = sets_json(named);

  checks["stabilizer_roundtrip"] = true;
  if (qq) {
    for (const auto& m : named) {
      auto d = qq_recovery_set(*qq, m);
      if (!d) {
        fail("stabilizer_roundtrip",
             "no recovery set inside a minimal authorized set");
        break;
      }
      bool bad = false;
      for (const std::string& label : kSecretLabels) {
        for (int branch = 0; branch < 2 && !bad; ++branch) {
          StabilizerState state = qq_encode(g, qq->dealer, label,
                                            kDefaultSeed, branch, nullptr);
          QQRecovery rec = qq_recover(state, g, qq->dealer, *d, nullptr);
          if (rec.secret != label ||
              !rec.residual.same_state(
                  StabilizerState::graph_state(qq->share.graph))) {
            fail("stabilizer_roundtrip",
                 "secret " + label + " through D did not survive");
            bad = true;
          }
        }
        if (bad) break;
      }
      if (bad) break;
    }
    if (g.num_vertices() <= kDenseQubitCap && !named.empty()) {
      checks["dense_roundtrip"] = true;
      for (const auto& m : named) {
        auto d = qq_recovery_set(*qq, m);
        double fid = qq_roundtrip(g, qq->dealer, *d, {0.6, 0.0}, {0.0, 0.8});
        if (fid < 1.0 - 1e-9) {
          fail("dense_roundtrip",
               "fidelity " + std::to_string(fid) + " through a minimal set");
          break;
        }
      }
    }
  } else {
    for (const auto& m : named) {
      auto d = authorized_witness(cc, m);
      if (!d) {
        fail("stabilizer_roundtrip",
             "a minimal authorized set has no measurement witness");
        break;
      }
      bool bad = false;
      for (int s = 0; s < 2; ++s) {
        StabilizerState state = cc_encode(cc, s, kDefaultSeed);
        if (cc_recover(state, *d, cc, nullptr) != s) {
          fail("stabilizer_roundtrip",
               "bit " + std::to_string(s) + " was not recovered");
          bad = true;
          break;
        }
      }
      if (bad) break;
    }
  }

  bool verified = true;
  for (const auto& [name, ok] : checks.items()) {
    if (!ok.get<bool>()) verified = false;
  }
  out["checks"] = checks;
  if (!failures.empty()) out["failures"] = failures;
  out["verified"] = verified;
  print_json(out);
  return verified ? 0 : 1;
}

int run_convert_code(const std::string& code_path) {
  StabilizerCode code = parse_stabilizer_file(read_file(code_path));
  GraphEquivalence eq = graph_equivalence(code);
  std::cout << "# graph equivalent under local Cliffords\n";
  std::cout << serialize_edge_list(eq.graph);
  std::cout << "# A:";
  for (size_t v : eq.a_set) std::cout << " " << v;
  std::cout << "\n# permutation (position <- original):";
  for (size_t j = 0; j < eq.qubit_permutation.size(); ++j) {
    std::cout << " " << j << "<-" << eq.qubit_permutation[j];
  }
  std::cout << "\n# gates:";
  if (eq.gates.empty()) std::cout << " (none)";
  for (const auto& gate : eq.gates) std::cout << " " << gate_str(gate);
  std::cout << "\n";
  return 0;
}

int run_convert_graph(const SchemeArgs& args) {
  Graph g = parse_edge_list(read_file(args.graph_path));
  StabilizerCode code = graph_to_code(g, args.a_set);
  std::cout << serialize_stabilizer_file(code);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph-state secret sharing schemes from stabilizer codes"};
  app.require_subcommand(1);

  SchemeArgs access_args;
  std::string access_method = "all";
  auto* access_cmd =
      app.add_subcommand("access", "enumerate the access structure");
  add_scheme_options(access_cmd, access_args, true);
  access_cmd
      ->add_option("--method", access_method,
                   "graphical, generators, oracle, or all")
      ->check(CLI::IsMember({"graphical", "generators", "oracle", "all"}));

  SchemeArgs sim_args;
  std::string sim_protocol;
  std::vector<size_t> sim_set;
  int sim_bit = 0;
  std::string sim_secret = "0";
  uint64_t sim_seed = kDefaultSeed;
  bool sim_trace = false;
  auto* sim_cmd =
      app.add_subcommand("simulate", "run a sharing round on a coalition");
  add_scheme_options(sim_cmd, sim_args, true);
  sim_cmd->add_option("--protocol", sim_protocol, "cc or qq")
      ->required()
      ->check(CLI::IsMember({"cc", "qq"}));
  sim_cmd->add_option("--set", sim_set, "coalition attempting recovery")
      ->required()
      ->delimiter(',');
  sim_cmd->add_option("--bit", sim_bit, "classical secret bit")
      ->check(CLI::Range(0, 1));
  sim_cmd
      ->add_option("--secret", sim_secret,
                   "quantum secret label: 0 1 + - +i -i")
      ->check(CLI::IsMember({"0", "1", "+", "-", "+i", "-i"}));
  sim_cmd->add_option("--seed", sim_seed, "measurement seed");
  sim_cmd->add_flag("--trace", sim_trace, "include the circuit trace");

  SchemeArgs verify_args;
  size_t verify_max_oracle = 12;
  auto* verify_cmd = app.add_subcommand(
      "verify", "cross-check deciders, oracle, and round trips");
  add_scheme_options(verify_cmd, verify_args, true);
  verify_cmd
      ->add_option("--max-oracle", verify_max_oracle,
                   "largest qubit count for the dense oracle")
      ->check(CLI::Range(size_t{0}, size_t{12}));

  std::string convert_code_path;
  SchemeArgs convert_args;
  auto* convert_cmd = app.add_subcommand(
      "convert", "stabilizer code to graph or graph to stabilizer code");
  auto* code_opt =
      convert_cmd->add_option("--code", convert_code_path, "stabilizer file");
  auto* cg_opt =
      convert_cmd->add_option("--graph", convert_args.graph_path,
                              "edge-list file");
  convert_cmd->add_option("--a", convert_args.a_set, "sharing set A")
      ->delimiter(',')
      ->needs(cg_opt);
  code_opt->excludes(cg_opt);
  cg_opt->excludes(code_opt);

  size_t gen_k = 0;
  uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand(
      "gen", "random bipartite graph with orthogonal biadjacency");
  gen_cmd->add_option("--k", gen_k, "half the vertex count")
      ->required()
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen_seed, "generator seed");
  gen_cmd->add_option("--out", gen_out, "write the edge list here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (access_cmd->parsed()) return run_access(access_args, access_method);
    if (sim_cmd->parsed()) {
      return run_simulate(sim_args, sim_protocol, sim_set, sim_bit,
                          sim_secret, sim_seed, sim_trace);
    }
    if (verify_cmd->parsed()) return run_verify(verify_args, verify_max_oracle);
    if (convert_cmd->parsed()) {
      if (!convert_code_path.empty()) return run_convert_code(convert_code_path);
      if (convert_args.graph_path.empty()) {
        throw std::invalid_argument("convert needs --code or --graph");
      }
      return run_convert_graph(convert_args);
    }
    if (gen_cmd->parsed()) {
      Graph g = random_orthogonal_graph(gen_k, gen_seed);
      std::string text = serialize_edge_list(g);
      if (gen_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream fout(gen_out, std::ios::binary);
        if (!fout) throw std::runtime_error("cannot write " + gen_out);
        fout << text;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
