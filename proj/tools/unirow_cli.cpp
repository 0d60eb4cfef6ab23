// Copyright 2026 The unirow Authors
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

// unirow: batch front door. Every subcommand writes one line-oriented
// artifact (stdout or --out) that `unirow verify` can re-check.
//
// Exit codes: 0 ok, 1 verification failure or negative answer,
// 2 budget exhausted or inconclusive, 3 configuration error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "unirow/artifacts.hpp"
#include "unirow/orbit.hpp"

namespace {

using namespace unirow;

constexpr int kOk = 0, kFailed = 1, kInconclusive = 2, kConfig = 3;

struct Options {
  std::string ring;
  int n = 3;
  std::string ideal, second_ideal;
  std::size_t budget = 200000;
  std::string window = "8,8";
  int jobs = 1;
  std::uint64_t seed = 0;
  std::string out;
  // Subcommand specifics.
  std::string from, to, row, x, y, a = "2", name, target, mode = "roitman", input;
  int k = 2;
};

struct ConfigError : Error {
  using Error::Error;
};

// Rows are given as semicolon-separated elements; the witness is found
// by ideal membership.
std::vector<Elem> parse_elems(const Ring& R, const std::string& text) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(R.parse(item));
  if (out.empty()) throw ConfigError("empty row");
  return out;
}

UnimodularRow row_arg(const RingPtr& R, const std::string& text, const char* flag) {
  if (text.empty()) throw ConfigError(std::string("missing --") + flag);
  return make_row(R, parse_elems(*R, text));
}

RingPtr ring_arg(const Options& o) {
  if (o.ring.empty()) throw ConfigError("missing --ring");
  return parse_descriptor(o.ring);
}

std::optional<Ideal> ideal_arg(const RingPtr& R, const std::string& text) {
  if (text.empty()) return std::nullopt;
  return Ideal{R, parse_elems(*R, text)};
}

std::pair<int, int> window_arg(const std::string& text) {
  int N = 0, D = 0;
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> N >> comma >> D) || comma != ',' || N < 0 || D < 0) throw ConfigError("--window expects N,D");
  return {N, D};
}

// Written to a sibling temporary first, then renamed into place.
void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::string tmp = o.out + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + o.out);
    f << text;
  }
  std::filesystem::rename(tmp, o.out);
}

int census(const Options& o) {
  FiniteRing F(ring_arg(o));
  auto I = ideal_arg(F.ring(), o.ideal);
  auto c = orbit_bfs(F, o.n, I, {}, {});
  emit(o, census_to_text(F, c));
  std::cerr << c.rows.size() << " rows, " << c.orbit_count << " orbits\n";
  return c.stabilized ? kOk : kInconclusive;
}

int path(const Options& o) {
  FiniteRing F(ring_arg(o));
  auto I = ideal_arg(F.ring(), o.ideal);
  auto x = parse_elems(*F.ring(), o.from), y = parse_elems(*F.ring(), o.to);
  if (x.size() != y.size()) throw ConfigError("--from and --to differ in length");
  auto c = orbit_bfs(F, static_cast<int>(x.size()), I);
  auto w = certificate_path(F, c, x, y);
  if (!w) {
    std::cerr << "rows lie in different orbits\n";
    return kFailed;
  }
  emit(o, certificate_to_text(certify(make_row(F.ring(), x, I), *w, I)));
  return kOk;
}

int experiment(const Options& o) {
  ExperimentConfig cfg;
  cfg.ring = o.ring;
  cfg.n = o.n;
  RingPtr R = ring_arg(o);
  auto split = [&](const std::string& s) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    for (const auto& e : parse_elems(*R, s)) out.push_back(R->print(e));
    return out;
  };
  cfg.ideal_i = split(o.ideal);
  cfg.ideal_j = split(o.second_ideal);
  cfg.retract_target = o.target;
  auto rep = lemma_experiment(o.name, cfg);
  std::ostringstream out;
  out << "# unirow experiment v1\n";
  out << "name " << rep.name << "\n";
  out << "ring " << R->name() << "\n";
  out << "n " << o.n << "\n";
  for (const auto& a : rep.assertions) out << "assert " << a << "\n";
  out << "result " << (rep.passed ? "pass" : "fail") << "\n";
  out << "end\n";
  emit(o, out.str());
  return rep.passed ? kOk : kFailed;
}

int reduce(const Options& o) {
  RingPtr A = ring_arg(o);
  if (o.mode == "artin-rees") {
    RingPtr R = A->coeff_ring().self();
    auto I = ideal_arg(R, o.ideal), J = ideal_arg(R, o.second_ideal);
    if (!I || !J) throw ConfigError("artin-rees needs --ideal and --second-ideal");
    auto [N, D] = window_arg(o.window);
    emit(o, artin_rees_to_text(artin_rees_exponent(A, *I, *J, N, D)));
    return kOk;
  }
  if (o.mode != "roitman") throw ConfigError("--mode is roitman or artin-rees");
  Elem a = A->coeff_ring().parse(o.a);
  ReductionOptions opt;
  opt.budget.nodes = o.budget;
  UnimodularRow row = o.row.empty() ? random_relative_row(A, a, o.n, o.seed) : row_arg(A, o.row, "row");
  auto t = roitman_machine(row, a, opt);
  if (o.row.empty()) t.flags.push_back("initial row generated from seed " + std::to_string(o.seed));
  emit(o, trace_to_text(t));
  return kOk;
}

int verify(const Options& o) {
  std::ifstream f(o.input, std::ios::binary);
  if (!f) throw ConfigError("cannot read " + o.input);
  std::stringstream ss;
  ss << f.rdbuf();
  std::string text = ss.str();
  std::string why;
  if (artifact_kind(text) == "experiment") {
    why = "experiment reports carry no certificates; rerun the experiment instead";
  } else {
    why = verify_artifact_text(text);
  }
  if (!why.empty()) {
    std::cout << "FAIL " << why << "\n";
    return kFailed;
  }
  std::cout << "OK " << artifact_kind(text) << "\n";
  return kOk;
}

int witt(const Options& o) {
  RingPtr R = ring_arg(o);
  auto row = row_arg(R, o.row, "row");
  std::string text = witt_record(row);
  emit(o, text);
  return verify_artifact_text(text).empty() ? kOk : kFailed;
}

int group(const Options& o) {
  RingPtr R = ring_arg(o);
  SearchBudget b{o.budget};
  emit(o, group_record(row_arg(R, o.x, "x"), row_arg(R, o.y, "y"), b));
  return kOk;
}

int power(const Options& o) {
  RingPtr R = ring_arg(o);
  SearchBudget b{o.budget};
  std::string text = power_record(row_arg(R, o.row, "row"), o.k, b);
  emit(o, text);
  if (text.find("verdict Refuted") != std::string::npos) return kFailed;
  if (text.find("verdict Inconclusive") != std::string::npos) return kInconclusive;
  return kOk;
}

// Searches that ran out of room, as opposed to bad input.
bool inconclusive(const Error& e) {
  return dynamic_cast<const BudgetExhausted*>(&e) || dynamic_cast<const SaturationUndecided*>(&e) ||
         dynamic_cast<const NoMonicFound*>(&e) || dynamic_cast<const NoExponentInWindow*>(&e) ||
         dynamic_cast<const Undecided*>(&e) || dynamic_cast<const CapExceeded*>(&e);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unirow: unimodular rows, orbit censuses and degree-reduction traces"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("--ring", o.ring, "ring or algebra descriptor, e.g. 'graded(Z; 2@1)'");
    s->add_option("--n", o.n, "row length")->check(CLI::Range(1, 64));
    s->add_option("--ideal", o.ideal, "ideal generators separated by ';'");
    s->add_option("--budget", o.budget, "search budget (nodes or solves)");
    s->add_option("--window", o.window, "Artin-Rees window N,D");
    s->add_option("--jobs", o.jobs, "worker count; output is identical for every value")->check(CLI::PositiveNumber);
    s->add_option("--seed", o.seed, "seed for generated inputs");
    s->add_option("--out", o.out, "output file (default stdout)");
  };

  auto* c_census = app.add_subcommand("census", "orbit census of Um_n(R) or Um_n(R, I)");
  common(c_census);
  auto* c_path = app.add_subcommand("path", "certificate between two rows of a finite ring");
  common(c_path);
  c_path->add_option("--from", o.from, "source row, elements separated by ';'")->required();
  c_path->add_option("--to", o.to, "target row")->required();
  auto* c_exp = app.add_subcommand("experiment", "lemma experiment at census level");
  common(c_exp);
  c_exp->add_option("--name", o.name, "retract, exact_seq, nil_product or sum_split")->required();
  c_exp->add_option("--second-ideal", o.second_ideal, "generators of J");
  c_exp->add_option("--target", o.target, "retract target descriptor");
  auto* c_reduce = app.add_subcommand("reduce", "degree reduction trace or Artin-Rees table");
  common(c_reduce);
  c_reduce->add_option("--mode", o.mode, "roitman or artin-rees");
  c_reduce->add_option("--a", o.a, "the element a of the base ring");
  c_reduce->add_option("--row", o.row, "row; generated from --seed when absent");
  c_reduce->add_option("--second-ideal", o.second_ideal, "generators of J");
  auto* c_verify = app.add_subcommand("verify", "re-check a written artifact");
  c_verify->add_option("file", o.input, "artifact file")->required();
  auto* c_witt = app.add_subcommand("witt", "Vaserstein matrix of a length-3 row");
  common(c_witt);
  c_witt->add_option("--row", o.row, "row, elements separated by ';'");
  auto* c_group = app.add_subcommand("group", "product of two orbit classes");
  common(c_group);
  c_group->add_option("--x", o.x, "first row");
  c_group->add_option("--y", o.y, "second row");
  auto* c_power = app.add_subcommand("power", "goodness experiment [x^(k)] = [x]^k");
  common(c_power);
  c_power->add_option("--row", o.row, "row");
  c_power->add_option("--k", o.k, "exponent")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    if (*c_census) return census(o);
    if (*c_path) return path(o);
    if (*c_exp) return experiment(o);
    if (*c_reduce) return reduce(o);
    if (*c_verify) return verify(o);
    if (*c_witt) return witt(o);
    if (*c_group) return group(o);
    if (*c_power) return power(o);
  } catch (const Error& e) {
    if (inconclusive(e)) {
      std::cerr << "inconclusive: " << e.what() << "\n";
      return kInconclusive;
    }
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  }
  return kConfig;
}
