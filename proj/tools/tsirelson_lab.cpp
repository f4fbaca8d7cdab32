// Copyright 2026 The tsirelson-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// tsirelson_lab: norms, Schreier queries and verification suites from the
// command line. Exactly one JSON document goes to stdout; diagnostics go to
// stderr. Exit codes: 0 pass, 1 verification counterexample, 2 bad input.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsirelson/json.hpp"
#include "tsirelson/tsirelson.hpp"

namespace {

using namespace tsirelson;

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInput = 2;

struct Flags {
  std::string theta = "1/2";
  std::string alpha = "1";
  std::string vec;
  bool witness = false;
  std::optional<std::size_t> iterates;
  std::string set;
  int max = 8;
  Index start = 1;
  std::string map;
  std::vector<std::string> vecs;
  std::string suite = "lemmas";
  std::uint64_t seed = 42;
  std::size_t count = 12;
  int bound = 6;
};

Json header(const NormContext& ctx) {
  return Json{{"schema", kSchema}, {"theta", ctx.theta().to_string()}, {"alpha", ctx.alpha().to_string()}};
}

Json header(const Ordinal& alpha) { return Json{{"schema", kSchema}, {"alpha", alpha.to_string()}}; }

Json sets_json(const std::vector<IndexSet>& sets) {
  Json out = Json::array();
  for (auto& s : sets) out.push_back(to_json(s));
  return out;
}

CorpusSpec corpus_spec(const Flags& f) {
  CorpusSpec spec = CorpusSpec::standard();
  spec.seed = f.seed;
  spec.count = f.count;
  return spec;
}

int emit(const Json& j, int code) {
  std::cout << j.dump(2) << "\n";
  return code;
}

int run_norm(const Flags& f) {
  const auto ctx = NormContext::parse(f.theta, f.alpha);
  const auto x = parse_vector(f.vec);
  Json out = header(ctx);
  out["vec"] = format_vector(x);
  if (f.witness && !x.is_zero()) {
    const auto res = norm_with_witness(x, ctx);
    out["norm"] = res.value.to_string();
    out["witness"] = to_json(res.witness, x, ctx.theta());
  } else {
    out["norm"] = tsirelson_norm(x, ctx).to_string();
  }
  if (f.iterates) {
    Json seq = Json::array();
    for (auto& v : norm_iterates(x, ctx, *f.iterates)) seq.push_back(v.to_string());
    out["iterates"] = std::move(seq);
  }
  return emit(out, kExitPass);
}

// Witness plus an independent re-evaluation of the tree.
int run_witness(const Flags& f) {
  const auto ctx = NormContext::parse(f.theta, f.alpha);
  const auto x = parse_vector(f.vec);
  const auto res = norm_with_witness(x, ctx);
  const Rational again = res.witness.reconstruct(x, ctx.theta());
  Json out = header(ctx);
  out["vec"] = format_vector(x);
  out["norm"] = res.value.to_string();
  out["reconstructed"] = again.to_string();
  out["witness"] = to_json(res.witness, x, ctx.theta());
  return emit(out, again == res.value ? kExitPass : kExitCounterexample);
}

int run_schreier_member(const Flags& f) {
  const auto alpha = Ordinal::parse(f.alpha);
  const auto set = IndexSet::parse(f.set);
  Json out = header(alpha);
  out["set"] = to_json(set);
  out["member"] = is_member(set, alpha);
  Json dec = nullptr;
  if (!set.empty()) {
    // S_ω membership is decided at order min F.
    const Ordinal order = alpha.is_limit() ? Ordinal::finite(set.min()) : alpha;
    if (order.is_successor()) {
      if (auto d = decompose(set, order)) dec = Json{{"order", d->order.to_string()}, {"blocks", sets_json(d->blocks)}};
    }
  }
  out["decomposition"] = std::move(dec);
  return emit(out, kExitPass);
}

int run_schreier_enum(const Flags& f) {
  const auto alpha = Ordinal::parse(f.alpha);
  const auto members = enumerate_members(alpha, f.max);
  Json out = header(alpha);
  out["max"] = f.max;
  out["count"] = members.size();
  out["members"] = sets_json(members);
  return emit(out, kExitPass);
}

int run_schreier_maximal(const Flags& f) {
  const auto alpha = Ordinal::parse(f.alpha);
  const auto set = greedy_maximal(f.start, alpha);
  Json out = header(alpha);
  out["start"] = f.start;
  out["set"] = to_json(set);
  return emit(out, kExitPass);
}

int run_schreier_regular(const Flags& f) {
  const auto alpha = Ordinal::parse(f.alpha);
  const auto rep = check_regularity(alpha, f.max);
  Json out = header(alpha);
  out["max"] = f.max;
  out["status"] = rep.passed ? "pass" : "fail";
  out["members"] = rep.members;
  if (!rep.passed) {
    out["property"] = rep.property;
    out["member"] = to_json(rep.member);
    out["witness"] = to_json(rep.witness);
  }
  return emit(out, rep.passed ? kExitPass : kExitCounterexample);
}

int run_isometry(const Flags& f) {
  const auto ctx = NormContext::parse(f.theta, f.alpha);
  const auto m = CoordinateMap::parse(f.map);
  std::vector<SparseVector> corpus;
  for (auto& v : f.vecs) corpus.push_back(parse_vector(v));
  if (corpus.empty()) corpus = generate_corpus(corpus_spec(f), ctx);
  const auto rep = check_isometry(m, corpus, ctx);
  Json out = header(ctx);
  out["map"] = m.to_string();
  out["conforms"] = conforms(m, ctx);
  out["corpus_size"] = corpus.size();
  const Json body = to_json(rep);
  for (auto& [k, v] : body.items()) out[k] = v;
  return emit(out, rep.passed() ? kExitPass : kExitCounterexample);
}

int run_verify(const Flags& f) {
  const auto ctx = NormContext::parse(f.theta, f.alpha);
  if (f.suite != "lemmas" && f.suite != "isometry" && f.suite != "oracle")
    throw Error(ErrorCode::kInvalidArgument, "--suite must be lemmas, isometry or oracle");
  SuiteReport rep = [&] {
    if (f.suite == "oracle") return compare_oracle(ctx, f.bound);
    const auto corpus = generate_corpus(corpus_spec(f), ctx);
    return f.suite == "lemmas" ? run_lemma_suite(ctx, corpus) : run_isometry_suite(ctx, corpus);
  }();
  std::cerr << rep.suite << ": " << (rep.passed() ? "pass" : "fail") << " in " << rep.elapsed.count() << " ms\n";
  return emit(to_json(rep), rep.passed() ? kExitPass : kExitCounterexample);
}

int run_oracle(const Flags& f) {
  const auto ctx = NormContext::parse(f.theta, f.alpha);
  if (f.vec.empty()) {
    const auto rep = compare_oracle(ctx, f.bound);
    return emit(to_json(rep), rep.passed() ? kExitPass : kExitCounterexample);
  }
  const auto x = parse_vector(f.vec);
  const Rational slow = brute_force_norm(x, ctx);
  const Rational fast = tsirelson_norm(x, ctx);
  Json out = header(ctx);
  out["vec"] = format_vector(x);
  out["engine"] = fast.to_string();
  out["brute_force"] = slow.to_string();
  out["agree"] = fast == slow;
  return emit(out, fast == slow ? kExitPass : kExitCounterexample);
}

}  // namespace

int main(int argc, char** argv) {
  Flags f;
  CLI::App app{"Exact norms, Schreier families and isometry checks for Tsirelson spaces"};
  app.require_subcommand(1);

  auto context = [&](CLI::App* cmd) {
    cmd->add_option("--theta", f.theta, "theta as p/q in (0, 1/2]")->capture_default_str();
    cmd->add_option("--alpha", f.alpha, "ordinal: n, w or w+n")->capture_default_str();
  };
  auto corpus = [&](CLI::App* cmd) {
    cmd->add_option("--seed", f.seed, "corpus seed")->capture_default_str();
    cmd->add_option("--count", f.count, "random corpus vectors")->capture_default_str();
  };

  auto* norm = app.add_subcommand("norm", "exact norm of a vector");
  context(norm);
  norm->add_option("--vec", f.vec, "vector, e.g. 3:1,4:-1/2")->required();
  norm->add_flag("--witness", f.witness, "include the witness tree");
  norm->add_option("--iterates", f.iterates, "include ||x||_0 .. ||x||_N");

  auto* witness = app.add_subcommand("witness", "norm witness tree, re-evaluated");
  context(witness);
  witness->add_option("--vec", f.vec, "vector")->required();

  auto* schreier = app.add_subcommand("schreier", "Schreier family queries");
  schreier->require_subcommand(1);
  auto* member = schreier->add_subcommand("member", "membership and decomposition");
  member->add_option("--set", f.set, "comma-separated increasing integers")->required();
  auto* enumerate = schreier->add_subcommand("enum", "all members inside {1..max}");
  enumerate->add_option("--max", f.max, "N")->required();
  auto* maximal = schreier->add_subcommand("maximal", "greedy maximal set from a start");
  maximal->add_option("--start", f.start, "first element")->required();
  auto* regular = schreier->add_subcommand("regular", "hereditary/spreading check on {1..max}");
  regular->add_option("--max", f.max, "N")->required();
  for (auto* cmd : {member, enumerate, maximal, regular})
    cmd->add_option("--alpha", f.alpha, "ordinal: n, w or w+n")->capture_default_str();

  auto* isometry = app.add_subcommand("isometry", "exact isometry check of a coordinate map");
  context(isometry);
  corpus(isometry);
  isometry->add_option("--map", f.map, "perm=2,1;signs=-1,1;default=+1")->required();
  isometry->add_option("--vec", f.vecs, "corpus vector (repeatable; default: seeded corpus)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  context(verify);
  corpus(verify);
  verify->add_option("--suite", f.suite, "lemmas | isometry | oracle")->capture_default_str();
  verify->add_option("--bound", f.bound, "oracle suite: support inside {1..bound}")->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "engine vs brute force");
  context(oracle);
  oracle->add_option("--vec", f.vec, "single vector (otherwise exhaustive up to --bound)");
  oracle->add_option("--bound", f.bound, "support inside {1..bound}")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*norm) return run_norm(f);
    if (*witness) return run_witness(f);
    if (*member) return run_schreier_member(f);
    if (*enumerate) return run_schreier_enum(f);
    if (*maximal) return run_schreier_maximal(f);
    if (*regular) return run_schreier_regular(f);
    if (*isometry) return run_isometry(f);
    if (*verify) return run_verify(f);
    if (*oracle) return run_oracle(f);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kVerificationFailure ? kExitCounterexample : kExitInput;
  }
  return kExitInput;
}
