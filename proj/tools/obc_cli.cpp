// Copyright 2026 The Authors.
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

// Command-line front end. Talks to the engine only through the C API.

#include <obc/obc.h>

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>
#include <json.hpp>

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Carries an API failure out of a subcommand.
struct ApiFailure {
  obc_status status;
  std::string message;
};

void check(obc_status status) {
  if (status != OBC_OK) throw ApiFailure{status, obc_last_error()};
}

Json take_json(char* text) {
  std::unique_ptr<char, decltype(&obc_string_free)> owned(text, obc_string_free);
  return Json::parse(owned.get());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ApiFailure{OBC_ERR_IO, "cannot open " + path};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  out << j.dump() << '\n';
  if (!out) throw ApiFailure{OBC_ERR_IO, "cannot write " + path};
}

struct ChainHandle {
  obc_chain* ptr = nullptr;
  ~ChainHandle() { obc_chain_free(ptr); }
};

struct BatchHandle {
  obc_batch* ptr = nullptr;
  ~BatchHandle() { obc_batch_free(ptr); }
};

bool pretty = false;

void emit(const Json& j) { std::cout << (pretty ? j.dump(2) : j.dump()) << '\n'; }

// "1,3,4" -> mask; "-" is the empty set.
uint32_t parse_set(const std::string& text, int n) {
  if (text == "-") return 0;
  uint32_t mask = 0;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    int s = 0;
    try {
      s = std::stoi(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--sets", "bad symbol '" + item + "'");
    }
    if (s < 1 || s > n) throw CLI::ValidationError("--sets", "symbol out of range: " + item);
    mask |= uint32_t{1} << (s - 1);
  }
  return mask;
}

// Transcripts in a file: one object, an array, or a play/adversary report.
std::vector<Json> transcripts_in(const Json& doc) {
  std::vector<Json> out;
  auto take = [&](const Json& item) {
    out.push_back(item.contains("transcript") ? item.at("transcript") : item);
  };
  if (doc.is_array()) {
    for (const Json& item : doc) take(item);
  } else if (doc.is_object() && doc.contains("games")) {
    for (const Json& item : doc.at("games")) take(item);
  } else {
    take(doc);
  }
  return out;
}

struct Options {
  int n = 4;
  bool fixed_diagonal = false;
  unsigned threads = 1;
  int k = 0;
  std::vector<std::string> sets;
  uint32_t modulus = 0;
  std::string variant = "standard";
  std::string out;
  std::string file;
  std::string chain_file;
  uint64_t seed = 0;
  uint32_t p = 0;
  std::string strategy = "certificate";
  std::string dealer = "standard";
  int games = 1;
  int rows = 0;
  bool no_verify = false;
  std::string script;
  int step = -1;
};

int run_census(const Options& o) {
  int64_t count = 0;
  check(obc_census(o.n, o.fixed_diagonal ? 1 : 0, o.threads, &count));
  if (pretty) {
    std::cout << "n = " << o.n << (o.fixed_diagonal ? ", constant diagonal" : "")
              << ": signed count " << count << '\n';
  } else {
    emit({{"n", o.n}, {"fixed_diagonal", o.fixed_diagonal}, {"signed_count", count}});
  }
  return kExitOk;
}

int run_completions(const Options& o) {
  if (static_cast<int>(o.sets.size()) != o.n) {
    throw CLI::ValidationError("--sets", "expected exactly n sets");
  }
  std::vector<uint32_t> masks;
  for (const std::string& s : o.sets) {
    masks.push_back(parse_set(s, o.n));
    if (__builtin_popcount(masks.back()) != o.k) {
      throw CLI::ValidationError("--sets", "set '" + s + "' does not have k elements");
    }
  }
  int64_t count = 0;
  check(obc_signed_completions(o.n, masks.data(), o.threads, &count));
  if (pretty) {
    std::cout << "signed completions: " << count << '\n';
  } else {
    emit({{"n", o.n}, {"k", o.k}, {"sets", o.sets}, {"signed_count", count}});
  }
  return kExitOk;
}

int run_chain_build(const Options& o) {
  ChainHandle chain;
  check(obc_chain_build(o.n, o.modulus, o.variant.c_str(), o.threads, &chain.ptr));
  check(obc_chain_save(chain.ptr, o.out.c_str()));
  Json support = Json::array();
  for (int k = o.n; k >= 0; --k) {
    uint64_t size = 0;
    check(obc_chain_support(chain.ptr, k, &size));
    support.push_back({{"k", k}, {"support", size}});
  }
  emit({{"n", o.n}, {"modulus", o.modulus}, {"variant", o.variant}, {"out", o.out},
        {"levels", support}});
  return kExitOk;
}

int run_chain_check(const Options& o) {
  ChainHandle chain;
  check(obc_chain_load(o.file.c_str(), &chain.ptr));
  int pass = 0;
  char* report = nullptr;
  check(obc_chain_check(chain.ptr, o.seed, &pass, &report));
  Json j = take_json(report);
  if (pretty) {
    for (const Json& c : j.at("checks")) {
      std::cout << (c.at("pass").get<bool>() ? "ok    " : "FAIL  ") << c.at("name").get<std::string>()
                << ' ' << c.at("detail").get<std::string>() << '\n';
    }
  } else {
    emit(j);
  }
  return pass ? kExitOk : kExitFailed;
}

Json batch_document(const obc_batch* batch) {
  char* text = nullptr;
  check(obc_batch_summary_json(batch, &text));
  Json doc = take_json(text);
  doc["games"] = Json::array();
  for (size_t i = 0; i < obc_batch_game_count(batch); ++i) {
    check(obc_batch_game_json(batch, i, &text));
    doc["games"].push_back(take_json(text));
  }
  return doc;
}

std::string normalized_strategy(const std::string& name) {
  return name == "random" ? "random_valid" : name;
}

int run_play(const Options& o, bool adversary) {
  obc_play_config config;
  obc_play_config_init(&config);
  const std::string strategy = normalized_strategy(o.strategy);
  const std::string dealer = adversary ? "adversary" : o.dealer;
  std::string script;
  config.n = o.n;
  config.p = o.p;
  config.strategy = strategy.c_str();
  config.dealer = dealer.c_str();
  config.seed = o.seed;
  config.games = o.games;
  config.rows = o.rows;
  config.threads = static_cast<int>(o.threads);
  config.verify = o.no_verify ? 0 : 1;
  if (!o.script.empty()) {
    script = read_file(o.script);
    config.script_json = script.c_str();
  }
  BatchHandle batch;
  check(obc_play(&config, &batch.ptr));
  Json doc = batch_document(batch.ptr);
  const Json& summary = doc.at("summary");
  if (!o.out.empty()) {
    Json transcripts = Json::array();
    for (const Json& g : doc.at("games")) transcripts.push_back(g.at("transcript"));
    write_file(o.out, transcripts.size() == 1 ? transcripts[0] : transcripts);
  }
  if (pretty) {
    std::cout << "n=" << doc["n"] << " p=" << doc["p"] << " strategy=" << strategy
              << " dealer=" << dealer << " games=" << summary["games"] << '\n';
    std::cout << "completed " << summary["completed"] << ", strategy errors "
              << summary["strategy_errors"] << ", dealer disqualified "
              << summary["dealer_disqualified"] << '\n';
    if (adversary) {
      std::cout << "adversary wins " << summary["adversary_wins"] << ", refuted "
                << summary["adversary_refuted"] << '\n';
    }
    for (const auto& [step, count] : summary.at("failure_steps").items()) {
      std::cout << "  error at step " << step << ": " << count << '\n';
    }
    if (!o.no_verify) {
      std::cout << "verified " << summary["verified"] << ", verify failures "
                << summary["verify_failures"] << '\n';
    }
  } else {
    emit(o.out.empty() ? doc : Json{{"n", doc["n"]}, {"p", doc["p"]}, {"summary", summary},
                                    {"out", o.out}});
  }
  const bool ok = summary.at("verify_failures").get<int>() == 0 &&
                  summary.at("adversary_refuted").get<int>() == 0;
  return ok ? kExitOk : kExitFailed;
}

int run_verify(const Options& o) {
  ChainHandle chain;
  if (!o.chain_file.empty()) check(obc_chain_load(o.chain_file.c_str(), &chain.ptr));
  const std::vector<Json> transcripts = transcripts_in(Json::parse(read_file(o.file)));
  Json reports = Json::array();
  bool all = true;
  for (const Json& t : transcripts) {
    int pass = 0;
    char* report = nullptr;
    const obc_status status = obc_verify_transcript(t.dump().c_str(), chain.ptr, &pass, &report);
    if (status != OBC_OK) {
      all = false;
      reports.push_back({{"pass", false}, {"error", obc_status_string(status)},
                         {"detail", obc_last_error()}});
      continue;
    }
    all = all && pass;
    reports.push_back(take_json(report));
  }
  if (pretty) {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      std::cout << "transcript " << i + 1 << ": " << (reports[i]["pass"].get<bool>() ? "pass" : "FAIL")
                << '\n';
      if (!reports[i].contains("checks")) continue;
      for (const Json& c : reports[i]["checks"]) {
        if (!c["pass"].get<bool>()) {
          std::cout << "  " << c["name"].get<std::string>() << ": " << c["detail"].get<std::string>()
                    << '\n';
        }
      }
    }
  } else {
    emit({{"pass", all}, {"transcripts", reports}});
  }
  return all ? kExitOk : kExitFailed;
}

int run_hall(const Options& o) {
  const std::vector<Json> transcripts = transcripts_in(Json::parse(read_file(o.file)));
  Json reports = Json::array();
  for (const Json& t : transcripts) {
    char* report = nullptr;
    check(obc_hall_report(t.dump().c_str(), o.step, &report));
    reports.push_back(take_json(report));
  }
  if (pretty) {
    for (const Json& r : reports) {
      std::cout << "step " << r["step"] << ": " << r["violations"].size() << " violation(s)\n";
      for (const Json& v : r["violations"]) {
        std::cout << "  columns " << v["columns"].dump() << " intersect in dimension "
                  << v["dimension"] << '\n';
      }
    }
  } else {
    emit(reports.size() == 1 ? reports[0] : reports);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online basis-game engine"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", pretty, "Human-readable output");
  Options o;

  auto* census = app.add_subcommand("census", "Signed Latin square count");
  census->add_option("--n", o.n)->required()->check(CLI::Range(1, 7));
  census->add_flag("--fixed-diagonal", o.fixed_diagonal, "Only squares with diagonal n");
  census->add_option("--threads", o.threads, "0 = all cores");

  auto* completions = app.add_subcommand("completions", "Signed completions of a partial square");
  completions->add_option("--n", o.n)->required()->check(CLI::Range(1, 7));
  completions->add_option("--k", o.k, "Rows already filled")->required();
  completions->add_option("--sets", o.sets, "Per column: symbols used, e.g. 1,3 or - for none")
      ->required();
  completions->add_option("--threads", o.threads);

  auto* chain = app.add_subcommand("chain", "Certificate chains");
  chain->require_subcommand(1);
  chain->fallthrough();
  auto* build = chain->add_subcommand("build", "Build and save a chain");
  build->add_option("--n", o.n)->required()->check(CLI::Range(1, 8));
  build->add_option("--mod", o.modulus, "Prime modulus; 0 = integers");
  build->add_option("--variant", o.variant)->check(CLI::IsMember({"standard", "common_vector"}));
  build->add_option("--out", o.out)->required();
  build->add_option("--threads", o.threads);
  auto* check_cmd = chain->add_subcommand("check", "Re-verify a saved chain");
  check_cmd->add_option("file", o.file)->required();
  check_cmd->add_option("--seed", o.seed);

  auto* play = app.add_subcommand("play", "Play games");
  play->add_option("--n", o.n)->required()->check(CLI::Range(1, 16));
  play->add_option("--strategy", o.strategy)->required();
  play->add_option("--dealer", o.dealer)->required();
  play->add_option("--p", o.p, "Prime; default is the smallest admissible one");
  play->add_option("--seed", o.seed);
  play->add_option("--games", o.games)->check(CLI::NonNegativeNumber);
  play->add_option("--rows", o.rows, "Rows to deal; default n");
  play->add_option("--threads", o.threads);
  play->add_option("--script", o.script, "JSON file of rows for the scripted dealer");
  play->add_option("--out", o.out, "Write transcripts here");
  play->add_flag("--no-verify", o.no_verify);

  auto* adversary = app.add_subcommand("adversary", "Odd-n adversary against a strategy");
  adversary->add_option("--n", o.n)->required()->check(CLI::Range(3, 15));
  adversary->add_option("--strategy", o.strategy)->required();
  adversary->add_option("--p", o.p);
  adversary->add_option("--seed", o.seed);
  adversary->add_option("--runs", o.games)->check(CLI::PositiveNumber);
  adversary->add_option("--threads", o.threads);
  adversary->add_option("--out", o.out);

  auto* verify = app.add_subcommand("verify", "Re-check transcripts");
  verify->add_option("file", o.file)->required();
  verify->add_option("--chain", o.chain_file, "Chain to check certificate values against");

  auto* hall = app.add_subcommand("hall", "Hall-condition violations of a transcript");
  hall->add_option("file", o.file)->required();
  hall->add_option("--step", o.step, "Placed rows to consider; default all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*census) return run_census(o);
    if (*completions) return run_completions(o);
    if (*build) return run_chain_build(o);
    if (*check_cmd) return run_chain_check(o);
    if (*play) return run_play(o, false);
    if (*adversary) return run_play(o, true);
    if (*verify) return run_verify(o);
    if (*hall) return run_hall(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const ApiFailure& f) {
    Json err = {{"error", obc_status_string(f.status)}, {"detail", f.message}};
    std::cerr << err.dump() << '\n';
    return f.status == OBC_ERR_INVALID_ARGUMENT ? kExitUsage : kExitFailed;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << Json{{"error", "parse"}, {"detail", e.what()}}.dump() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
