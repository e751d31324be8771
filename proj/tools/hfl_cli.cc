// hfl: command-line front end over the hfl C API.
//
// Every command prints one JSON report on stdout:
//   {"command", "parameters", "input": {"sha256"}, "result", "wall_time_ms"}
// Exit codes: 0 success, 2 input error, 3 size limit, 1 internal failure.
// HFL_ENUM_CAP overrides the enumeration cap; HFL_WORKERS sets the number
// of scan threads (results do not depend on it).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hfl/hfl.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitInput = 2;
constexpr int kExitSizeLimit = 3;
constexpr int kExitInternal = 1;

struct CliFailure {
  int exit_code;
  std::string message;
};

int ExitCodeFor(hfl_status status) {
  switch (status) {
    case HFL_OK: return 0;
    case HFL_ERR_SIZE_LIMIT: return kExitSizeLimit;
    case HFL_ERR_INTERNAL: return kExitInternal;
    default: return kExitInput;
  }
}

void Check(hfl_status status) {
  if (status != HFL_OK) {
    throw CliFailure{ExitCodeFor(status),
                     std::string(hfl_status_name(status)) + ": " +
                         hfl_last_error()};
  }
}

std::string TakeString(char* s) {
  std::string out(s);
  hfl_string_free(s);
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure{kExitInput, "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string Sha256(const std::string& bytes) {
  char* out = nullptr;
  Check(hfl_sha256_hex(bytes.data(), bytes.size(), &out));
  return TakeString(out);
}

int EnvInt(const char* name, int fallback) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return fallback;
  char* end = nullptr;
  long parsed = std::strtol(value, &end, 10);
  if (*end != '\0' || parsed < 1 || parsed > 1 << 20) {
    throw CliFailure{kExitInput, std::string(name) + " must be a positive decimal integer"};
  }
  return static_cast<int>(parsed);
}

hfl_options OptionsFromEnv() {
  hfl_options options;
  hfl_options_init(&options);
  options.enumeration_cap = EnvInt("HFL_ENUM_CAP", options.enumeration_cap);
  options.workers = EnvInt("HFL_WORKERS", options.workers);
  return options;
}

class GraphHandle {
 public:
  explicit GraphHandle(const std::string& text) {
    Check(hfl_graph_parse(text.data(), text.size(), &graph_));
  }
  ~GraphHandle() { hfl_graph_free(graph_); }
  GraphHandle(const GraphHandle&) = delete;
  GraphHandle& operator=(const GraphHandle&) = delete;
  const hfl_graph* get() const { return graph_; }

 private:
  hfl_graph* graph_ = nullptr;
};

class ActionHandle {
 public:
  ActionHandle() = default;
  ~ActionHandle() { hfl_action_free(action_); }
  ActionHandle(const ActionHandle&) = delete;
  ActionHandle& operator=(const ActionHandle&) = delete;
  hfl_action** out() { return &action_; }
  const hfl_action* get() const { return action_; }

 private:
  hfl_action* action_ = nullptr;
};

// Parsed flag values shared by the subcommands.
struct Flags {
  std::string graph_file;
  std::string eps;
  int k = 1;
  bool minimal = false;
  bool exact = false;
  bool mwu = false;
  int rounds = 4000;
  uint64_t seed = 1;
  std::string action_file;
  std::string family;
  bool profile = false;
};

struct Outcome {
  Json parameters;
  std::string input_digest;
  Json result;
};

Outcome RunGraphCommand(const std::string& command, const Flags& f,
                        const hfl_options& options) {
  const std::string text = ReadFile(f.graph_file);
  GraphHandle graph(text);
  Outcome o;
  o.input_digest = Sha256(text);
  char* out = nullptr;
  if (command == "profile") {
    o.parameters = {{"k", f.k}};
    Check(hfl_profile_json(graph.get(), f.k, &options, &out));
  } else if (command == "greedy") {
    o.parameters = {{"eps", f.eps}, {"k", f.k}};
    Check(hfl_greedy_json(graph.get(), f.eps.c_str(), f.k, &out));
  } else if (command == "folner") {
    o.parameters = {{"eps", f.eps}, {"k", f.k}};
    Check(hfl_folner_json(graph.get(), f.eps.c_str(), f.k, &out));
  } else if (command == "game") {
    if (f.mwu) {
      o.parameters = {{"k", f.k}, {"mode", "mwu"}, {"rounds", f.rounds},
                      {"seed", f.seed}};
      Check(hfl_game_mwu_json(graph.get(), f.k, f.rounds, f.seed, &options,
                              &out));
    } else {
      o.parameters = {{"k", f.k}, {"mode", "exact"}};
      Check(hfl_game_exact_json(graph.get(), f.k, 0, &options, &out));
    }
  } else if (command == "separators") {
    o.parameters = {{"k", f.k}, {"minimal", f.minimal}};
    Check(hfl_separators_json(graph.get(), f.k, f.minimal ? 1 : 0, &options,
                              &out));
  }
  o.result = Json::parse(TakeString(out));
  return o;
}

Outcome RunSchreier(const Flags& f, const hfl_options& options) {
  ActionHandle action;
  Outcome o;
  if (!f.action_file.empty() == !f.family.empty()) {
    throw CliFailure{kExitInput, "give exactly one of --action or --family"};
  }
  if (!f.action_file.empty()) {
    const std::string text = ReadFile(f.action_file);
    Check(hfl_action_parse(text.data(), text.size(), action.out()));
    o.input_digest = Sha256(text);
    o.parameters = {{"source", "file"}};
  } else {
    // cycle:n or random:n:seed
    std::vector<std::string> parts;
    std::stringstream ss(f.family);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    auto number = [&](const std::string& s) -> long long {
      try {
        size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
      } catch (const std::exception&) {
        throw CliFailure{kExitInput, "bad number in --family: " + s};
      }
    };
    if (parts.size() == 2 && parts[0] == "cycle") {
      Check(hfl_action_cycle(static_cast<int>(number(parts[1])), action.out()));
    } else if (parts.size() == 3 && parts[0] == "random") {
      Check(hfl_action_random(static_cast<int>(number(parts[1])),
                              static_cast<uint64_t>(number(parts[2])),
                              action.out()));
    } else {
      throw CliFailure{kExitInput,
                       "--family must be cycle:n or random:n:seed"};
    }
    char* graph_text = nullptr;
    char* labels_text = nullptr;
    Check(hfl_schreier_emit(action.get(), &graph_text, &labels_text));
    hfl_string_free(labels_text);
    o.input_digest = Sha256(TakeString(graph_text));
    o.parameters = {{"source", "family"}, {"family", f.family}};
  }
  if (f.profile) o.parameters["k"] = f.k;
  o.parameters["profile"] = f.profile;
  char* out = nullptr;
  Check(hfl_schreier_json(action.get(), f.profile ? 1 : 0, f.k, &options,
                          &out));
  o.result = Json::parse(TakeString(out));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separators, Følner sets and the separator game on finite "
               "bounded-degree graphs"};
  app.require_subcommand(1);
  Flags f;

  auto* profile = app.add_subcommand("profile", "exact game value, h and ULA profiles");
  profile->add_option("graph-file", f.graph_file)->required();
  profile->add_option("--k", f.k, "component bound")->required();

  auto* greedy = app.add_subcommand("greedy", "greedy (eps,k)-separator from Følner sets");
  greedy->add_option("graph-file", f.graph_file)->required();
  greedy->add_option("--eps", f.eps, "boundary ratio, e.g. 1/2")->required();
  greedy->add_option("--k", f.k, "size cap")->required();

  auto* folner = app.add_subcommand("folner", "best Følner witness at (eps,k)");
  folner->add_option("graph-file", f.graph_file)->required();
  folner->add_option("--eps", f.eps, "boundary ratio, e.g. 1/2")->required();
  folner->add_option("--k", f.k, "size cap")->required();

  auto* game = app.add_subcommand("game", "separator game value");
  game->add_option("graph-file", f.graph_file)->required();
  game->add_option("--k", f.k, "component bound")->required();
  auto* exact_flag = game->add_flag("--exact", f.exact, "exact rational LP (default)");
  auto* mwu_flag = game->add_flag("--mwu", f.mwu, "multiplicative weights");
  exact_flag->excludes(mwu_flag);
  game->add_option("--rounds", f.rounds, "MWU rounds")->check(CLI::PositiveNumber);
  game->add_option("--seed", f.seed, "MWU tie-break seed");

  auto* separators = app.add_subcommand("separators", "enumerate K-separators");
  separators->add_option("graph-file", f.graph_file)->required();
  separators->add_option("--k", f.k, "component bound")->required();
  separators->add_flag("--minimal", f.minimal, "inclusion-minimal only");

  auto* schreier = app.add_subcommand("schreier", "Schreier graph of four involutions");
  schreier->add_option("--action", f.action_file, "action file");
  schreier->add_option("--family", f.family, "cycle:n or random:n:seed");
  schreier->add_flag("--profile", f.profile, "add the exact game at --k");
  schreier->add_option("--k", f.k, "component bound for --profile");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    const hfl_options options = OptionsFromEnv();
    const auto start = std::chrono::steady_clock::now();
    std::string command = app.get_subcommands().front()->get_name();
    Outcome o = command == "schreier" ? RunSchreier(f, options)
                                      : RunGraphCommand(command, f, options);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    Json report = {{"command", command},
                   {"parameters", std::move(o.parameters)},
                   {"input", {{"sha256", o.input_digest}}},
                   {"result", std::move(o.result)},
                   {"wall_time_ms", elapsed.count()}};
    const std::string text = report.dump(2) + "\n";
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return 0;
  } catch (const CliFailure& e) {
    std::cerr << "hfl: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "hfl: " << e.what() << "\n";
    return kExitInternal;
  }
}
