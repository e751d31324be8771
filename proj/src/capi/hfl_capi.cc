#include "hfl/hfl.h"

#include <openssl/evp.h>

#include <cstdlib>
#include <cstring>
#include <string>

#include "hfl/error.h"
#include "hfl/folner.h"
#include "hfl/graph.h"
#include "hfl/greedy.h"
#include "hfl/report_json.h"
#include "hfl/schreier.h"
#include "hfl/separator_game.h"
#include "hfl/separators.h"

struct hfl_graph {
  hfl::Graph graph;
};

struct hfl_action {
  hfl::InvolutionAction action;
};

namespace {

thread_local std::string g_last_error;

hfl_status ToStatus(hfl::ErrorCode code) {
  using hfl::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return HFL_ERR_INVALID_ARGUMENT;
    case ErrorCode::kInvalidVertex: return HFL_ERR_INVALID_VERTEX;
    case ErrorCode::kMalformedInput: return HFL_ERR_PARSE_MALFORMED;
    case ErrorCode::kEndpointOutOfRange: return HFL_ERR_PARSE_ENDPOINT;
    case ErrorCode::kDegreeBoundViolated: return HFL_ERR_PARSE_DEGREE;
    case ErrorCode::kSizeLimit: return HFL_ERR_SIZE_LIMIT;
    case ErrorCode::kNoVertices: return HFL_ERR_NO_VERTICES;
    case ErrorCode::kValidation: return HFL_ERR_VALIDATION;
    case ErrorCode::kInternal: return HFL_ERR_INTERNAL;
  }
  return HFL_ERR_INTERNAL;
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

hfl::ComputeOptions Options(const hfl_options* options) {
  hfl::ComputeOptions o;
  if (options != nullptr) {
    o.enumeration_cap = options->enumeration_cap;
    o.ula_cap = options->ula_cap;
    o.workers = options->workers;
  }
  return o;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
hfl_status Guard(Body&& body) {
  g_last_error.clear();
  try {
    body();
    return HFL_OK;
  } catch (const hfl::Error& e) {
    g_last_error = e.what();
    return ToStatus(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return HFL_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HFL_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return HFL_ERR_INTERNAL;
  }
}

void RequireOut(const void* p) {
  if (p == nullptr) {
    throw hfl::Error(hfl::ErrorCode::kInvalidArgument, "null argument");
  }
}

hfl::Rational Eps(const char* eps) {
  RequireOut(eps);
  return hfl::ParseRational(eps);
}

void EmitJson(const hfl::Json& j, char** out) { *out = CopyString(j.dump()); }

}  // namespace

extern "C" {

void hfl_options_init(hfl_options* options) {
  if (options == nullptr) return;
  options->enumeration_cap = hfl::kDefaultEnumerationCap;
  options->ula_cap = hfl::kDefaultUlaCap;
  options->workers = 1;
}

const char* hfl_last_error(void) { return g_last_error.c_str(); }

const char* hfl_status_name(hfl_status status) {
  switch (status) {
    case HFL_OK: return "ok";
    case HFL_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case HFL_ERR_INVALID_VERTEX: return "invalid-vertex";
    case HFL_ERR_PARSE_MALFORMED: return "parse-malformed";
    case HFL_ERR_PARSE_ENDPOINT: return "parse-endpoint-out-of-range";
    case HFL_ERR_PARSE_DEGREE: return "parse-degree-bound";
    case HFL_ERR_SIZE_LIMIT: return "size-limit";
    case HFL_ERR_NO_VERTICES: return "no-vertices";
    case HFL_ERR_VALIDATION: return "validation";
    case HFL_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void hfl_string_free(char* s) { std::free(s); }

hfl_status hfl_graph_parse(const char* text, size_t length, hfl_graph** out) {
  return Guard([&] {
    RequireOut(out);
    *out = nullptr;
    if (text == nullptr && length > 0) RequireOut(text);
    hfl::Graph g = hfl::ParseGraph(std::string_view(text, length));
    *out = new hfl_graph{std::move(g)};
  });
}

hfl_status hfl_graph_emit(const hfl_graph* graph, char** out) {
  return Guard([&] {
    RequireOut(graph);
    RequireOut(out);
    *out = CopyString(hfl::EmitGraph(graph->graph));
  });
}

int hfl_graph_vertex_count(const hfl_graph* graph) {
  return graph == nullptr ? -1 : graph->graph.num_vertices();
}

void hfl_graph_free(hfl_graph* graph) { delete graph; }

hfl_status hfl_action_parse(const char* text, size_t length, hfl_action** out) {
  return Guard([&] {
    RequireOut(out);
    *out = nullptr;
    if (text == nullptr && length > 0) RequireOut(text);
    *out = new hfl_action{hfl::ParseAction(std::string_view(text, length))};
  });
}

hfl_status hfl_action_cycle(int n, hfl_action** out) {
  return Guard([&] {
    RequireOut(out);
    *out = nullptr;
    *out = new hfl_action{hfl::CycleAction(n)};
  });
}

hfl_status hfl_action_random(int n, uint64_t seed, hfl_action** out) {
  return Guard([&] {
    RequireOut(out);
    *out = nullptr;
    *out = new hfl_action{hfl::RandomAction(n, seed)};
  });
}

void hfl_action_free(hfl_action* action) { delete action; }

hfl_status hfl_schreier_emit(const hfl_action* action, char** graph_text,
                             char** labels_text) {
  return Guard([&] {
    RequireOut(action);
    RequireOut(graph_text);
    RequireOut(labels_text);
    hfl::SchreierGraph s = hfl::BuildSchreier(action->action);
    std::string labels;
    for (char c : s.edge_labels) {
      labels += c;
      labels += '\n';
    }
    char* graph = CopyString(hfl::EmitGraph(s.graph));
    *labels_text = CopyString(labels);
    *graph_text = graph;
  });
}

hfl_status hfl_separators_json(const hfl_graph* graph, int k, int minimal,
                               const hfl_options* options, char** out) {
  return Guard([&] {
    RequireOut(graph);
    RequireOut(out);
    auto seps = hfl::EnumerateKSeparators(graph->graph, k, minimal != 0,
                                          Options(options));
    EmitJson(hfl::SeparatorsJson(k, minimal != 0, seps), out);
  });
}

hfl_status hfl_check_separator_json(const hfl_graph* graph,
                                    const char* vertices, int k, char** out) {
  return Guard([&] {
    RequireOut(graph);
    RequireOut(vertices);
    RequireOut(out);
    auto members = nlohmann::json::parse(vertices).get<std::vector<int>>();
    hfl::VertexSet y = hfl::VertexSet::FromUnsorted(std::move(members));
    hfl::SeparatorCheck check = hfl::CheckKSeparator(graph->graph, y, k);
    hfl::Json j = {{"set", hfl::ToJson(y)}, {"k", k}};
    if (const auto* cert = std::get_if<hfl::SeparatorCertificate>(&check)) {
      j["is_separator"] = true;
      j["max_component"] = cert->max_component;
    } else {
      j["is_separator"] = false;
      j["oversized_component"] =
          hfl::ToJson(std::get<hfl::SeparatorRefusal>(check).oversized_component);
    }
    EmitJson(j, out);
  });
}

hfl_status hfl_folner_json(const hfl_graph* graph, const char* eps, int k,
                           char** out) {
  return Guard([&] {
    RequireOut(graph);
    RequireOut(out);
    hfl::Rational e = Eps(eps);
    EmitJson(hfl::FolnerJson(e, k, hfl::FindFolnerSet(graph->graph, e, k)), out);
  });
}

hfl_status hfl_greedy_json(const hfl_graph* graph, const char* eps, int k,
                           char** out) {
  return Guard([&] {
    RequireOut(graph);
    RequireOut(out);
    EmitJson(hfl::GreedyJson(hfl::GreedySeparator(graph->graph, Eps(eps), k)),
             out);
  });
}

hfl_status hfl_ula_profile_json(const hfl_graph* graph, const char* eps,
                                int allow_approx, const hfl_options* options,
                                char** out) {
  return Guard([&] {
    RequireOut(graph);
    RequireOut(out);
    EmitJson(hfl::UlaJson(hfl::ComputeUlaProfile(graph->graph, Eps(eps),
                                                 allow_approx != 0,
                                                 Options(options))),
             out);
  });
}

hfl_status hfl_game_exact_json(const hfl_graph* graph, int k,
                               int all_separators, const hfl_options* options,
                               char** out) {
  return Guard([&] {
    RequireOut(graph);
    RequireOut(out);
    auto family = all_separators != 0 ? hfl::SupportFamily::kAll
                                      : hfl::SupportFamily::kMinimal;
    EmitJson(hfl::GameJson(
                 hfl::ExactGame(graph->graph, k, Options(options), family)),
             out);
  });
}

hfl_status hfl_game_mwu_json(const hfl_graph* graph, int k, int rounds,
                             uint64_t seed, const hfl_options* options,
                             char** out) {
  return Guard([&] {
    RequireOut(graph);
    RequireOut(out);
    EmitJson(hfl::MwuJson(
                 hfl::MwuGame(graph->graph, k, rounds, seed, Options(options))),
             out);
  });
}

hfl_status hfl_profile_json(const hfl_graph* graph, int k,
                            const hfl_options* options, char** out) {
  return Guard([&] {
    RequireOut(graph);
    RequireOut(out);
    const hfl::ComputeOptions o = Options(options);
    hfl::GameReport game = hfl::ExactGame(graph->graph, k, o);
    hfl::Json ula = hfl::Json::array();
    for (const char* eps : {"1/4", "1/2", "3/4"}) {
      ula.push_back(hfl::UlaJson(hfl::ComputeUlaProfile(
          graph->graph, hfl::ParseRational(eps), true, o)));
    }
    hfl::Json j = {{"n", graph->graph.num_vertices()},
                   {"k", k},
                   {"h", hfl::ToJson(game.h)},
                   {"eps_star", hfl::ToJson(game.eps_star)},
                   {"w_star", hfl::ToJson(game.w_star)},
                   {"game", hfl::GameJson(game)},
                   {"ula", std::move(ula)}};
    EmitJson(j, out);
  });
}

hfl_status hfl_schreier_json(const hfl_action* action, int profile, int k,
                             const hfl_options* options, char** out) {
  return Guard([&] {
    RequireOut(action);
    RequireOut(out);
    hfl::SchreierGraph s = hfl::BuildSchreier(action->action);
    hfl::Json j = hfl::SchreierJson(s, hfl::IsPlanar(s.graph));
    if (profile != 0) {
      j["game"] = hfl::GameJson(hfl::ExactGame(s.graph, k, Options(options)));
    }
    EmitJson(j, out);
  });
}

hfl_status hfl_sha256_hex(const void* data, size_t length, char** out) {
  return Guard([&] {
    RequireOut(out);
    if (data == nullptr && length > 0) RequireOut(data);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int digest_len = 0;
    if (EVP_Digest(data, length, digest, &digest_len, EVP_sha256(), nullptr) !=
        1) {
      throw hfl::Error(hfl::ErrorCode::kInternal, "sha256 failed");
    }
    static const char kHex[] = "0123456789abcdef";
    std::string hex;
    for (unsigned int i = 0; i < digest_len; ++i) {
      hex += kHex[digest[i] >> 4];
      hex += kHex[digest[i] & 15];
    }
    *out = CopyString(hex);
  });
}

}  // extern "C"
