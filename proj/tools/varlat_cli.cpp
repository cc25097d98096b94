#include <chrono>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "varlat/varlat.h"

namespace {

using nlohmann::json;

struct Outcome {
  int exit_code = 0;
  std::string status = "ok";
  json payload = json::object();
  std::string human;
};

std::string take_string(char* text) {
  std::string out = text ? text : "";
  varlat_string_free(text);
  return out;
}

Outcome capi_error(int status) {
  Outcome o;
  const std::string name = varlat_status_name(status);
  const std::string message = varlat_last_error();
  o.payload = json{{"error", json{{"status", name}, {"message", message}}}};
  if (status == VARLAT_ENOTLATTICE || status == VARLAT_ECYCLE) {
    o.status = "violation";
    o.exit_code = 1;
  } else {
    o.status = "error";
    o.exit_code = 2;
  }
  o.human = name + ": " + message;
  return o;
}

Outcome usage_error(const std::string& message) {
  Outcome o;
  o.status = "error";
  o.exit_code = 2;
  o.payload = json{{"error", json{{"status", "Usage"}, {"message", message}}}};
  o.human = message;
  return o;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

std::optional<int> parse_int(const std::string& text) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::string flag_list(const json& entry) {
  static const char* kFlags[] = {"neutral", "distributive", "standard", "modular",
                                 "cancellable"};
  std::string out;
  for (const char* f : kFlags) {
    if (entry.at(f).get<bool>()) {
      if (!out.empty()) out += ' ';
      out += f;
    }
  }
  return out.empty() ? "none" : out;
}

std::string classification_text(const json& rows) {
  std::string out;
  for (const auto& entry : rows)
    out += entry.at("element").get<std::string>() + ": " + flag_list(entry) + "\n";
  return out;
}

std::string report_text(const json& report) {
  std::string out;
  for (const auto& check : report.at("checks")) {
    out += check.at("pass").get<bool>() ? "[ ok ] " : "[FAIL] ";
    out += check.at("name").get<std::string>();
    const auto detail = check.at("detail").get<std::string>();
    if (!detail.empty()) out += " (" + detail + ")";
    out += "\n";
  }
  out += report.at("ok").get<bool>() ? "all expectations hold\n"
                                     : "some expectations are falsified\n";
  return out;
}

Outcome report_outcome(const std::string& json_text) {
  Outcome o;
  o.payload = json::parse(json_text);
  if (!o.payload.at("ok").get<bool>()) {
    o.status = "violation";
    o.exit_code = 1;
  }
  o.human = report_text(o.payload);
  return o;
}

Outcome run_lattice_classify(const std::string& input, const std::string& dot_path) {
  const auto text = read_file(input);
  if (!text) return usage_error("cannot read input file " + input);
  varlat_lattice* lat = nullptr;
  int rc = varlat_lattice_from_json(text->c_str(), &lat);
  if (rc != VARLAT_OK) return capi_error(rc);
  char* out = nullptr;
  rc = varlat_lattice_classify_json(lat, &out);
  if (rc != VARLAT_OK) {
    varlat_lattice_free(lat);
    return capi_error(rc);
  }
  Outcome o;
  o.payload = json{{"classification", json::parse(take_string(out))}};
  o.human = classification_text(o.payload.at("classification"));
  if (!dot_path.empty()) {
    char* dot = nullptr;
    rc = varlat_lattice_dot(lat, &dot);
    if (rc != VARLAT_OK) {
      varlat_lattice_free(lat);
      return capi_error(rc);
    }
    if (!write_file(dot_path, take_string(dot))) {
      varlat_lattice_free(lat);
      return usage_error("cannot write " + dot_path);
    }
    o.payload["dot"] = dot_path;
  }
  varlat_lattice_free(lat);
  return o;
}

Outcome run_subgroups(int degree, const std::string& action,
                      const std::string& fixtures, const std::string& dot_path) {
  if (action == "build") {
    char* out = nullptr;
    int rc = varlat_subgroups_json(degree, &out);
    if (rc != VARLAT_OK) return capi_error(rc);
    Outcome o;
    o.payload = json::parse(take_string(out));
    std::string names;
    for (const auto& g : o.payload.at("subgroups")) {
      names += "  " + g.at("name").get<std::string>() + " (order " +
               std::to_string(g.at("order").get<int>()) + ")\n";
    }
    o.human = std::to_string(o.payload.at("subgroups").size()) + " subgroups of S_" +
              std::to_string(degree) + "\n" + names;
    if (!dot_path.empty()) {
      char* dot = nullptr;
      rc = varlat_subgroups_dot(degree, &dot);
      if (rc != VARLAT_OK) return capi_error(rc);
      if (!write_file(dot_path, take_string(dot)))
        return usage_error("cannot write " + dot_path);
      o.payload["dot"] = dot_path;
    }
    return o;
  }
  if (action == "classify") {
    char* out = nullptr;
    const int rc = varlat_subgroups_classify_json(degree, &out);
    if (rc != VARLAT_OK) return capi_error(rc);
    Outcome o;
    o.payload = json::parse(take_string(out));
    o.human = classification_text(o.payload.at("classification"));
    return o;
  }
  if (action == "figure") {
    const json options{{"fixtures_dir", fixtures}};
    char* out = nullptr;
    const int rc =
        varlat_subgroups_figure_json(degree, options.dump().c_str(), &out);
    if (rc != VARLAT_OK) return capi_error(rc);
    return report_outcome(take_string(out));
  }
  return usage_error("unknown subgroups action " + action +
                     " (expected build, classify, or figure)");
}

Outcome run_variety(const std::string& action, const std::vector<std::string>& args) {
  if (args.size() != 2)
    return usage_error("variety " + action + " takes exactly two arguments");

  struct Handle {
    varlat_variety* v = nullptr;
    ~Handle() { varlat_variety_free(v); }
  };

  if (action == "check") {
    Handle h;
    int rc = varlat_variety_parse(args[0].c_str(), &h.v);
    if (rc != VARLAT_OK) return capi_error(rc);
    int holds = 0;
    rc = varlat_variety_check(h.v, args[1].c_str(), &holds);
    if (rc != VARLAT_OK) return capi_error(rc);
    char* canonical = nullptr;
    rc = varlat_variety_to_string(h.v, &canonical);
    if (rc != VARLAT_OK) return capi_error(rc);
    Outcome o;
    o.payload = json{{"handle", take_string(canonical)},
                     {"identity", args[1]},
                     {"holds", holds != 0}};
    o.human = std::string("holds: ") + (holds != 0 ? "true" : "false");
    return o;
  }
  if (action == "join" || action == "meet") {
    Handle a, b, result;
    int rc = varlat_variety_parse(args[0].c_str(), &a.v);
    if (rc != VARLAT_OK) return capi_error(rc);
    rc = varlat_variety_parse(args[1].c_str(), &b.v);
    if (rc != VARLAT_OK) return capi_error(rc);
    rc = action == "join" ? varlat_variety_join(a.v, b.v, &result.v)
                          : varlat_variety_meet(a.v, b.v, &result.v);
    if (rc != VARLAT_OK) return capi_error(rc);
    char* text = nullptr;
    rc = varlat_variety_to_string(result.v, &text);
    if (rc != VARLAT_OK) return capi_error(rc);
    Outcome o;
    const std::string rendered = take_string(text);
    o.payload = json{{"left", args[0]}, {"right", args[1]}, {action, rendered}};
    o.human = action + ": " + rendered;
    return o;
  }
  if (action == "permgroup" || action == "free") {
    const auto k = parse_int(args[1]);
    if (!k) return usage_error("the second argument must be an integer");
    Handle h;
    int rc = varlat_variety_parse(args[0].c_str(), &h.v);
    if (rc != VARLAT_OK) return capi_error(rc);
    char* out = nullptr;
    rc = action == "permgroup" ? varlat_variety_perm_group_json(h.v, *k, &out)
                               : varlat_variety_free_object_json(h.v, *k, &out);
    if (rc != VARLAT_OK) return capi_error(rc);
    Outcome o;
    o.payload = json::parse(take_string(out));
    if (action == "permgroup") {
      o.human = "perm group: " + o.payload.at("name").get<std::string>() +
                " (order " + std::to_string(o.payload.at("members").size()) + ")";
    } else {
      o.human = "free object on " + args[1] + " generators: " +
                std::to_string(o.payload.at("elements").size()) + " elements";
    }
    return o;
  }
  return usage_error("unknown variety action " + action +
                     " (expected check, join, meet, permgroup, or free)");
}

struct VerifyFlags {
  int cap = 6;
  int degree = 3;
  std::uint64_t seed = 1729;
  int depth = 8;
  std::int64_t size = -1;
  int max_len = 4;
  int letters = 3;
  int count = 5000;
  std::string fixtures = "fixtures";
  std::string dot_path;
};

Outcome run_verify(const std::string& suite, const VerifyFlags& flags) {
  json options{{"cap", flags.cap},     {"degree", flags.degree},
               {"seed", flags.seed},   {"depth", flags.depth},
               {"max_len", flags.max_len}, {"letters", flags.letters},
               {"count", flags.count}, {"fixtures_dir", flags.fixtures}};
  if (flags.size >= 0) options["size"] = flags.size;
  char* out = nullptr;
  const int rc = varlat_verify(suite.c_str(), options.dump().c_str(), &out);
  if (rc != VARLAT_OK) return capi_error(rc);
  Outcome o = report_outcome(take_string(out));
  if (!flags.dot_path.empty()) {
    if (suite != "figure1")
      return usage_error("the --dot flag applies to the figure1 suite");
    char* dot = nullptr;
    const int drc = varlat_family_lattice_dot(flags.cap, &dot);
    if (drc != VARLAT_OK) return capi_error(drc);
    if (!write_file(flags.dot_path, take_string(dot)))
      return usage_error("cannot write " + flags.dot_path);
    o.payload["dot"] = flags.dot_path;
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"variety lattice toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a machine-readable result envelope");

  auto* lattice_cmd = app.add_subcommand("lattice", "finite lattice operations");
  lattice_cmd->require_subcommand(1);
  auto* classify_cmd =
      lattice_cmd->add_subcommand("classify", "classify every element");
  std::string lattice_input;
  std::string lattice_dot;
  classify_cmd->add_option("input", lattice_input, "lattice JSON file")->required();
  classify_cmd->add_option("--dot", lattice_dot, "write a Hasse diagram here");

  auto* subgroups_cmd =
      app.add_subcommand("subgroups", "subgroup lattices of symmetric groups");
  int subgroups_degree = 0;
  std::string subgroups_action;
  std::string subgroups_fixtures = "fixtures";
  std::string subgroups_dot;
  subgroups_cmd->add_option("n", subgroups_degree, "symmetric group degree")
      ->required();
  subgroups_cmd->add_option("action", subgroups_action, "build, classify, or figure")
      ->required();
  subgroups_cmd->add_option("--fixtures", subgroups_fixtures,
                            "directory with stored expectations");
  subgroups_cmd->add_option("--dot", subgroups_dot, "write a Hasse diagram here");

  auto* variety_cmd = app.add_subcommand("variety", "variety handle operations");
  std::string variety_action;
  std::vector<std::string> variety_args;
  variety_cmd->add_option("action", variety_action,
                          "check, join, meet, permgroup, or free")
      ->required();
  variety_cmd->add_option("args", variety_args, "action arguments");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string verify_suite;
  VerifyFlags flags;
  verify_cmd->add_option("suite", verify_suite,
                         "figure1, prop31, lemma36, incomparability, or oracles")
      ->required();
  verify_cmd->add_option("--cap", flags.cap, "family lattice index cap");
  verify_cmd->add_option("--n", flags.degree, "witness degree for prop31");
  verify_cmd->add_option("--seed", flags.seed, "random seed");
  verify_cmd->add_option("--depth", flags.depth, "derivation depth bound");
  verify_cmd->add_option("--size", flags.size, "derivation size bound");
  verify_cmd->add_option("--max-len", flags.max_len, "oracle identity length bound");
  verify_cmd->add_option("--letters", flags.letters, "oracle alphabet size");
  verify_cmd->add_option("--count", flags.count, "random pair count");
  verify_cmd->add_option("--fixtures", flags.fixtures,
                         "directory with stored expectations");
  verify_cmd->add_option("--dot", flags.dot_path, "write the figure1 Hasse diagram");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  Outcome outcome;
  if (classify_cmd->parsed()) {
    outcome = run_lattice_classify(lattice_input, lattice_dot);
  } else if (subgroups_cmd->parsed()) {
    outcome = run_subgroups(subgroups_degree, subgroups_action, subgroups_fixtures,
                            subgroups_dot);
  } else if (variety_cmd->parsed()) {
    outcome = run_variety(variety_action, variety_args);
  } else if (verify_cmd->parsed()) {
    outcome = run_verify(verify_suite, flags);
  } else {
    outcome = usage_error("no command given");
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();

  if (as_json) {
    const json envelope{{"status", outcome.status},
                        {"payload", outcome.payload},
                        {"elapsed", elapsed}};
    std::cout << envelope.dump(2) << "\n";
  } else if (!outcome.human.empty()) {
    std::ostream& stream = outcome.exit_code == 2 ? std::cerr : std::cout;
    stream << outcome.human;
    if (outcome.human.back() != '\n') stream << "\n";
  }
  return outcome.exit_code;
}
