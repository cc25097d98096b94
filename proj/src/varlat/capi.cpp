#include "varlat/varlat.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "json.hpp"
#include "varlat/error.hpp"
#include "varlat/grouplat.hpp"
#include "varlat/io.hpp"
#include "varlat/lattice.hpp"
#include "varlat/perm.hpp"
#include "varlat/variety.hpp"
#include "varlat/verify.hpp"
#include "varlat/words.hpp"

struct varlat_lattice {
  varlat::lattice::FiniteLattice impl;
};

struct varlat_variety {
  varlat::variety::VarietyHandle impl;
};

namespace {

thread_local std::string g_last_error;

int status_of(varlat::errc code) {
  using varlat::errc;
  switch (code) {
    case errc::invalid_argument: return VARLAT_EINVAL;
    case errc::parse: return VARLAT_EPARSE;
    case errc::not_a_lattice: return VARLAT_ENOTLATTICE;
    case errc::cycle_detected: return VARLAT_ECYCLE;
    case errc::degree_too_large: return VARLAT_EDEGREE;
    case errc::unsupported: return VARLAT_EUNSUPPORTED;
    case errc::undecided: return VARLAT_EUNDECIDED;
    case errc::too_large: return VARLAT_ETOOLARGE;
    case errc::precondition_failed: return VARLAT_EPRECONDITION;
  }
  return VARLAT_EINTERNAL;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return VARLAT_OK;
  } catch (const varlat::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return VARLAT_EINTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return VARLAT_EINTERNAL;
  }
}

void set_string(char** out, const std::string& text) {
  char* buffer = static_cast<char*>(std::malloc(text.size() + 1));
  if (!buffer) throw std::bad_alloc();
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  *out = buffer;
}

void require(bool cond, const char* message) {
  if (!cond) varlat::fail(varlat::errc::invalid_argument, message);
}

nlohmann::json parse_options(const char* options_json) {
  if (!options_json || !*options_json) return nlohmann::json::object();
  nlohmann::json doc = nlohmann::json::parse(options_json, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    varlat::fail(varlat::errc::parse, "options must be a JSON object");
  return doc;
}

varlat::verify::Options options_from_json(const nlohmann::json& doc) {
  varlat::verify::Options opt;
  if (doc.contains("cap")) opt.cap = doc.at("cap").get<int>();
  if (doc.contains("degree")) opt.degree = doc.at("degree").get<int>();
  if (doc.contains("seed")) opt.seed = doc.at("seed").get<std::uint64_t>();
  if (doc.contains("depth")) opt.depth = doc.at("depth").get<int>();
  if (doc.contains("size") && !doc.at("size").is_null())
    opt.size = doc.at("size").get<std::size_t>();
  if (doc.contains("max_len")) opt.max_len = doc.at("max_len").get<int>();
  if (doc.contains("letters")) opt.letters = doc.at("letters").get<int>();
  if (doc.contains("count")) opt.count = doc.at("count").get<int>();
  if (doc.contains("fixtures_dir"))
    opt.fixtures_dir = doc.at("fixtures_dir").get<std::string>();
  return opt;
}

}  // namespace

extern "C" {

const char* varlat_version(void) { return "1.0.0"; }

const char* varlat_status_name(int status) {
  switch (status) {
    case VARLAT_OK: return "Ok";
    case VARLAT_EINVAL: return "InvalidArgument";
    case VARLAT_EPARSE: return "ParseError";
    case VARLAT_ENOTLATTICE: return "NotALattice";
    case VARLAT_ECYCLE: return "CycleDetected";
    case VARLAT_EDEGREE: return "DegreeTooLarge";
    case VARLAT_EUNSUPPORTED: return "UnsupportedOperation";
    case VARLAT_EUNDECIDED: return "Undecided";
    case VARLAT_ETOOLARGE: return "TooLarge";
    case VARLAT_EPRECONDITION: return "PreconditionFailed";
    default: return "InternalError";
  }
}

const char* varlat_last_error(void) { return g_last_error.c_str(); }

void varlat_string_free(char* text) { std::free(text); }

int varlat_lattice_from_json(const char* json_text, varlat_lattice** out) {
  return guarded([&] {
    require(json_text != nullptr, "json_text must not be null");
    require(out != nullptr, "out must not be null");
    nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, false);
    if (doc.is_discarded())
      varlat::fail(varlat::errc::parse, "input is not valid JSON");
    *out = new varlat_lattice{varlat::io::lattice_from_json(doc)};
  });
}

void varlat_lattice_free(varlat_lattice* l) { delete l; }

int varlat_lattice_to_json(const varlat_lattice* l, char** out_json) {
  return guarded([&] {
    require(l != nullptr && out_json != nullptr, "null argument");
    set_string(out_json, varlat::io::lattice_to_json(l->impl).dump());
  });
}

int varlat_lattice_classify_json(const varlat_lattice* l, char** out_json) {
  return guarded([&] {
    require(l != nullptr && out_json != nullptr, "null argument");
    set_string(out_json, varlat::io::classification_to_json(l->impl).dump());
  });
}

int varlat_lattice_dot(const varlat_lattice* l, char** out_dot) {
  return guarded([&] {
    require(l != nullptr && out_dot != nullptr, "null argument");
    set_string(out_dot, varlat::io::lattice_to_dot(l->impl));
  });
}

int varlat_subgroups_json(int degree, char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    const auto sl = varlat::grouplat::subgroup_lattice(degree);
    set_string(out_json, varlat::io::subgroup_lattice_to_json(sl).dump());
  });
}

int varlat_subgroups_classify_json(int degree, char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    const auto sl = varlat::grouplat::subgroup_lattice(degree);
    nlohmann::json doc{{"n", degree},
                       {"classification",
                        varlat::io::classification_to_json(sl.lattice)}};
    set_string(out_json, doc.dump());
  });
}

int varlat_subgroups_dot(int degree, char** out_dot) {
  return guarded([&] {
    require(out_dot != nullptr, "null argument");
    const auto sl = varlat::grouplat::subgroup_lattice(degree);
    set_string(out_dot, varlat::io::lattice_to_dot(sl.lattice));
  });
}

int varlat_subgroups_figure_json(int degree, const char* options_json,
                                 char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    const auto opt = options_from_json(parse_options(options_json));
    const auto rep = varlat::verify::subgroup_figure(degree, opt);
    set_string(out_json, varlat::io::suite_report_to_json(rep).dump());
  });
}

int varlat_variety_parse(const char* handle_text, varlat_variety** out) {
  return guarded([&] {
    require(handle_text != nullptr && out != nullptr, "null argument");
    *out = new varlat_variety{varlat::variety::parse_handle(handle_text)};
  });
}

void varlat_variety_free(varlat_variety* v) { delete v; }

int varlat_variety_to_string(const varlat_variety* v, char** out_text) {
  return guarded([&] {
    require(v != nullptr && out_text != nullptr, "null argument");
    set_string(out_text, v->impl.to_string());
  });
}

int varlat_variety_check(const varlat_variety* v, const char* identity_text,
                         int* out_holds) {
  return guarded([&] {
    require(v != nullptr && identity_text != nullptr && out_holds != nullptr,
            "null argument");
    const auto id = varlat::words::parse_identity(identity_text);
    *out_holds = varlat::variety::holds(v->impl, id) ? 1 : 0;
  });
}

int varlat_variety_join(const varlat_variety* a, const varlat_variety* b,
                        varlat_variety** out) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && out != nullptr, "null argument");
    *out = new varlat_variety{varlat::variety::family_join(a->impl, b->impl)};
  });
}

int varlat_variety_meet(const varlat_variety* a, const varlat_variety* b,
                        varlat_variety** out) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && out != nullptr, "null argument");
    *out = new varlat_variety{varlat::variety::family_meet(a->impl, b->impl)};
  });
}

int varlat_variety_perm_group_json(const varlat_variety* v, int k, char** out_json) {
  return guarded([&] {
    require(v != nullptr && out_json != nullptr, "null argument");
    const auto group = varlat::variety::perm_group(v->impl, k);
    nlohmann::json doc = varlat::io::subgroup_to_json(group);
    doc["name"] = varlat::perm::display_name(group);
    set_string(out_json, doc.dump());
  });
}

int varlat_variety_free_object_json(const varlat_variety* v, int k, char** out_json) {
  return guarded([&] {
    require(v != nullptr && out_json != nullptr, "null argument");
    const auto f = varlat::variety::free_object(v->impl, k);
    set_string(out_json, varlat::io::free_object_to_json(f).dump());
  });
}

int varlat_family_lattice_json(int cap, char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    const auto fam = varlat::variety::family_lattice(cap);
    nlohmann::json doc = varlat::io::lattice_to_json(fam.lattice);
    nlohmann::json handles = nlohmann::json::array();
    for (const auto& h : fam.nodes) handles.push_back(h.to_string());
    doc["handles"] = std::move(handles);
    set_string(out_json, doc.dump());
  });
}

int varlat_family_lattice_dot(int cap, char** out_dot) {
  return guarded([&] {
    require(out_dot != nullptr, "null argument");
    const auto fam = varlat::variety::family_lattice(cap);
    set_string(out_dot, varlat::io::lattice_to_dot(fam.lattice));
  });
}

int varlat_verify(const char* suite, const char* options_json, char** out_json) {
  return guarded([&] {
    require(suite != nullptr && out_json != nullptr, "null argument");
    const auto opt = options_from_json(parse_options(options_json));
    const auto rep = varlat::verify::run_suite(suite, opt);
    set_string(out_json, varlat::io::suite_report_to_json(rep).dump());
  });
}

}  // extern "C"
