#include "varlat/io.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace varlat::io {

namespace {

using nlohmann::json;

std::vector<std::string> element_names(const lattice::FiniteLattice& l) {
  std::vector<std::string> names;
  names.reserve(l.size());
  for (std::size_t i = 0; i < l.size(); ++i)
    names.push_back(l.has_labels() ? l.label(static_cast<int>(i)) : std::to_string(i));
  return names;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string join_letters(const std::vector<std::string>& letters) {
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += ' ';
    out += l;
  }
  return out;
}

}  // namespace

json lattice_to_json(const lattice::FiniteLattice& l) {
  const auto names = element_names(l);
  json covers = json::array();
  auto pairs = l.covers();
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [lo, hi] : pairs)
    covers.push_back(json::array({names[static_cast<std::size_t>(lo)],
                                  names[static_cast<std::size_t>(hi)]}));
  return json{{"elements", names}, {"covers", covers}};
}

lattice::FiniteLattice lattice_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("elements") || !doc.contains("covers"))
    fail(errc::parse, "a lattice document needs \"elements\" and \"covers\"");
  const auto& elements = doc.at("elements");
  if (!elements.is_array() || elements.empty())
    fail(errc::parse, "\"elements\" must be a non-empty array of names");
  std::vector<std::string> names;
  std::map<std::string, int> index;
  for (const auto& e : elements) {
    if (!e.is_string()) fail(errc::parse, "element names must be strings");
    const auto name = e.get<std::string>();
    if (!index.emplace(name, static_cast<int>(names.size())).second)
      fail(errc::parse, "duplicate element name " + name);
    names.push_back(name);
  }
  const auto& covers = doc.at("covers");
  if (!covers.is_array()) fail(errc::parse, "\"covers\" must be an array of pairs");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& c : covers) {
    if (!c.is_array() || c.size() != 2 || !c.at(0).is_string() || !c.at(1).is_string())
      fail(errc::parse, "each cover must be a pair of element names");
    const auto a = c.at(0).get<std::string>();
    const auto b = c.at(1).get<std::string>();
    const auto ia = index.find(a);
    const auto ib = index.find(b);
    if (ia == index.end()) fail(errc::parse, "cover references unknown element " + a);
    if (ib == index.end()) fail(errc::parse, "cover references unknown element " + b);
    pairs.emplace_back(ia->second, ib->second);
  }
  return lattice::FiniteLattice::from_covers(names.size(), pairs, names);
}

std::string lattice_to_dot(const lattice::FiniteLattice& l) {
  const auto names = element_names(l);
  std::string out = "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const auto& name : names) out += "  " + dot_quote(name) + ";\n";
  auto pairs = l.covers();
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [lo, hi] : pairs)
    out += "  " + dot_quote(names[static_cast<std::size_t>(lo)]) + " -> " +
           dot_quote(names[static_cast<std::size_t>(hi)]) + ";\n";
  out += "}\n";
  return out;
}

json classification_to_json(const lattice::FiniteLattice& l) {
  const auto names = element_names(l);
  json out = json::array();
  for (const auto& c : lattice::classify_all(l)) {
    out.push_back(json{{"element", names[static_cast<std::size_t>(c.element)]},
                       {"neutral", c.neutral},
                       {"distributive", c.distributive},
                       {"standard", c.standard},
                       {"modular", c.modular},
                       {"cancellable", c.cancellable}});
  }
  return out;
}

json subgroup_to_json(const perm::Subgroup& g) {
  json members = json::array();
  for (const auto& p : g.members()) members.push_back(p.images());
  return json{{"n", g.degree()}, {"members", members}};
}

perm::Subgroup subgroup_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("members"))
    fail(errc::parse, "a subgroup document needs \"n\" and \"members\"");
  if (!doc.at("n").is_number_integer()) fail(errc::parse, "\"n\" must be an integer");
  const int degree = doc.at("n").get<int>();
  const auto& members = doc.at("members");
  if (!members.is_array()) fail(errc::parse, "\"members\" must be an array");
  std::vector<perm::Permutation> list;
  for (const auto& m : members) {
    if (!m.is_array()) fail(errc::parse, "each member must be an image array");
    std::vector<int> images;
    for (const auto& v : m) {
      if (!v.is_number_integer()) fail(errc::parse, "images must be integers");
      images.push_back(v.get<int>());
    }
    if (static_cast<int>(images.size()) != degree)
      fail(errc::parse, "member image length must equal n");
    list.emplace_back(std::move(images));
  }
  return perm::Subgroup(degree, std::move(list));
}

json subgroup_lattice_to_json(const grouplat::SubgroupLattice& sl) {
  json doc = lattice_to_json(sl.lattice);
  doc["n"] = sl.nodes.empty() ? 0 : sl.nodes.front().degree();
  json groups = json::array();
  for (std::size_t i = 0; i < sl.nodes.size(); ++i) {
    json g = subgroup_to_json(sl.nodes[i]);
    g["name"] = sl.names[i];
    g["order"] = sl.nodes[i].order();
    groups.push_back(std::move(g));
  }
  doc["subgroups"] = std::move(groups);
  return doc;
}

json free_object_to_json(const variety::FreeObject& f) {
  return json{{"generators", f.generators},
              {"elements", f.elements},
              {"generator_index", f.generator_index},
              {"table", f.table}};
}

json trace_steps_to_json(const deduce::DeductionTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    json sub = json::object();
    for (const auto& [letter, image] : s.substitution) sub[letter] = join_letters(image);
    steps.push_back(json{{"word", render_rword(s.word)},
                         {"rule_index", s.rule_index},
                         {"orientation", s.reversed ? "reversed" : "forward"},
                         {"substitution", std::move(sub)},
                         {"left_context", join_letters(s.left_context)},
                         {"right_context", join_letters(s.right_context)}});
  }
  return steps;
}

json witness_to_json(const variety::WitnessReport& w) {
  return json{{"degree", w.degree},
              {"v", w.v_name},
              {"g1", w.g1_name},
              {"g2", w.g2_name},
              {"joins_coincide", w.joins_coincide},
              {"meets_coincide", w.meets_coincide},
              {"zero_parts_equal", w.zero_parts_equal},
              {"varieties_differ", w.varieties_differ},
              {"splicing_ok", w.splicing_ok},
              {"detail", w.detail}};
}

json suite_report_to_json(const verify::SuiteReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return json{{"suite", rep.suite}, {"ok", rep.ok()}, {"checks", checks}};
}

}  // namespace varlat::io
