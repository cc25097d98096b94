#define DOCTEST_CONFIG_IMPLEMENT
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "varlat/varlat.h"

namespace {

std::string g_fixtures = "fixtures";

using nlohmann::json;

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { varlat_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
  json parsed() const { return json::parse(str()); }
};

struct OwnedLattice {
  varlat_lattice* ptr = nullptr;
  ~OwnedLattice() { varlat_lattice_free(ptr); }
};

struct OwnedVariety {
  varlat_variety* ptr = nullptr;
  ~OwnedVariety() { varlat_variety_free(ptr); }
};

constexpr const char* kPentagon = R"({
  "elements": ["0", "a", "b", "c", "1"],
  "covers": [["0", "a"], ["a", "c"], ["c", "1"], ["0", "b"], ["b", "1"]]
})";

json classification_row(const json& rows, const std::string& element) {
  for (const auto& row : rows)
    if (row.at("element") == element) return row;
  FAIL("no classification row for ", element);
  return {};
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(varlat_version()) == "1.0.0");
  CHECK(std::string(varlat_status_name(VARLAT_OK)) == "Ok");
  CHECK(std::string(varlat_status_name(VARLAT_ENOTLATTICE)) == "NotALattice");
  CHECK(std::string(varlat_status_name(VARLAT_EDEGREE)) == "DegreeTooLarge");
  CHECK(std::string(varlat_status_name(99)) == "InternalError");
}

TEST_CASE("lattice round trip and classification") {
  OwnedLattice l;
  REQUIRE(varlat_lattice_from_json(kPentagon, &l.ptr) == VARLAT_OK);

  OwnedString classified;
  REQUIRE(varlat_lattice_classify_json(l.ptr, &classified.ptr) == VARLAT_OK);
  const auto rows = classified.parsed();
  CHECK(rows.size() == 5);
  const auto b = classification_row(rows, "b");
  for (const char* key : {"neutral", "standard", "modular", "cancellable"})
    CHECK(b.at(key) == false);
  CHECK(b.at("distributive") == true);
  const auto a = classification_row(rows, "a");
  CHECK(a.at("modular") == true);
  CHECK(a.at("cancellable") == true);
  CHECK(a.at("standard") == false);
  CHECK(classification_row(rows, "0").at("neutral") == true);

  OwnedString dumped;
  REQUIRE(varlat_lattice_to_json(l.ptr, &dumped.ptr) == VARLAT_OK);
  OwnedLattice reread;
  REQUIRE(varlat_lattice_from_json(dumped.ptr, &reread.ptr) == VARLAT_OK);
  OwnedString dumped_again;
  REQUIRE(varlat_lattice_to_json(reread.ptr, &dumped_again.ptr) == VARLAT_OK);
  CHECK(dumped.parsed() == dumped_again.parsed());

  OwnedString dot;
  REQUIRE(varlat_lattice_dot(l.ptr, &dot.ptr) == VARLAT_OK);
  CHECK(dot.str().find("rankdir=BT") != std::string::npos);
  CHECK(dot.str().find("\"a\" -> \"c\"") != std::string::npos);
}

TEST_CASE("lattice failures set status and message") {
  OwnedLattice l;
  CHECK(varlat_lattice_from_json("{nope", &l.ptr) == VARLAT_EPARSE);
  CHECK(std::strlen(varlat_last_error()) > 0);

  const char* two_maximal = R"({"elements": ["a", "b", "c"], "covers": [["a", "b"], ["a", "c"]]})";
  CHECK(varlat_lattice_from_json(two_maximal, &l.ptr) == VARLAT_ENOTLATTICE);

  const char* loop = R"({"elements": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]})";
  CHECK(varlat_lattice_from_json(loop, &l.ptr) == VARLAT_ECYCLE);

  CHECK(varlat_lattice_from_json(nullptr, &l.ptr) == VARLAT_EINVAL);
  CHECK(varlat_lattice_from_json(kPentagon, nullptr) == VARLAT_EINVAL);

  REQUIRE(varlat_lattice_from_json(kPentagon, &l.ptr) == VARLAT_OK);
  CHECK(std::strlen(varlat_last_error()) == 0);
}

TEST_CASE("subgroup lattice endpoints") {
  OwnedString s3;
  REQUIRE(varlat_subgroups_json(3, &s3.ptr) == VARLAT_OK);
  const auto doc = s3.parsed();
  CHECK(doc.at("n") == 3);
  REQUIRE(doc.at("subgroups").size() == 6);
  CHECK(doc.at("subgroups")[0].at("name") == "T");
  CHECK(doc.at("subgroups")[0].at("order") == 1);
  CHECK(doc.at("elements").size() == 6);

  OwnedString s4;
  REQUIRE(varlat_subgroups_classify_json(4, &s4.ptr) == VARLAT_OK);
  CHECK(s4.parsed().at("classification").size() == 30);

  OwnedString too_big;
  CHECK(varlat_subgroups_json(6, &too_big.ptr) == VARLAT_EDEGREE);

  OwnedString figure;
  const std::string options = json{{"fixtures_dir", g_fixtures}}.dump();
  REQUIRE(varlat_subgroups_figure_json(3, options.c_str(), &figure.ptr) == VARLAT_OK);
  CHECK(figure.parsed().at("ok") == true);

  OwnedString unsupported_degree;
  CHECK(varlat_subgroups_figure_json(5, options.c_str(), &unsupported_degree.ptr) ==
        VARLAT_EINVAL);
}

TEST_CASE("variety handles over the C boundary") {
  OwnedVariety v;
  REQUIRE(varlat_variety_parse("X:2,3", &v.ptr) == VARLAT_OK);
  OwnedString text;
  REQUIRE(varlat_variety_to_string(v.ptr, &text.ptr) == VARLAT_OK);
  CHECK(text.str() == "X:2,3");

  int holds = -1;
  REQUIRE(varlat_variety_check(v.ptr, "x y = y x", &holds) == VARLAT_OK);
  CHECK(holds == 1);
  REQUIRE(varlat_variety_check(v.ptr, "x x = 0", &holds) == VARLAT_OK);
  CHECK(holds == 0);
  CHECK(varlat_variety_check(v.ptr, "x y", &holds) == VARLAT_EPARSE);
  CHECK(varlat_variety_check(v.ptr, nullptr, &holds) == VARLAT_EINVAL);

  OwnedVariety other;
  REQUIRE(varlat_variety_parse("Y:3,4", &other.ptr) == VARLAT_OK);
  OwnedVariety joined, met;
  REQUIRE(varlat_variety_join(v.ptr, other.ptr, &joined.ptr) == VARLAT_OK);
  REQUIRE(varlat_variety_meet(v.ptr, other.ptr, &met.ptr) == VARLAT_OK);
  OwnedString join_text, meet_text;
  REQUIRE(varlat_variety_to_string(joined.ptr, &join_text.ptr) == VARLAT_OK);
  REQUIRE(varlat_variety_to_string(met.ptr, &meet_text.ptr) == VARLAT_OK);
  CHECK(join_text.str() == "X:3,4");
  CHECK(meet_text.str() == "Y:2,3");

  OwnedVariety bad;
  CHECK(varlat_variety_parse("Q:1", &bad.ptr) == VARLAT_EPARSE);
  CHECK(varlat_variety_parse("X:1,2", &bad.ptr) == VARLAT_EINVAL);
}

TEST_CASE("permutation groups and free objects over the C boundary") {
  OwnedVariety trivial;
  REQUIRE(varlat_variety_parse("T", &trivial.ptr) == VARLAT_OK);
  OwnedString group;
  REQUIRE(varlat_variety_perm_group_json(trivial.ptr, 3, &group.ptr) == VARLAT_OK);
  CHECK(group.parsed().at("name") == "S3");
  CHECK(group.parsed().at("members").size() == 6);

  OwnedVariety family;
  REQUIRE(varlat_variety_parse("X:2,3", &family.ptr) == VARLAT_OK);
  OwnedString free_obj;
  REQUIRE(varlat_variety_free_object_json(family.ptr, 2, &free_obj.ptr) == VARLAT_OK);
  const auto doc = free_obj.parsed();
  CHECK(doc.at("elements").size() == 6);
  CHECK(doc.at("elements")[0] == "0");
  CHECK(doc.at("table").size() == 6);

  OwnedString overflow;
  CHECK(varlat_variety_perm_group_json(family.ptr, 7, &overflow.ptr) == VARLAT_EDEGREE);
  CHECK(varlat_variety_free_object_json(family.ptr, 5, &overflow.ptr) == VARLAT_ETOOLARGE);
}

TEST_CASE("raw bases over the C boundary") {
  OwnedVariety raw;
  REQUIRE(varlat_variety_parse("B:x1 x2 x3 = 0", &raw.ptr) == VARLAT_OK);
  int holds = -1;
  CHECK(varlat_variety_check(raw.ptr, "x y = y x", &holds) == VARLAT_EUNDECIDED);
  REQUIRE(varlat_variety_check(raw.ptr, "x y z = 0", &holds) == VARLAT_OK);
  CHECK(holds == 1);

  OwnedVariety other;
  REQUIRE(varlat_variety_parse("T", &other.ptr) == VARLAT_OK);
  OwnedVariety joined;
  CHECK(varlat_variety_join(raw.ptr, other.ptr, &joined.ptr) == VARLAT_EUNSUPPORTED);
}

TEST_CASE("family lattice over the C boundary") {
  OwnedString doc;
  REQUIRE(varlat_family_lattice_json(3, &doc.ptr) == VARLAT_OK);
  const auto parsed = doc.parsed();
  CHECK(parsed.at("elements").size() == 12);
  CHECK(parsed.at("handles").size() == 12);

  OwnedString dot;
  REQUIRE(varlat_family_lattice_dot(3, &dot.ptr) == VARLAT_OK);
  CHECK(dot.str().find("X_{inf,inf}") != std::string::npos);

  OwnedString too_big;
  CHECK(varlat_family_lattice_json(20, &too_big.ptr) == VARLAT_ETOOLARGE);
}

TEST_CASE("verification suites over the C boundary") {
  OwnedString report;
  REQUIRE(varlat_verify("lemma36", "{}", &report.ptr) == VARLAT_OK);
  const auto doc = report.parsed();
  CHECK(doc.at("suite") == "lemma36");
  CHECK(doc.at("ok") == true);
  CHECK(doc.at("checks").size() > 0);

  OwnedString bad;
  CHECK(varlat_verify("nope", nullptr, &bad.ptr) == VARLAT_EINVAL);
  CHECK(varlat_verify("lemma36", "{bad", &bad.ptr) == VARLAT_EPARSE);
  CHECK(varlat_verify(nullptr, nullptr, &bad.ptr) == VARLAT_EINVAL);

  varlat_string_free(nullptr);
}

int main(int argc, char** argv) {
  std::vector<char*> args{argv[0]};
  for (int i = 1; i < argc; ++i) {
    if (argv[i][0] != '-')
      g_fixtures = argv[i];
    else
      args.push_back(argv[i]);
  }
  doctest::Context context(static_cast<int>(args.size()), args.data());
  return context.run();
}
