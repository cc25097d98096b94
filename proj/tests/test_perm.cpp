#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "varlat/error.hpp"
#include "varlat/perm.hpp"

using varlat::Error;
using varlat::errc;
using varlat::perm::Permutation;
using varlat::perm::Subgroup;

namespace {

Permutation cyc(int degree, const char* text) { return Permutation::from_cycles(degree, text); }

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return errc::invalid_argument;
}

}  // namespace

TEST_CASE("composition applies the left factor first") {
  const auto p = cyc(3, "(12)");
  const auto q = cyc(3, "(13)");
  CHECK(compose(p, q) == Permutation({2, 3, 1}));
  CHECK(compose(q, p) == Permutation({3, 1, 2}));
  CHECK(compose(p, q).apply(1) == 2);
  CHECK(compose(p, p).is_identity());
}

TEST_CASE("permutation construction is validated") {
  CHECK(Permutation({2, 1, 3}).apply(1) == 2);
  CHECK(code_of([] { Permutation({1, 1}); }) == errc::invalid_argument);
  CHECK(code_of([] { Permutation({3, 1}); }) == errc::invalid_argument);
  CHECK(Permutation::identity(6).degree() == 6);
  CHECK(code_of([] { Permutation::identity(7); }) == errc::degree_too_large);
  CHECK(code_of([] { Permutation::identity(0); }) == errc::invalid_argument);
}

TEST_CASE("cycle notation round trips") {
  CHECK(cyc(3, "e").is_identity());
  CHECK(cyc(4, "(12)(34)") == Permutation({2, 1, 4, 3}));
  CHECK(cyc(4, "(1234)") == Permutation({2, 3, 4, 1}));
  CHECK(Permutation::identity(4).to_cycles() == "e");

  const auto s4 = Subgroup::symmetric(4);
  for (const auto& p : s4.members())
    CHECK(Permutation::from_cycles(4, p.to_cycles()) == p);

  CHECK(code_of([] { cyc(4, "(12"); }) == errc::parse);
  CHECK(code_of([] { cyc(4, "(15)"); }) == errc::parse);
  CHECK(code_of([] { cyc(4, "(11)"); }) == errc::parse);
  CHECK(code_of([] { cyc(4, ""); }) == errc::parse);
}

TEST_CASE("inverses cancel") {
  const auto s4 = Subgroup::symmetric(4);
  for (const auto& p : s4.members()) {
    CHECK(compose(p, p.inverse()).is_identity());
    CHECK(compose(p.inverse(), p).is_identity());
  }
}

TEST_CASE("subgroup closure and the stock subgroups") {
  CHECK(Subgroup::closure(3, std::vector<Permutation>{cyc(3, "(123)")}).order() == 3);
  CHECK(Subgroup::closure(4, std::vector<Permutation>{cyc(4, "(12)"), cyc(4, "(34)")}).order() == 4);
  CHECK(Subgroup::closure(4, std::vector<Permutation>{cyc(4, "(1234)"), cyc(4, "(12)")}).order() == 24);
  CHECK(Subgroup::closure(5, std::vector<Permutation>{cyc(5, "(12345)"), cyc(5, "(12)")}).order() == 120);
  CHECK(Subgroup::trivial(4).order() == 1);
  CHECK(Subgroup::symmetric(4).order() == 24);

  const auto a4 = Subgroup::alternating(4);
  CHECK(a4.order() == 12);
  CHECK(a4.contains(cyc(4, "(123)")));
  CHECK(a4.contains(cyc(4, "(12)(34)")));
  CHECK_FALSE(a4.contains(cyc(4, "(12)")));
}

TEST_CASE("subgroup construction rejects non-groups") {
  const std::vector<Permutation> not_closed{Permutation::identity(3), cyc(3, "(12)"),
                                            cyc(3, "(13)")};
  CHECK(code_of([&] { Subgroup(3, not_closed); }) == errc::invalid_argument);
  const std::vector<Permutation> no_identity{cyc(3, "(12)")};
  CHECK(code_of([&] { Subgroup(3, no_identity); }) == errc::invalid_argument);
}

TEST_CASE("subgroup meets and joins") {
  const auto t12 = Subgroup::closure(3, std::vector<Permutation>{cyc(3, "(12)")});
  const auto rot = Subgroup::closure(3, std::vector<Permutation>{cyc(3, "(123)")});
  CHECK(varlat::perm::subgroup_join(t12, rot) == Subgroup::symmetric(3));
  CHECK(varlat::perm::subgroup_meet(t12, rot) == Subgroup::trivial(3));

  const auto t12_4 = Subgroup::closure(4, std::vector<Permutation>{cyc(4, "(12)")});
  const auto t34_4 = Subgroup::closure(4, std::vector<Permutation>{cyc(4, "(34)")});
  const auto joined = varlat::perm::subgroup_join(t12_4, t34_4);
  CHECK(joined.order() == 4);
  CHECK(varlat::perm::conventional_name(joined) == "P12,34");

  CHECK(code_of([] {
          varlat::perm::subgroup_meet(Subgroup::trivial(3), Subgroup::trivial(4));
        }) == errc::invalid_argument);
}

TEST_CASE("all subgroups of S_3 in canonical order") {
  const auto groups = varlat::perm::all_subgroups(3);
  REQUIRE(groups.size() == 6);
  const auto names = varlat::perm::name_subgroups(groups);
  CHECK(names == std::vector<std::string>{"T", "T23", "T12", "T13", "C123", "S3"});
  for (std::size_t i = 0; i + 1 < groups.size(); ++i)
    CHECK(groups[i].order() <= groups[i + 1].order());
}

TEST_CASE("all subgroups of S_4 and their names") {
  const auto groups = varlat::perm::all_subgroups(4);
  REQUIRE(groups.size() == 30);

  std::map<int, int> profile;
  for (const auto& g : groups) ++profile[g.order()];
  const std::map<int, int> expected{{1, 1}, {2, 9}, {3, 4}, {4, 7},
                                    {6, 4}, {8, 3}, {12, 1}, {24, 1}};
  CHECK(profile == expected);

  const auto names = varlat::perm::name_subgroups(groups);
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  for (const char* expected_name :
       {"T", "S4", "A4", "V4", "T12", "T34", "C123", "C1234", "P12,34", "Stab4(1)",
        "Stab4(4)"})
    CHECK(std::count(names.begin(), names.end(), expected_name) == 1);

  const auto generic = [&](const std::string& prefix) {
    return std::count_if(names.begin(), names.end(), [&](const std::string& n) {
      return n.rfind(prefix, 0) == 0;
    });
  };
  CHECK(generic("G2_") == 3);
  CHECK(generic("G8_") == 3);
}

TEST_CASE("enumeration degree limits") {
  CHECK(varlat::perm::all_subgroups(1).size() == 1);
  CHECK(code_of([] { varlat::perm::all_subgroups(6); }) == errc::degree_too_large);
  CHECK(code_of([] { varlat::perm::all_subgroups(0); }) == errc::invalid_argument);
}

TEST_CASE("conventional names") {
  namespace vp = varlat::perm;
  CHECK(vp::conventional_name(Subgroup::trivial(4)) == "T");
  CHECK(vp::conventional_name(Subgroup::symmetric(4)) == "S4");
  CHECK(vp::conventional_name(Subgroup::alternating(4)) == "A4");
  CHECK(vp::conventional_name(Subgroup::closure(
            4, std::vector<Permutation>{cyc(4, "(12)(34)"), cyc(4, "(13)(24)")})) == "V4");
  CHECK(vp::conventional_name(Subgroup::closure(
            4, std::vector<Permutation>{cyc(4, "(123)")})) == "C123");
  CHECK(vp::conventional_name(Subgroup::closure(
            3, std::vector<Permutation>{cyc(3, "(123)")})) == "C123");
  CHECK(vp::conventional_name(Subgroup::closure(
            4, std::vector<Permutation>{cyc(4, "(1234)")})) == "C1234");
  CHECK(vp::conventional_name(Subgroup::closure(
            4, std::vector<Permutation>{cyc(4, "(12)"), cyc(4, "(13)")})) == "Stab4(4)");
  CHECK(vp::display_name(Subgroup::symmetric(4)) == "S4");
  CHECK(vp::display_name(Subgroup::closure(
            4, std::vector<Permutation>{cyc(4, "(1234)"), cyc(4, "(13)")})) == "G8");
}
